from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from weylcount.objects import count_involutions, count_matchings
from weylcount.series import (
    TruncatedSeries,
    berkowitz_determinant,
    bessel_I,
    bessel_J,
    egf_coefficient,
    leibniz_determinant,
    series_add,
    series_determinant,
    series_exp,
    series_mul,
)


def S(*coeffs, order=None):
    order = len(coeffs) - 1 if order is None else order
    return TruncatedSeries.from_coeffs(coeffs, order)


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def series_of(draw, order):
    return TruncatedSeries(tuple(draw(st.lists(fractions, min_size=order + 1, max_size=order + 1))))


@st.composite
def series_tuple(draw, k):
    order = draw(st.integers(0, 6))
    return [draw(series_of(order)) for _ in range(k)]


@st.composite
def series_matrix(draw, d_max=3):
    d = draw(st.integers(1, d_max))
    order = draw(st.integers(0, 4))
    return [[draw(series_of(order)) for _ in range(d)] for _ in range(d)]


# -- construction --------------------------------------------------------


def test_rationals_are_normalized():
    s = TruncatedSeries((Fraction(2, 4), 0, Fraction(-3, 6)))
    assert s[0] == Fraction(1, 2) and s[0].denominator == 2
    assert s[1] == 0 and s[1].denominator == 1
    assert s[2].numerator == -1


def test_from_coeffs_pads_and_cuts():
    assert S(1, 2, order=3).coeffs == (1, 2, 0, 0)
    assert S(1, 2, 3, order=1).coeffs == (1, 2)
    with pytest.raises(ValueError):
        TruncatedSeries(())


# -- add / mul -----------------------------------------------------------


def test_add_cancellation():
    assert series_add(S(1, 1), S(1, -1)) == S(2, 0)


def test_bessel_sum_is_J():
    assert series_add(bessel_I(1, 8), bessel_I(0, 8)) == bessel_J(1, 8)


def test_add_zero_identity():
    a = S(1, Fraction(2, 3), -4)
    assert a + TruncatedSeries.zero(2) == a


def test_order_mismatch_rejected():
    with pytest.raises(ValueError, match="order"):
        series_add(S(1, 2), S(1, 2, 3))
    with pytest.raises(ValueError, match="order"):
        series_mul(S(1, 2), S(1, 2, 3))


def test_mul_examples():
    assert series_mul(S(1, 1, 0), S(1, -1, 0)) == S(1, 0, -1)
    # I_0 = 1 + t^2 + t^4/4 + ...; (1 + t^2)^2 has t^2 coefficient 2
    assert series_mul(bessel_I(0, 4), bessel_I(0, 4))[2] == 2
    a = S(3, Fraction(1, 7), 0, 2)
    assert a * TruncatedSeries.one(3) == a


def test_mul_truncates():
    assert S(0, 1, 0) * S(0, 1, 0) == S(0, 0, 1)
    assert S(0, 1) * S(0, 1) == S(0, 0)


# -- exp -----------------------------------------------------------------


def test_exp_zero():
    assert series_exp(TruncatedSeries.zero(5)) == TruncatedSeries.one(5)


def test_exp_bilateral_matchings():
    s = series_exp(S(0, 1, 1, order=4))
    expected = [count_matchings(n, bilateral=True) for n in range(5)]
    assert expected == [1, 1, 3, 7, 25]
    assert [egf_coefficient(s, n) for n in range(5)] == expected


def test_exp_involutions():
    s = series_exp(S(0, 1, Fraction(1, 2), order=4))
    expected = [count_involutions(n) for n in range(5)]
    assert expected == [1, 1, 2, 4, 10]
    assert [egf_coefficient(s, n) for n in range(5)] == expected


def test_exp_needs_zero_constant():
    with pytest.raises(ValueError):
        series_exp(S(1, 1))


# -- Bessel --------------------------------------------------------------


def test_bessel_I_examples():
    assert bessel_I(0, 4).coeffs == (1, 0, 1, 0, Fraction(1, 4))
    assert bessel_I(1, 5).coeffs == (0, 1, 0, Fraction(1, 2), 0, Fraction(1, 12))


def test_bessel_I_general_term():
    s = bessel_I(3, 11)
    for n in range(5):
        assert s[2 * n + 3] == Fraction(1, factorial(n) * factorial(n + 3))


def test_bessel_J_examples():
    assert bessel_J(0, 3).coeffs == (1, 1, 1, Fraction(1, 2))
    assert bessel_J(1, 2).coeffs == (1, 1, 1)


@given(st.integers(-8, 8), st.integers(0, 14))
def test_bessel_symmetry_and_parity(s, order):
    a = bessel_I(s, order)
    assert a == bessel_I(-s, order)
    for k, c in enumerate(a):
        if (k - abs(s)) % 2:
            assert c == 0
    assert (bessel_J(s, order) - bessel_I(s, order) - bessel_I(s - 1, order)).is_zero()


# -- determinants --------------------------------------------------------


def test_det_1x1_catalan_series():
    order = 12
    det = series_determinant([[bessel_I(0, order) - bessel_I(2, order)]])
    expected = [0] * (order + 1)
    for n in range(order // 2 + 1):
        expected[2 * n] = Fraction(1, factorial(n) * factorial(n + 1))
    assert det == S(*expected)


def test_det_identity():
    one, zero = TruncatedSeries.one(3), TruncatedSeries.zero(3)
    assert series_determinant([[one, zero], [zero, one]]) == one


def test_det_rejects_bad_input():
    with pytest.raises(ValueError):
        series_determinant([[S(1), S(1)], [S(1)]])
    with pytest.raises(ValueError):
        series_determinant([[S(1, 0), S(1)], [S(1), S(1)]])
    with pytest.raises(ValueError):
        series_determinant([])


def test_berkowitz_small_integer_matrices():
    assert berkowitz_determinant([[7]], 1) == 7
    assert berkowitz_determinant([[1, 2], [3, 4]], 1) == -2
    m = [[2, -1, 0, 3], [1, 4, 2, 0], [0, 5, -3, 1], [2, 2, 1, 1]]
    assert berkowitz_determinant(m, 1) == leibniz_determinant(m)


@settings(max_examples=60, deadline=None)
@given(series_matrix())
def test_leibniz_matches_berkowitz(m):
    assert series_determinant(m, "leibniz") == series_determinant(m, "berkowitz")


def test_auto_uses_berkowitz_beyond_five():
    order = 6
    m = [[bessel_J(i - j, order) for j in range(6)] for i in range(6)]
    assert series_determinant(m) == series_determinant(m, "leibniz")


@settings(max_examples=40, deadline=None)
@given(series_matrix(), st.data())
def test_row_swap_negates(m, data):
    d = len(m)
    if d < 2:
        return
    i = data.draw(st.integers(0, d - 1))
    j = data.draw(st.integers(0, d - 1).filter(lambda x: x != i))
    swapped = list(m)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert series_determinant(swapped) == -series_determinant(m)


@settings(max_examples=40, deadline=None)
@given(series_matrix(), st.data())
def test_row_linearity(m, data):
    d, order = len(m), m[0][0].order
    row = data.draw(st.integers(0, d - 1))
    c = data.draw(series_of(order))
    scaled = [r if k != row else [c * x for x in r] for k, r in enumerate(m)]
    assert series_determinant(scaled) == c * series_determinant(m)


# -- ring laws -----------------------------------------------------------


@given(series_tuple(3))
def test_ring_laws(abc):
    a, b, c = abc
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(st.integers(0, 8), st.data())
def test_exp_of_negation_is_inverse(order, data):
    p = data.draw(series_of(order))
    p = p - p[0]
    assert series_exp(p) * series_exp(-p) == TruncatedSeries.one(order)


# -- egf_coefficient ------------------------------------------------------


def test_egf_coefficient_examples():
    assert egf_coefficient(series_exp(S(0, 1, 1)), 2) == 3
    assert egf_coefficient(TruncatedSeries.one(0), 0) == 1
    assert egf_coefficient(bessel_I(0, 2), 2) == 2


def test_egf_coefficient_out_of_range():
    with pytest.raises(IndexError):
        egf_coefficient(TruncatedSeries.one(3), 4)
