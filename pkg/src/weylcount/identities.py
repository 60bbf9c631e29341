"""Determinant generating functions for walk, tableau, matching and permutation counts,
and a harness that checks each one against brute-force oracles.

All series here are exponential generating functions in ``t``.  Orders are
truncation degrees in ``t``; the ``*_count`` helpers pick the order needed
for a requested ``n`` themselves.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable, Sequence

from . import objects, walks
from .series import (
    TruncatedSeries,
    as_count,
    bessel_I,
    bessel_J,
    egf_coefficient,
    matrix_of,
    series_determinant,
    series_exp,
)
from .walks import WeylPoint


# --------------------------------------------------------------------------
# generating functions
# --------------------------------------------------------------------------


_I = lru_cache(maxsize=None)(bessel_I)


def gm_walk_gf(lam: Iterable[int], mu: Iterable[int], order: int) -> TruncatedSeries:
    """EGF of oscillating walks ``lam -> mu``: ``det(I_{mu_i - lam_j} - I_{mu_i + lam_j})``."""
    lam, mu = WeylPoint(lam), WeylPoint(mu)
    if len(lam) != len(mu):
        raise ValueError(f"dimension mismatch: {len(lam)} vs {len(mu)}")
    m = matrix_of(
        len(lam), lambda i, j: _I(mu[i - 1] - lam[j - 1], order) - _I(mu[i - 1] + lam[j - 1], order)
    )
    return series_determinant(m)


def total_walk_gf(d: int, order: int) -> TruncatedSeries:
    """EGF of oscillating walks from the staircase with free endpoint: ``det(J_{i-j})``."""
    _check_d(d)
    return series_determinant(matrix_of(d, lambda i, j: bessel_J(i - j, order)))


def bounded_tableaux_sum_gf(d: int, order: int) -> TruncatedSeries:
    """``det(I_{i-j} + I_{i-j-1})``, assembled from I-series directly.

    Same series as :func:`total_walk_gf`; kept as a separate construction so
    the two can be compared.
    """
    _check_d(d)
    return series_determinant(matrix_of(d, lambda i, j: _I(i - j, order) + _I(i - j - 1, order)))


def bounded_matching_gf(d: int, order: int) -> TruncatedSeries:
    """``det(I_{i-j} - I_{i+j})``: walks from the staircase back to itself."""
    _check_d(d)
    return series_determinant(matrix_of(d, lambda i, j: _I(i - j, order) - _I(i + j, order)))


def gessel_gf(d: int, order: int) -> TruncatedSeries:
    """``det(I_{i-j})`` = ``sum_n u_d(n) t^(2n) / n!^2`` (LIS at most ``d``)."""
    _check_d(d)
    return series_determinant(matrix_of(d, lambda i, j: _I(i - j, order)))


def generalized_gessel_gf(lam: Iterable[int], nu: Iterable[int], order: int) -> TruncatedSeries:
    """``det(I_{lam_i - nu_j})``.

    The coefficient of ``t^(2n+k)``, with ``k = |lam| - |nu|``, times
    ``n! (n+k)!`` is ``sum_{|mu| = n + |lam|} f(lam; mu) f(nu; mu)``.
    """
    lam, nu = WeylPoint(lam), WeylPoint(nu)
    if len(lam) != len(nu):
        raise ValueError(f"dimension mismatch: {len(lam)} vs {len(nu)}")
    if lam.size < nu.size:
        raise ValueError("generalized_gessel_gf needs |lam| >= |nu|")
    return series_determinant(matrix_of(len(lam), lambda i, j: _I(lam[i - 1] - nu[j - 1], order)))


def bsm_egf(order: int) -> TruncatedSeries:
    """``exp(t + t^2)``: bilaterally symmetric matchings."""
    return series_exp(TruncatedSeries.from_coeffs([0, 1, 1], order))


def involution_egf(order: int) -> TruncatedSeries:
    """``exp(t + t^2/2)``: involutions."""
    return series_exp(TruncatedSeries.from_coeffs([0, 1, Fraction(1, 2)], order))


def _check_d(d: int) -> None:
    if d < 1:
        raise ValueError(f"dimension must be at least 1, got {d}")


# --------------------------------------------------------------------------
# coefficient extraction
# --------------------------------------------------------------------------


def egf_counts(s: TruncatedSeries) -> list[int]:
    """``[n! [t^n] s for n = 0..order]`` as integers."""
    return [as_count(egf_coefficient(s, n)) for n in range(s.order + 1)]


def gessel_counts(s: TruncatedSeries) -> list[int]:
    """``[n!^2 [t^(2n)] s for 2n <= order]``."""
    return [as_count(s[2 * n] * factorial(n) ** 2) for n in range(s.order // 2 + 1)]


def generalized_gessel_counts(s: TruncatedSeries, gap: int) -> list[int]:
    """``[n! (n+gap)! [t^(2n+gap)] s for 2n+gap <= order]``."""
    return [
        as_count(s[2 * n + gap] * factorial(n) * factorial(n + gap))
        for n in range((s.order - gap) // 2 + 1)
    ]


def total_walk_count(d: int, n: int) -> int:
    return egf_counts(total_walk_gf(d, n))[n]


def gessel_count(d: int, n: int) -> int:
    """``u_d(n)``, permutations of ``[n]`` with no increasing subsequence longer than ``d``."""
    return gessel_counts(gessel_gf(d, 2 * n))[n]


def gm_walk_count(lam: Iterable[int], mu: Iterable[int], n: int) -> int:
    return as_count(egf_coefficient(gm_walk_gf(lam, mu, n), n))


# --------------------------------------------------------------------------
# closed forms
# --------------------------------------------------------------------------


def bsm_closed_form(d: int, n: int) -> int:
    """Bilaterally symmetric matchings of ``[2n]`` with crossing number at most ``d``, ``d`` in 1..3.

    ``n`` may be even or odd; each parity has its own formula.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    m, odd = divmod(n, 2)
    f = factorial
    if d == 1:
        return comb(2 * m + 2, m + 1) // 2 if odd else comb(2 * m, m)
    if d == 2:
        if odd:
            return f(2 * m + 1) * f(2 * m + 2) // (f(m) * f(m + 1) ** 2 * f(m + 2))
        return f(2 * m + 1) * f(2 * m) // (f(m) * f(m + 1)) ** 2
    if d == 3:
        total = Fraction(0)
        for s in range(m + 1):
            if odd:
                head = Fraction(2 * f(2 * s + 2), f(s) * f(s + 1) * f(s + 2) ** 2)
                tail = Fraction(f(2 * m + 1), f(m - s) * f(m - s + 1))
            else:
                head = Fraction(2 * f(2 * s + 1), f(s) ** 2 * f(s + 1) * f(s + 2))
                tail = Fraction(f(2 * m), f(m - s) * f(m - s + 1))
            total += head * tail
        return as_count(total)
    raise ValueError(f"closed forms exist only for d in 1..3, got {d}")


def a000891(n: int) -> int:
    """``(1/2) C(2n+2, n+1) C_n``, with ``C_n`` the Catalan number."""
    return comb(2 * n + 2, n + 1) * comb(2 * n, n) // (2 * (n + 1))


# --------------------------------------------------------------------------
# verification reports
# --------------------------------------------------------------------------


@dataclass
class PointRecord:
    point: dict[str, object]
    formula: int
    oracle: int
    label: str = ""

    @property
    def match(self) -> bool:
        return self.formula == self.oracle


@dataclass
class VerificationReport:
    identity_name: str
    checked_range: str
    records: list[PointRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.records) and all(r.match for r in self.records)

    def add(self, point: dict[str, object], formula: int, oracle: int, label: str = "") -> None:
        self.records.append(PointRecord(dict(point), formula, oracle, label))

    def mismatches(self) -> list[PointRecord]:
        return [r for r in self.records if not r.match]


def _vec(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def check_bsm3_recurrence(values: Sequence[int], start: int = 0) -> VerificationReport:
    """Check the second-order recursion for ``v_n = bsm_{2n}(3)`` on every window.

    ``values[k]`` is ``v_{start+k}``.  Each record holds the two sides of
    ``(n+5)(n+4)(n+3) v_{n+2} = 4(5n^2+30n+43)(2n+3) v_{n+1} - 36(2n+3)(2n+1)(n+1) v_n``.
    When ``start == 0`` the initial values ``v_0 = 1`` and ``v_1 = 3`` are checked too.
    """
    if len(values) < 3:
        raise ValueError("the recurrence needs at least 3 consecutive values")
    report = VerificationReport(
        "bsm3-recurrence", f"n={start}..{start + len(values) - 1}"
    )
    if start == 0:
        report.add({"n": 0}, int(values[0]), 1, "initial")
        report.add({"n": 1}, int(values[1]), 3, "initial")
    for k in range(len(values) - 2):
        n = start + k
        v0, v1, v2 = (int(v) for v in values[k : k + 3])
        lhs = (n + 5) * (n + 4) * (n + 3) * v2
        rhs = 4 * (5 * n * n + 30 * n + 43) * (2 * n + 3) * v1 - 36 * (2 * n + 3) * (2 * n + 1) * (n + 1) * v0
        report.add({"n": n}, lhs, rhs, "recurrence")
    return report


def _tableau_shape_counts(n: int, d: int | None) -> Counter:
    return Counter(t.shape for t in objects.enumerate_oscillating_tableaux(n, height_bound=d))


def _ballot_layers(lam: WeylPoint, n: int) -> list[dict[tuple[int, ...], int]]:
    # forward DP over +e_i steps; independent of the determinant side
    d = len(lam)
    layers = [{tuple(lam): 1}]
    for _ in range(n):
        nxt: dict[tuple[int, ...], int] = {}
        for p, c in layers[-1].items():
            for i in range(d):
                q = p[:i] + (p[i] + 1,) + p[i + 1 :]
                if walks.in_chamber(q):
                    nxt[q] = nxt.get(q, 0) + c
        layers.append(nxt)
    return layers


def _verify_walk_gf_vs_dp(max_d: int, max_n: int) -> VerificationReport:
    report = VerificationReport(
        "thm11-vs-dp", f"d=1..{max_d}, coordinates<=d+3, n=0..{max_n}"
    )
    for d in range(1, max_d + 1):
        points = walks.weyl_points(d, d + 3)
        for lam in points:
            layers = walks.oscillating_walk_layers(lam, max_n)
            for mu in points:
                counts = egf_counts(gm_walk_gf(lam, mu, max_n))
                for n in range(max_n + 1):
                    report.add(
                        {"d": d, "lambda": _vec(lam), "mu": _vec(mu), "n": n},
                        counts[n],
                        layers[n].get(mu, 0),
                    )
    return report


def _verify_total_walks_vs_dp(max_d: int, max_n: int) -> VerificationReport:
    report = VerificationReport("thm12-vs-dp", f"d=1..{max_d}, n=0..{max_n}")
    for d in range(1, max_d + 1):
        counts = egf_counts(total_walk_gf(d, max_n))
        layers = walks.oscillating_walk_layers(walks.staircase(d), max_n)
        for n in range(max_n + 1):
            report.add({"d": d, "n": n}, counts[n], sum(layers[n].values()))
    return report


def _verify_gessel_vs_lis(max_d: int, max_n: int) -> VerificationReport:
    report = VerificationReport("thm14-vs-lis", f"d=1..{max_d}, n=0..{max_n}")
    for d in range(1, max_d + 1):
        counts = gessel_counts(gessel_gf(d, 2 * max_n))
        for n in range(max_n + 1):
            report.add({"d": d, "n": n}, counts[n], objects.count_lis_bounded(n, d))
    return report


def _verify_skew_pairs(max_d: int, max_n: int) -> VerificationReport:
    report = VerificationReport(
        "thm41-vs-pairs", f"d=1..{max_d}, lambda,nu with coordinates<=d+2, n=0..{max_n}"
    )
    for d in range(1, max_d + 1):
        points = walks.weyl_points(d, d + 2)
        layers = {p: _ballot_layers(p, max_n + 2 * d + 2) for p in points}
        for lam in points:
            for nu in points:
                gap = lam.size - nu.size
                if gap < 0:
                    continue
                counts = generalized_gessel_counts(
                    generalized_gessel_gf(lam, nu, 2 * max_n + gap), gap
                )
                for n in range(max_n + 1):
                    from_lam = layers[lam][n]
                    from_nu = layers[nu][n + gap]
                    oracle = sum(c * from_nu.get(mu, 0) for mu, c in from_lam.items())
                    report.add(
                        {"d": d, "lambda": _vec(lam), "nu": _vec(nu), "n": n}, counts[n], oracle
                    )
    return report


def _verify_exp_formulas(max_n: int) -> VerificationReport:
    report = VerificationReport("prop21-vs-brute", f"n=0..{max_n}")
    bsm = egf_counts(bsm_egf(max_n))
    inv = egf_counts(involution_egf(max_n))
    for n in range(max_n + 1):
        report.add({"n": n}, bsm[n], objects.count_matchings(n, bilateral=True), "bilateral-matchings")
    for n in range(max_n + 1):
        report.add({"n": n}, inv[n], objects.count_involutions(n), "involutions")
    return report


def _verify_hook_length(max_n: int) -> VerificationReport:
    report = VerificationReport("hlf-vs-enum", f"|shape|=0..{max_n}")
    for size in range(max_n + 1):
        for shape in objects.partitions_of(size):
            point = {"shape": _vec(shape), "n": size}
            hook = walks.hook_length_count(shape)
            report.add(point, hook, sum(1 for _ in objects.enumerate_syt(shape)), "syt")
            d = max(1, shape.height)
            delta, target = walks.staircase(d), walks.to_weyl_point(shape, d)
            report.add(
                point,
                walks.ballot_walk_count_det(delta, target),
                walks.ballot_walk_count(delta, target),
                "ballot-det-vs-dp",
            )
    return report


def _verify_closed_forms(max_d: int, max_n: int) -> VerificationReport:
    series_n = max(20, max_n)
    top_d = min(max_d, 3)
    report = VerificationReport(
        "closed-forms-vs-brute",
        f"d=1..{top_d}, brute force n=0..{max_n}, determinant series n=0..{series_n}",
    )
    for d in range(1, top_d + 1):
        for n in range(max_n + 1):
            report.add(
                {"d": d, "n": n},
                bsm_closed_form(d, n),
                objects.count_matchings(n, max_crossing=d, bilateral=True),
                "brute-force",
            )
        counts = egf_counts(total_walk_gf(d, series_n))
        for n in range(series_n + 1):
            report.add({"d": d, "n": n}, bsm_closed_form(d, n), counts[n], "determinant")
    return report


def _verify_four_way(max_d: int, max_n: int) -> VerificationReport:
    report = VerificationReport("cor22-four-way", f"d=1..{max_d}, n=0..{max_n}")
    for d in range(1, max_d + 1):
        counts = egf_counts(total_walk_gf(d, max_n))
        for n in range(max_n + 1):
            point = {"d": d, "n": n}
            report.add(
                point,
                counts[n],
                objects.count_oscillating_tableaux(2 * n, d, final_shape=(), palindromic=True),
                "palindromic-tableaux",
            )
            report.add(
                point,
                counts[n],
                objects.count_matchings(n, max_crossing=d, bilateral=True),
                "bilateral-matchings",
            )
            report.add(point, counts[n], objects.count_oscillating_tableaux(n, d), "tableaux-any-shape")
    return report


def _verify_sum_squares(max_n: int) -> VerificationReport:
    report = VerificationReport("eq5-sum-squares", f"n=0..{max_n}")
    for n in range(max_n + 1):
        shapes = [mu for r in range(n // 2 + 1) for mu in objects.partitions_of(n - 2 * r)]
        formula = sum(objects.tilde_f(mu, n) ** 2 for mu in shapes)
        report.add({"n": n}, formula, sum(1 for _ in objects.enumerate_matchings(n)), "matchings")
        halves = _tableau_shape_counts(n, None)
        report.add(
            {"n": n},
            sum(c * c for c in halves.values()),
            objects.count_oscillating_tableaux(2 * n, final_shape=()),
            "gamma-split",
        )
        report.add(
            {"n": n},
            sum(walks.hook_length_count(mu) ** 2 for mu in objects.partitions_of(n)),
            factorial(n),
            "classical",
        )
    return report


def _verify_sums(max_n: int) -> VerificationReport:
    report = VerificationReport("eq6-sum", f"n=0..{max_n}")
    bsm = egf_counts(bsm_egf(max_n))
    inv = egf_counts(involution_egf(max_n))
    for n in range(max_n + 1):
        shapes = [mu for r in range(n // 2 + 1) for mu in objects.partitions_of(n - 2 * r)]
        report.add({"n": n}, bsm[n], sum(objects.tilde_f(mu, n) for mu in shapes), "tilde-f-sum")
        report.add({"n": n}, bsm[n], objects.count_oscillating_tableaux(n), "tableaux-any-shape")
        report.add(
            {"n": n},
            inv[n],
            sum(walks.hook_length_count(mu) for mu in objects.partitions_of(n)),
            "classical",
        )
    return report


def _verify_bounded_sum_squares(max_d: int, max_n: int) -> VerificationReport:
    report = VerificationReport("eq7-bounded-sum-squares", f"d=1..{max_d}, n=0..{max_n}")
    for d in range(1, max_d + 1):
        counts = egf_counts(bounded_matching_gf(d, 2 * max_n))
        delta = walks.staircase(d)
        layers = walks.oscillating_walk_layers(delta, 2 * max_n)
        for n in range(max_n + 1):
            point = {"d": d, "n": n}
            formula = counts[2 * n]
            halves = _tableau_shape_counts(n, d)
            report.add(point, formula, sum(c * c for c in halves.values()), "tableaux-sum-squares")
            report.add(point, formula, layers[2 * n].get(delta, 0), "walks")
            report.add(point, formula, objects.count_matchings(n, max_crossing=d), "noncrossing")
            report.add(
                point, formula, objects.count_matchings(n, max_crossing=d, use_nesting=True), "nonnesting"
            )
    return report


def _verify_bounded_sums(max_d: int, max_n: int) -> VerificationReport:
    report = VerificationReport("eq8-bounded-sum", f"d=1..{max_d}, n=0..{max_n}")
    for d in range(1, max_d + 1):
        counts = egf_counts(bounded_tableaux_sum_gf(d, max_n))
        j_counts = egf_counts(total_walk_gf(d, max_n))
        for n in range(max_n + 1):
            point = {"d": d, "n": n}
            report.add(point, counts[n], objects.count_oscillating_tableaux(n, d), "tableaux-any-shape")
            report.add(point, counts[n], j_counts[n], "j-construction")
    return report


def _verify_bsm3_recurrence(max_n: int) -> VerificationReport:
    return check_bsm3_recurrence([bsm_closed_form(3, 2 * n) for n in range(max_n + 1)])


# key -> (runner, takes d, default max_d, default max_n)
IDENTITIES: dict[str, tuple[Callable[..., VerificationReport], bool, int | None, int]] = {
    "cor22-four-way": (_verify_four_way, True, 3, 5),
    "eq5-sum-squares": (_verify_sum_squares, False, None, 6),
    "eq6-sum": (_verify_sums, False, None, 7),
    "eq7-bounded-sum-squares": (_verify_bounded_sum_squares, True, 3, 5),
    "eq8-bounded-sum": (_verify_bounded_sums, True, 3, 5),
    "thm11-vs-dp": (_verify_walk_gf_vs_dp, True, 3, 10),
    "thm12-vs-dp": (_verify_total_walks_vs_dp, True, 4, 12),
    "thm14-vs-lis": (_verify_gessel_vs_lis, True, 4, 8),
    "thm41-vs-pairs": (_verify_skew_pairs, True, 3, 8),
    "prop21-vs-brute": (_verify_exp_formulas, False, None, 7),
    "hlf-vs-enum": (_verify_hook_length, False, None, 8),
    "closed-forms-vs-brute": (_verify_closed_forms, True, 3, 7),
    "bsm3-recurrence": (_verify_bsm3_recurrence, False, None, 10),
}


def verify_identity(name: str, max_d: int | None = None, max_n: int | None = None) -> VerificationReport:
    """Run the named check over ``d = 1..max_d`` and ``n = 0..max_n``.

    Defaults come from :data:`IDENTITIES`.  Unknown names raise ``KeyError``.
    """
    if name not in IDENTITIES:
        raise KeyError(f"unknown identity {name!r}; known: {', '.join(sorted(IDENTITIES))}")
    runner, takes_d, default_d, default_n = IDENTITIES[name]
    n = default_n if max_n is None else max_n
    if n < 0:
        raise ValueError("max_n must be nonnegative")
    if takes_d:
        d = default_d if max_d is None else max_d
        if d < 1:
            raise ValueError("max_d must be at least 1")
        return runner(d, n)
    return runner(n)
