"""Truncated power series over the rationals.

Every series carries an explicit truncation order (the largest exponent of
``t`` kept).  Binary operations require equal orders; there is no implicit
truncation.  Coefficients are :class:`fractions.Fraction`, so arithmetic is
exact and always in lowest terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Callable, Iterable, Sequence, TypeVar, Union

Scalar = Union[int, Fraction]

R = TypeVar("R")


@dataclass(frozen=True)
class TruncatedSeries:
    """Exact power series ``sum c_k t^k`` kept for ``k <= order``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar], order: int) -> TruncatedSeries:
        """Pad (with zeros) or cut ``coeffs`` to exactly ``order + 1`` terms."""
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        cs = list(coeffs)[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        return cls(tuple(cs))

    @classmethod
    def constant(cls, c: Scalar, order: int) -> TruncatedSeries:
        return cls.from_coeffs([c], order)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs([], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs([1], order)

    @classmethod
    def monomial(cls, c: Scalar, k: int, order: int) -> TruncatedSeries:
        """``c * t**k`` (vanishes if ``k > order``)."""
        cs = [0] * (order + 1)
        if k <= order:
            cs[k] = c
        return cls(tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: TruncatedSeries) -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation order mismatch: {self.order} vs {other.order}"
            )

    def _lift(self, other: TruncatedSeries | Scalar) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(a * other for a in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        n = len(a)
        # skip leading zeros; determinants of Bessel entries are mostly sparse
        nz_a = [(i, x) for i, x in enumerate(a) if x]
        out = [Fraction(0)] * n
        for i, x in nz_a:
            for j in range(n - i):
                y = b[j]
                if y:
                    out[i + j] += x * y
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def derivative(self) -> TruncatedSeries:
        """Formal derivative, kept at the same order (top coefficient becomes 0)."""
        cs = [k * self.coeffs[k] for k in range(1, len(self.coeffs))]
        return TruncatedSeries.from_coeffs(cs, self.order)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*t^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(t^{self.order + 1})"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_exp(p: TruncatedSeries) -> TruncatedSeries:
    """``exp(p)`` for ``p`` with zero constant term.

    Solves ``f' = p' f`` with ``f(0) = 1`` term by term:
    ``k f_k = sum_{j=1..k} j p_j f_{k-j}``.
    """
    if p[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    n = p.order
    f = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if p[j]:
                acc += j * p[j] * f[k - j]
        f[k] = acc / k
    return TruncatedSeries(tuple(f))


def bessel_I(s: int, order: int) -> TruncatedSeries:
    """Hyperbolic Bessel series ``I_s(2t) = sum_n t^(2n+|s|) / (n! (n+|s|)!)``."""
    s = abs(s)
    cs = [Fraction(0)] * (order + 1)
    n = 0
    while 2 * n + s <= order:
        cs[2 * n + s] = Fraction(1, factorial(n) * factorial(n + s))
        n += 1
    return TruncatedSeries(tuple(cs))


def bessel_J(s: int, order: int) -> TruncatedSeries:
    """``J_s(2t) = I_s(2t) + I_{s-1}(2t)``."""
    return bessel_I(s, order) + bessel_I(s - 1, order)


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def leibniz_determinant(m: Sequence[Sequence[R]]) -> R:
    """Determinant as the signed sum over all permutations.  Works in any commutative ring."""
    d = len(m)
    total = None
    for perm in permutations(range(d)):
        term = m[0][perm[0]]
        for i in range(1, d):
            term = term * m[i][perm[i]]
        if permutation_sign(perm) < 0:
            term = -term
        total = term if total is None else total + term
    return total


def berkowitz_determinant(m: Sequence[Sequence[R]], one: R) -> R:
    """Division-free determinant via Berkowitz's characteristic-polynomial recursion.

    Grows the leading principal submatrix one row/column at a time; the
    characteristic polynomial of the next submatrix is a lower-triangular
    Toeplitz matrix (built from ``1, -a_kk, -R S, -R A S, ...``) applied to the
    previous one.  Only ring operations are used.
    """
    d = len(m)
    poly = [one]  # highest degree first
    for k in range(d):
        head = [row[:k] for row in m[:k]]
        r = m[k][:k]
        col = [m[i][k] for i in range(k)]
        toeplitz = [one, -m[k][k]]
        v = col
        for _ in range(k):
            toeplitz.append(-_dot(r, v, one))
            v = [_dot(row, v, one) for row in head]
        nxt = []
        for i in range(k + 2):
            acc = None
            for j in range(max(0, i - len(toeplitz) + 1), min(i, k) + 1):
                term = toeplitz[i - j] * poly[j]
                acc = term if acc is None else acc + term
            nxt.append(acc)
        poly = nxt
    det = poly[d]
    return -det if d % 2 else det


def _dot(a: Sequence[R], b: Sequence[R], one: R) -> R:
    acc = one - one
    for x, y in zip(a, b):
        acc = acc + x * y
    return acc


LEIBNIZ_MAX_DIM = 5


def series_determinant(
    m: Sequence[Sequence[TruncatedSeries]], method: str = "auto"
) -> TruncatedSeries:
    """Determinant of a square matrix of truncated series.

    ``method`` is ``"leibniz"``, ``"berkowitz"`` or ``"auto"`` (Leibniz up to
    5x5, Berkowitz beyond).  Neither needs division, which matters because the
    truncated ring has zero divisors.
    """
    d = len(m)
    if d == 0:
        raise ValueError("determinant of an empty matrix")
    if any(len(row) != d for row in m):
        raise ValueError("matrix is not square")
    order = m[0][0].order
    for row in m:
        for x in row:
            if not isinstance(x, TruncatedSeries):
                raise TypeError("matrix entries must be TruncatedSeries")
            if x.order != order:
                raise ValueError(f"truncation order mismatch: {x.order} vs {order}")
    if method == "auto":
        method = "leibniz" if d <= LEIBNIZ_MAX_DIM else "berkowitz"
    if method == "leibniz":
        return leibniz_determinant(m)
    if method == "berkowitz":
        return berkowitz_determinant(m, TruncatedSeries.one(order))
    raise ValueError(f"unknown determinant method {method!r}")


def matrix_of(
    d: int, entry: Callable[[int, int], TruncatedSeries]
) -> list[list[TruncatedSeries]]:
    """``[[entry(i, j)]]`` with 1-based indices, matching the usual det(...)_{1<=i,j<=d} notation."""
    return [[entry(i, j) for j in range(1, d + 1)] for i in range(1, d + 1)]


def egf_coefficient(s: TruncatedSeries, n: int) -> Fraction:
    """``n! [t^n] s``: the count an exponential generating function encodes at ``n``."""
    if n < 0 or n > s.order:
        raise IndexError(f"coefficient {n} outside truncation order {s.order}")
    return s[n] * factorial(n)


def as_count(x: Fraction) -> int:
    """Convert a rational that must be a nonnegative integer (a count)."""
    if x.denominator != 1 or x < 0:
        raise ArithmeticError(f"expected a nonnegative integer count, got {x}")
    return int(x)
