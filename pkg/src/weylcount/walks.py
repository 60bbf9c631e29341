"""Lattice walks in the Weyl chamber ``x_1 > x_2 > ... > x_d > 0``.

Two step sets are covered: positive unit steps (ballot walks, which encode
standard Young tableaux) and positive-or-negative unit steps (oscillating
walks, which encode oscillating tableaux).  Points of the chamber are
:class:`WeylPoint`; the matching tableau shapes are :class:`Partition`.
Converting between the two always goes through :func:`to_weyl_point` and
:func:`to_partition`, which add or remove the staircase ``(d, d-1, ..., 1)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable

from .series import berkowitz_determinant


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ValueError(f"partition parts must be nonnegative: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


class WeylPoint(tuple):
    """Strictly decreasing tuple of positive integers."""

    def __new__(cls, coords: Iterable[int]) -> WeylPoint:
        coords = [int(c) for c in coords]
        if not coords:
            raise ValueError("a Weyl point needs at least one coordinate")
        if coords[-1] <= 0 or any(coords[i] <= coords[i + 1] for i in range(len(coords) - 1)):
            raise ValueError(f"not strictly decreasing and positive: {coords}")
        return super().__new__(cls, coords)

    @property
    def dim(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"WeylPoint({tuple(self)})"


def in_chamber(coords: tuple[int, ...]) -> bool:
    return coords[-1] > 0 and all(coords[i] > coords[i + 1] for i in range(len(coords) - 1))


def staircase(d: int) -> WeylPoint:
    """The point ``(d, d-1, ..., 1)``, image of the empty partition."""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    return WeylPoint(range(d, 0, -1))


def to_weyl_point(shape: Iterable[int], d: int) -> WeylPoint:
    shape = Partition(shape)
    if shape.height > d:
        raise ValueError(f"partition {tuple(shape)} has more than {d} parts")
    padded = list(shape) + [0] * (d - shape.height)
    return WeylPoint(p + d - i for i, p in enumerate(padded))


def to_partition(point: Iterable[int]) -> Partition:
    point = WeylPoint(point)
    d = point.dim
    return Partition(x - (d - i) for i, x in enumerate(point))


def weyl_points(d: int, max_coord: int) -> list[WeylPoint]:
    """All chamber points with every coordinate at most ``max_coord``, sorted."""
    out: list[WeylPoint] = []

    def rec(prefix: list[int], upper: int) -> None:
        if len(prefix) == d:
            out.append(WeylPoint(prefix))
            return
        remaining = d - len(prefix)
        for x in range(remaining, upper + 1):
            rec(prefix + [x], x - 1)

    rec([], max_coord)
    return sorted(out)


def closure_point(coords: Iterable[int]) -> tuple[int, ...]:
    """Validate a point of the closed chamber ``x_1 >= ... >= x_d >= 0``."""
    coords = tuple(int(c) for c in coords)
    if not coords or coords[-1] < 0 or any(coords[i] < coords[i + 1] for i in range(len(coords) - 1)):
        raise ValueError(f"not weakly decreasing and nonnegative: {coords}")
    return coords


def _check_dims(lam: tuple[int, ...], mu: tuple[int, ...]) -> None:
    if len(lam) != len(mu):
        raise ValueError(f"dimension mismatch: {len(lam)} vs {len(mu)}")


def ballot_walk_count(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Walks from ``lam`` to ``mu`` with positive unit steps, staying in the chamber.

    ``mu`` may lie on a wall of the closed chamber, giving 0.  Evaluates the
    recursion ``f(mu) = sum_i f(mu - e_i)`` with ``f(mu) = [mu == lam]`` once
    ``|mu| <= |lam|`` and ``f = 0`` on the walls.
    """
    lam, mu = WeylPoint(lam), closure_point(mu)
    _check_dims(lam, mu)
    base = lam.size
    d = len(lam)

    @lru_cache(maxsize=None)
    def f(p: tuple[int, ...]) -> int:
        if p[-1] < 0:
            return 0
        if sum(p) <= base:
            return int(p == lam)
        if any(p[i] == p[i + 1] for i in range(d - 1)):
            return 0
        return sum(f(p[:i] + (p[i] - 1,) + p[i + 1 :]) for i in range(d))

    return f(tuple(mu))


def _inv_factorial(k: int) -> Fraction:
    return Fraction(0) if k < 0 else Fraction(1, factorial(k))


def ballot_walk_count_det(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Same count as :func:`ballot_walk_count`, from ``n! det(1/(mu_i - lam_j)!)``."""
    lam, mu = WeylPoint(lam), closure_point(mu)
    _check_dims(lam, mu)
    n = sum(mu) - lam.size
    if n < 0:
        return 0
    d = len(lam)
    m = [[_inv_factorial(mu[i] - lam[j]) for j in range(d)] for i in range(d)]
    value = factorial(n) * berkowitz_determinant(m, Fraction(1))
    assert value.denominator == 1
    return int(value)


def hook_length_count(shape: Iterable[int]) -> int:
    """Number of standard Young tableaux of ``shape``: ``N! det(1/(lam_i - i + j)!)``."""
    shape = Partition(shape)
    d = shape.height
    if d == 0:
        return 1
    m = [[_inv_factorial(shape[i] - i + j) for j in range(d)] for i in range(d)]
    value = factorial(shape.size) * berkowitz_determinant(m, Fraction(1))
    assert value.denominator == 1
    return int(value)


def oscillating_walk_layers(lam: Iterable[int], n: int) -> list[dict[WeylPoint, int]]:
    """``layers[k][mu]`` = number of length-``k`` oscillating walks from ``lam`` to ``mu``.

    Steps are ``+e_i`` or ``-e_i``; every visited point must be in the open
    chamber.  Coordinates never exceed ``lam_1 + n``.
    """
    lam = WeylPoint(lam)
    if n < 0:
        raise ValueError("walk length must be nonnegative")
    d = len(lam)
    layer: dict[tuple[int, ...], int] = {tuple(lam): 1}
    layers = [{lam: 1}]
    for _ in range(n):
        nxt: dict[tuple[int, ...], int] = {}
        for p, c in layer.items():
            for i in range(d):
                for step in (1, -1):
                    q = p[:i] + (p[i] + step,) + p[i + 1 :]
                    if in_chamber(q):
                        nxt[q] = nxt.get(q, 0) + c
        layer = nxt
        layers.append({WeylPoint(p): c for p, c in sorted(layer.items())})
    return layers


def oscillating_walk_count(lam: Iterable[int], mu: Iterable[int], n: int) -> int:
    """``b_n(lam; mu)``: oscillating walks of length ``n`` from ``lam`` to ``mu``."""
    lam, mu = WeylPoint(lam), WeylPoint(mu)
    _check_dims(lam, mu)
    return oscillating_walk_layers(lam, n)[n].get(mu, 0)


def total_oscillating_walk_count(lam: Iterable[int], n: int) -> int:
    """Oscillating walks of length ``n`` from ``lam`` with a free endpoint."""
    return sum(oscillating_walk_layers(lam, n)[n].values())
