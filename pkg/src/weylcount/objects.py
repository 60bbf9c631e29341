"""Brute-force enumeration of matchings, oscillating tableaux, SYT and permutations.

These are the combinatorial oracles.  Enumerations are capped so that a
request that would take minutes fails loudly instead of silently
undercounting; caps can be raised through environment variables (see
:func:`enumeration_cap`).
"""

from __future__ import annotations

import os
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .walks import Partition, hook_length_count


class EnumerationCapError(ValueError):
    """Raised when a brute-force enumeration would exceed its configured cap."""


DEFAULT_CAPS = {
    "matchings": 8,  # points [2n]; 15!! ~ 2.0e6 matchings
    "tableaux": 12,  # length
    "syt": 10,  # |shape|
    "permutations": 9,  # n; 9! ~ 3.6e5
}


def enumeration_cap(kind: str) -> int:
    """Current cap for ``kind``; override with ``WEYLCOUNT_MAX_<KIND>``, e.g. ``WEYLCOUNT_MAX_MATCHINGS=9``."""
    raw = os.environ.get(f"WEYLCOUNT_MAX_{kind.upper()}")
    if raw is None:
        return DEFAULT_CAPS[kind]
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"WEYLCOUNT_MAX_{kind.upper()} must be an integer, got {raw!r}") from None


def _require_cap(kind: str, value: int, cap: int | None) -> None:
    limit = enumeration_cap(kind) if cap is None else cap
    if value > limit:
        raise EnumerationCapError(
            f"{kind} enumeration at size {value} exceeds the cap {limit}; "
            f"set WEYLCOUNT_MAX_{kind.upper()} to raise it"
        )


# --------------------------------------------------------------------------
# matchings
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Matching:
    """Perfect matching of ``{1, ..., 2n}`` as sorted arcs ``(i, j)``, ``i < j``."""

    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        arcs = tuple(sorted(tuple(sorted(a)) for a in self.arcs))
        points = sorted(p for a in arcs for p in a)
        if points != list(range(1, 2 * len(arcs) + 1)):
            raise ValueError(f"not a perfect matching of [2n]: {self.arcs}")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def of(cls, *arcs: Iterable[int]) -> Matching:
        return cls(tuple(tuple(a) for a in arcs))

    @property
    def n(self) -> int:
        return len(self.arcs)

    def partner(self) -> list[int]:
        """``partner[p]`` is the point matched to ``p`` (index 0 unused)."""
        out = [0] * (2 * self.n + 1)
        for i, j in self.arcs:
            out[i], out[j] = j, i
        return out


def enumerate_matchings(n: int, cap: int | None = None) -> Iterator[Matching]:
    """Yield all ``(2n-1)!!`` matchings of ``[2n]`` in lexicographic order of arcs."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _require_cap("matchings", n, cap)

    def rec(free: tuple[int, ...], acc: tuple[tuple[int, int], ...]):
        if not free:
            yield acc
            return
        first = free[0]
        for k in range(1, len(free)):
            yield from rec(free[1:k] + free[k + 1 :], acc + ((first, free[k]),))

    for arcs in rec(tuple(range(1, 2 * n + 1)), ()):
        m = object.__new__(Matching)
        object.__setattr__(m, "arcs", arcs)  # already canonical
        yield m


def _max_depth(arcs: Sequence[tuple[int, int]]) -> int:
    # any k-crossing or k-nesting covers one common gap, so this bounds both
    if not arcs:
        return 0
    top = max(j for _, j in arcs)
    return max(sum(1 for i, j in arcs if i <= p < j) for p in range(1, top))


def _largest_pattern(arcs: Sequence[tuple[int, int]], crossing: bool) -> int:
    if not arcs:
        return 0
    for k in range(_max_depth(arcs), 1, -1):
        for sub in combinations(arcs, k):  # arcs are sorted by left endpoint
            rights = [j for _, j in sub]
            if crossing:
                ok = sub[-1][0] < rights[0] and all(a < b for a, b in zip(rights, rights[1:]))
            else:
                ok = sub[-1][0] < rights[-1] and all(a > b for a, b in zip(rights, rights[1:]))
            if ok:
                return k
    return 1


def crossing_number(m: Matching) -> int:
    """Largest ``k`` with arcs ``i_1 < ... < i_k < j_1 < ... < j_k``."""
    return _largest_pattern(m.arcs, crossing=True)


def nesting_number(m: Matching) -> int:
    """Largest ``k`` with arcs ``i_1 < ... < i_k < j_k < ... < j_1``."""
    return _largest_pattern(m.arcs, crossing=False)


def reflect_matching(m: Matching) -> Matching:
    """Mirror the arc diagram: ``(i, j) -> (2n+1-j, 2n+1-i)``."""
    top = 2 * m.n + 1
    return Matching(tuple((top - j, top - i) for i, j in m.arcs))


def is_bilaterally_symmetric(m: Matching) -> bool:
    partner = m.partner()
    top = 2 * m.n + 1
    return all(partner[top - p] == top - partner[p] for p in range(1, top))


def count_matchings(
    n: int,
    max_crossing: int | None = None,
    bilateral: bool = False,
    use_nesting: bool = False,
    cap: int | None = None,
) -> int:
    """Count matchings of ``[2n]``, optionally bilaterally symmetric and with
    crossing (or nesting, if ``use_nesting``) number at most ``max_crossing``."""
    stat = nesting_number if use_nesting else crossing_number
    total = 0
    for m in enumerate_matchings(n, cap=cap):
        if bilateral and not is_bilaterally_symmetric(m):
            continue
        if max_crossing is not None and stat(m) > max_crossing:
            continue
        total += 1
    return total


# --------------------------------------------------------------------------
# oscillating tableaux
# --------------------------------------------------------------------------


def _add_removable(shape: Partition) -> tuple[list[Partition], list[Partition]]:
    parts = list(shape)
    grown, shrunk = [], []
    for i in range(len(parts) + 1):
        above = parts[i - 1] if i > 0 else None
        cur = parts[i] if i < len(parts) else 0
        if above is None or above > cur:
            grown.append(Partition(parts[:i] + [cur + 1] + parts[i + 1 :]))
    for i, p in enumerate(parts):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        if p > below:
            shrunk.append(Partition(parts[:i] + [p - 1] + parts[i + 1 :]))
    return grown, shrunk


def _adjacent(a: Partition, b: Partition) -> bool:
    if abs(a.size - b.size) != 1:
        return False
    small, big = (a, b) if a.size < b.size else (b, a)
    k = max(len(small), len(big))
    small = list(small) + [0] * (k - len(small))
    big = list(big) + [0] * (k - len(big))
    return all(y >= x for x, y in zip(small, big))


@dataclass(frozen=True)
class OscillatingTableau:
    """Sequence of shapes, each obtained from the previous by adding or removing one cell."""

    shapes: tuple[Partition, ...]

    def __post_init__(self) -> None:
        shapes = tuple(Partition(s) for s in self.shapes)
        if not shapes:
            raise ValueError("an oscillating tableau needs at least one shape")
        for a, b in zip(shapes, shapes[1:]):
            if not _adjacent(a, b):
                raise ValueError(f"shapes {tuple(a)} and {tuple(b)} differ by more than one cell")
        object.__setattr__(self, "shapes", shapes)

    @classmethod
    def of(cls, *shapes: Iterable[int]) -> OscillatingTableau:
        return cls(tuple(Partition(s) for s in shapes))

    @property
    def length(self) -> int:
        return len(self.shapes) - 1

    @property
    def shape(self) -> Partition:
        return self.shapes[-1]

    @property
    def height(self) -> int:
        return max(s.height for s in self.shapes)


def enumerate_oscillating_tableaux(
    n: int,
    height_bound: int | None = None,
    final_shape: Iterable[int] | None = None,
    cap: int | None = None,
) -> Iterator[OscillatingTableau]:
    """All oscillating tableaux of length ``n`` starting at the empty shape.

    With ``height_bound`` every intermediate shape has at most that many rows;
    with ``final_shape`` only tableaux ending there are produced.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    _require_cap("tableaux", n, cap)
    target = None if final_shape is None else Partition(final_shape)
    if target is not None and (target.size > n or (n - target.size) % 2):
        return

    def rec(path: list[Partition]):
        cur = path[-1]
        left = n - (len(path) - 1)
        if left == 0:
            if target is None or cur == target:
                t = object.__new__(OscillatingTableau)
                object.__setattr__(t, "shapes", tuple(path))
                yield t
            return
        grown, shrunk = _add_removable(cur)
        for nxt in grown + shrunk:
            if height_bound is not None and nxt.height > height_bound:
                continue
            if target is not None and abs(nxt.size - target.size) > left - 1:
                continue
            path.append(nxt)
            yield from rec(path)
            path.pop()

    yield from rec([Partition()])


def count_oscillating_tableaux(
    n: int,
    height_bound: int | None = None,
    final_shape: Iterable[int] | None = None,
    palindromic: bool = False,
) -> int:
    total = 0
    for t in enumerate_oscillating_tableaux(n, height_bound, final_shape):
        if palindromic and not is_palindromic(t):
            continue
        total += 1
    return total


def tableau_reverse(o: OscillatingTableau) -> OscillatingTableau:
    return OscillatingTableau(tuple(reversed(o.shapes)))


def is_palindromic(o: OscillatingTableau) -> bool:
    if o.shapes[0] or o.shapes[-1]:
        raise ValueError("palindromicity is only defined for tableaux from and to the empty shape")
    return o.shapes == o.shapes[::-1]


def gamma_split(o: OscillatingTableau) -> tuple[OscillatingTableau, OscillatingTableau]:
    """Cut an empty-to-empty tableau of length 2n into two length-n tableaux of equal shape."""
    if o.length % 2 or o.shapes[0] or o.shapes[-1]:
        raise ValueError("gamma_split needs an even-length tableau from and to the empty shape")
    k = o.length // 2
    return OscillatingTableau(o.shapes[: k + 1]), OscillatingTableau(o.shapes[k:][::-1])


def gamma_combine(p: OscillatingTableau, q: OscillatingTableau) -> OscillatingTableau:
    if p.shape != q.shape or p.length != q.length:
        raise ValueError("gamma_combine needs two tableaux of the same length and final shape")
    if p.shapes[0] or q.shapes[0]:
        raise ValueError("gamma_combine needs tableaux starting at the empty shape")
    return OscillatingTableau(p.shapes + q.shapes[::-1][1:])


def partitions_of(n: int, max_parts: int | None = None) -> list[Partition]:
    """Partitions of ``n`` (at most ``max_parts`` rows), reverse-lexicographic."""
    out: list[Partition] = []

    def rec(rest: int, upper: int, acc: list[int]) -> None:
        if rest == 0:
            out.append(Partition(acc))
            return
        if max_parts is not None and len(acc) == max_parts:
            return
        for p in range(min(rest, upper), 0, -1):
            rec(rest - p, p, acc + [p])

    rec(n, n, [])
    return out


def tilde_f(shape: Iterable[int], n: int) -> int:
    """Oscillating tableaux of length ``n`` and final ``shape``: ``C(n, 2r) (2r-1)!! f^shape``."""
    shape = Partition(shape)
    gap = n - shape.size
    if gap < 0 or gap % 2:
        return 0
    r = gap // 2
    return comb(n, 2 * r) * double_factorial(2 * r - 1) * hook_length_count(shape)


def double_factorial(k: int) -> int:
    """``k!!`` with ``(-1)!! = 1``."""
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


# --------------------------------------------------------------------------
# standard Young tableaux and permutations
# --------------------------------------------------------------------------


def enumerate_syt(shape: Iterable[int], cap: int | None = None) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Standard Young tableaux of ``shape`` as tuples of rows, filled with ``1..N``."""
    shape = Partition(shape)
    _require_cap("syt", shape.size, cap)
    rows: list[list[int]] = [[] for _ in shape]

    def rec(k: int):
        if k > shape.size:
            yield tuple(tuple(r) for r in rows)
            return
        for i, row in enumerate(rows):
            if len(row) < shape[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(k)
                yield from rec(k + 1)
                row.pop()

    yield from rec(1)


def longest_increasing(w: Sequence[int]) -> int:
    """Length of the longest increasing subsequence (patience sorting)."""
    piles: list[int] = []
    for x in w:
        k = bisect_left(piles, x)
        if k == len(piles):
            piles.append(x)
        else:
            piles[k] = x
    return len(piles)


@lru_cache(maxsize=None)
def _lis_histogram(n: int) -> Counter:
    return Counter(longest_increasing(w) for w in permutations(range(1, n + 1)))


def count_lis_bounded(n: int, d: int, cap: int | None = None) -> int:
    """Permutations of ``[n]`` whose longest increasing subsequence has length at most ``d``."""
    _require_cap("permutations", n, cap)
    return sum(c for k, c in _lis_histogram(n).items() if k <= d)


def count_involutions(n: int, cap: int | None = None) -> int:
    _require_cap("permutations", n, cap)
    return sum(1 for w in permutations(range(n)) if all(w[w[i]] == i for i in range(n)))
