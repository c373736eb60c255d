"""Representations of an integer as a sum of ``r`` nonnegative squares."""

from __future__ import annotations

from math import isqrt
from typing import Optional

# A representation is a tuple of (root, multiplicity) pairs with strictly
# decreasing roots, e.g. ((4, 1), (2, 2), (1, 1), (0, 2)).
SquaresRep = tuple[tuple[int, int], ...]


def _ceil_sqrt_ratio(n: int, r: int) -> int:
    """Smallest s with s*s*r >= n."""
    s = isqrt(n // r)
    while s * s * r < n:
        s += 1
    return s


def nsoks(n: int, r: int, maxsq: Optional[int] = None) -> list[SquaresRep]:
    """All multisets of ``r`` nonnegative squares summing to ``n``.

    Each square root is at most ``maxsq`` when given.  Results are ordered by
    increasing largest root, then increasing multiplicity, following the
    recursion order.
    """
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    if maxsq is not None and maxsq < 0:
        raise ValueError("maxsq must be nonnegative")
    return _nsoks(n, r, maxsq)


def _nsoks(n: int, r: int, maxsq: Optional[int]) -> list[SquaresRep]:
    if n == 0:
        return [((0, r),)]
    if maxsq == 0:
        return []
    if maxsq == 1:
        if n > r:
            return []
        return [((1, n),) if n == r else ((1, n), (0, r - n))]
    top = isqrt(n)
    if maxsq is not None:
        top = min(top, maxsq)
    out: list[SquaresRep] = []
    for s in range(max(_ceil_sqrt_ratio(n, r), 1), top + 1):
        sq = s * s
        for i in range(1, min(n // sq, r) + 1):
            rest = n - i * sq
            if i == r:
                if rest == 0:
                    out.append(((s, r),))
                continue
            for sub in _nsoks(rest, r - i, s - 1):
                out.append(((s, i),) + sub)
    return out


def count_nsoks(n: int, r: int, maxsq: Optional[int] = None) -> int:
    return len(nsoks(n, r, maxsq))


def rep_to_vector(rep: SquaresRep) -> tuple[int, ...]:
    """Expand to a non-increasing tuple of roots."""
    return tuple(s for s, m in rep for _ in range(m))
