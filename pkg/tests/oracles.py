"""Independent brute-force oracles used by the test suite."""

from __future__ import annotations

from collections import Counter
from itertools import product

from iwclass.core import gram_check


def weight_vectors(n: int, k: int) -> list[tuple[int, ...]]:
    """All integer vectors of length ``n`` with squared norm ``k`` (direct product scan)."""
    bound = int(k ** 0.5)
    rng = range(-bound, bound + 1)
    out = []

    def rec(prefix, left):
        if len(prefix) == n:
            if left == 0:
                out.append(tuple(prefix))
            return
        for x in rng:
            if x * x <= left:
                rec(prefix + [x], left - x * x)

    rec([], k)
    return out


def brute_iw(n: int, k: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every matrix of IW(n, k) by row-wise backtracking over all weight-k rows."""
    rows = weight_vectors(n, k)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for r in rows:
            if all(sum(x * y for x, y in zip(r, p)) == 0 for p in prefix):
                rec(prefix + [r])

    rec([])
    return out


def brute_entrywise_iw(n: int, k: int) -> list[tuple[tuple[int, ...], ...]]:
    """IW(n, k) by scanning every matrix with entries in [-sqrt k, sqrt k] (tiny n only)."""
    bound = int(k ** 0.5)
    vals = range(-bound, bound + 1)
    out = []
    for flat in product(vals, repeat=n * n):
        a = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        if gram_check(a, k):
            out.append(a)
    return out


def brute_symmetric_count(n: int, k: int, sign: int = 1) -> int:
    """Number of (anti-)symmetric IW(n, k), by backtracking on rows."""
    return len(brute_symmetric(n, k, sign))


def brute_symmetric(n: int, k: int, sign: int = 1) -> list:
    """All (anti-)symmetric IW(n, k), by backtracking on rows."""
    rows = weight_vectors(n, k)
    by_prefix: dict = {}
    for r in rows:
        for i in range(n):
            by_prefix.setdefault((i, r[:i]), []).append(r)
    found = []

    def rec(prefix):
        i = len(prefix)
        if i == n:
            found.append(tuple(prefix))
            return
        head = tuple(sign * prefix[j][i] for j in range(i))
        for r in by_prefix.get((i, head), ()):
            if sign == -1 and r[i] != 0:
                continue
            if all(sum(x * y for x, y in zip(r, p)) == 0 for p in prefix):
                rec(prefix + [r])

    rec([])
    return found


def monomials(n: int):
    """Every n x n signed permutation as (perm, signs) acting on rows."""
    from itertools import permutations

    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            yield perm, signs


def _act_rows(perm, signs, a):
    return tuple(tuple(s * x for x in a[p]) for p, s in zip(perm, signs))


def brute_aut_order(a) -> int:
    """|{(L, R) : L a R^T = a}| by scanning L and counting column matchings."""
    m, n = len(a), len(a[0])
    at = tuple(zip(*a))
    total = 0
    for perm, signs in monomials(m):
        b = tuple(zip(*_act_rows(perm, signs, a)))  # columns of L a
        for cperm, csigns in monomials(n):
            if _act_rows(cperm, csigns, b) == at:
                total += 1
    return total


def brute_equivalent(a, b) -> bool:
    m, n = len(a), len(a[0])
    bt = tuple(zip(*b))
    for perm, signs in monomials(m):
        cols = tuple(zip(*_act_rows(perm, signs, a)))
        if sorted(cols) != sorted(bt) and sorted(map(_norm, cols)) != sorted(map(_norm, bt)):
            continue
        for cperm, csigns in monomials(n):
            if _act_rows(cperm, csigns, cols) == bt:
                return True
    return False


def _norm(v):
    for x in v:
        if x:
            return tuple(-y for y in v) if x > 0 else tuple(v)
    return tuple(v)


def brute_sh_classes(mats, n: int) -> dict:
    """SH-orbits of a set of square matrices: canonical form -> orbit size."""
    mons = [(p, s) for p, s in monomials(n)]
    orbit_of = {}
    for a in mats:
        if a in orbit_of:
            continue
        orbit = set()
        for perm, signs in mons:
            b = _act_rows(perm, signs, a)
            c = tuple(zip(*_act_rows(perm, signs, tuple(zip(*b)))))
            orbit.add(c)
        key = min(orbit)
        for c in orbit:
            orbit_of[c] = key
    sizes = Counter(orbit_of[a] for a in mats)
    return dict(sizes)
