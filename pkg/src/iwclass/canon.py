"""Row-lex minimum representatives of Hadamard classes and the code invariant.

The minimum of a class is found by a depth-first walk over row orderings and
row signs.  For a fixed choice of the first ``p`` rows, the first ``p`` rows
of ``Ord(Neg(.))`` are already determined, so a branch whose prefix exceeds
the incumbent can be abandoned.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .core import HadamardPair, IntMatrix, SignedPerm, max_abs_entry

DEFAULT_MAX_ROWS = 8


class ExhaustionError(RuntimeError):
    """The exhaustive monomial scan would exceed the configured row bound."""


class _Smaller(Exception):
    pass


def _extend(groups, arow, s):
    # groups: ordered column classes of equal prefix columns; each member is
    # (col, factor) with factor 0 while the column prefix is still all zero.
    row = []
    out = []
    for g in groups:
        vals = []
        for j, f in g:
            e = arow[j] if s > 0 else -arow[j]
            if f:
                vals.append((f * e, j, f))
            elif e > 0:
                vals.append((-e, j, -1))
            elif e < 0:
                vals.append((e, j, 1))
            else:
                vals.append((0, j, 0))
        if len(vals) > 1:
            vals.sort()
        cur = None
        for v, j, f in vals:
            row.append(v)
            if v != cur:
                out.append([])
                cur = v
            out[-1].append((j, f))
    return tuple(row), out


def _sign_matters(groups, arow) -> bool:
    for g in groups:
        if g[0][1] and any(arow[j] for j, _ in g):
            return True
    return False


def _scan(a: IntMatrix, stop_if_smaller: bool):
    m = len(a)
    n = len(a[0])
    best: list = list(a) if stop_if_smaller else []
    state = {"path": None, "groups": None}
    if stop_if_smaller:
        state["path"] = [(i, 1) for i in range(m)]

    def dfs(depth, used, groups, path):
        if depth == m:
            if state["path"] is None:
                state["path"] = list(path)
                state["groups"] = groups
            return
        for r in range(m):
            if used >> r & 1:
                continue
            arow = a[r]
            for s in ((1, -1) if _sign_matters(groups, arow) else (1,)):
                row, ng = _extend(groups, arow, s)
                if depth < len(best):
                    b = best[depth]
                    if row > b:
                        continue
                    if row < b:
                        if stop_if_smaller:
                            raise _Smaller
                        del best[depth:]
                        best.append(row)
                        state["path"] = None
                else:
                    best.append(row)
                path.append((r, s))
                dfs(depth + 1, used | (1 << r), ng, path)
                path.pop()

    start = [[(j, 0) for j in range(n)]]
    try:
        dfs(0, 0, start, [])
    except _Smaller:
        return None
    return tuple(best), state["path"], state["groups"]


def _check_bound(m: int, max_rows: int) -> None:
    if m > max_rows:
        raise ExhaustionError(
            f"{m} rows exceeds the exhaustive minimisation bound {max_rows}; "
            "use minimality testing inside the search instead"
        )


def minclass(m: IntMatrix, max_rows: int = DEFAULT_MAX_ROWS) -> IntMatrix:
    """Row-lex minimum of the Hadamard class of ``m``."""
    _check_bound(len(m), max_rows)
    return _scan(m, False)[0]


def minclass_with_witness(
    m: IntMatrix, max_rows: int = DEFAULT_MAX_ROWS
) -> tuple[IntMatrix, HadamardPair]:
    """Return ``(Min(m), (L, R))`` with ``L m R^T == Min(m)``."""
    _check_bound(len(m), max_rows)
    best, path, groups = _scan(m, False)
    rows, cols = len(m), len(m[0])
    lperm = [0] * rows
    lsigns = [1] * rows
    for depth, (r, s) in enumerate(path):
        lperm[r] = depth
        lsigns[depth] = s
    rperm = [0] * cols
    rsigns = [1] * cols
    t = 0
    for g in groups:
        for j, f in g:
            rperm[j] = t
            rsigns[t] = f or 1
            t += 1
    pair = HadamardPair(SignedPerm(tuple(lperm), tuple(lsigns)), SignedPerm(tuple(rperm), tuple(rsigns)))
    return best, pair


def is_minimum(m: IntMatrix, max_rows: int = DEFAULT_MAX_ROWS) -> bool:
    """True iff ``m`` is the row-lex minimum of its class (early exit)."""
    _check_bound(len(m), max_rows)
    return _scan(m, True) is not None


# ---------------------------------------------------------------------------
# Code invariant
# ---------------------------------------------------------------------------

def encode(d: IntMatrix, bound: int) -> int:
    """Base ``2*bound+1`` number whose digits are the entries shifted by ``bound``."""
    base = 2 * bound + 1
    code = 0
    for row in d:
        for x in row:
            code = code * base + (x + bound)
    return code


@dataclass(frozen=True)
class CodeInvariant:
    d: int
    codes: tuple[tuple[int, int], ...]  # sorted (code, multiplicity)

    def as_multiset(self) -> Counter:
        return Counter(dict(self.codes))


def code_invariant(
    m: IntMatrix, d: int, bound: int | None = None, max_rows: int = DEFAULT_MAX_ROWS
) -> CodeInvariant:
    """Multiset of codes of ``Min(D)`` over all ``d``-row submatrices ``D``."""
    if not 1 <= d <= len(m):
        raise ValueError(f"depth {d} out of range for {len(m)} rows")
    _check_bound(d, max_rows)
    if bound is None:
        bound = max_abs_entry(m)
    counts: Counter = Counter()
    cache: dict = {}
    for idx in combinations(range(len(m)), d):
        sub = tuple(m[i] for i in idx)
        key = tuple(sorted(sub))
        code = cache.get(key)
        if code is None:
            code = cache[key] = encode(minclass(sub, max_rows), bound)
        counts[code] += 1
    return CodeInvariant(d, tuple(sorted(counts.items())))
