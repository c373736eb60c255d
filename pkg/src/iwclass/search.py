"""Orderly generation of Hadamard class representatives of PIW(m, n, k).

Matrices are grown one row at a time.  Every prefix of a row-lex minimum is
itself minimum, so prefixes that fail the minimality test are dropped.  Above
``mindepth`` rows the test is skipped, which is much faster but can emit
several equivalent matrices per class; :func:`dedup_classes` removes those.
"""

from __future__ import annotations

import bisect
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Optional, Sequence

from .canon import DEFAULT_MAX_ROWS, code_invariant, is_minimum, minclass
from .core import IntMatrix, Row, neg_ord
from .nsoks import SquaresRep, nsoks, rep_to_vector

log = logging.getLogger(__name__)


def signed_perms_of_reps(soks: Iterable[SquaresRep], n: int) -> list[Row]:
    """All distinct vectors obtained by reordering and signing a representation."""
    out: set[Row] = set()
    for rep in soks:
        base = rep_to_vector(rep)
        if len(base) != n:
            raise ValueError(f"representation {rep} does not have {n} terms")
        for arrangement in set(permutations(base)):
            nz = [i for i, x in enumerate(arrangement) if x]
            for signs in product((1, -1), repeat=len(nz)):
                v = list(arrangement)
                for i, s in zip(nz, signs):
                    v[i] *= s
                out.add(tuple(v))
    return sorted(out)


def _dot(u: Row, v: Row) -> int:
    return sum(x * y for x, y in zip(u, v))


def all_rows(n: int, k: int, entry_cap: Optional[int] = None) -> list[Row]:
    soks = nsoks(k, n, entry_cap)
    return signed_perms_of_reps(soks, n)


def minimum_first_rows(n: int, k: int, entry_cap: Optional[int] = None) -> list[Row]:
    reps = nsoks(k, n, entry_cap)
    return sorted(neg_ord((tuple(-x for x in rep_to_vector(r)),))[0] for r in reps)


@dataclass
class SearchStats:
    nodes: int = 0
    minimality_tests: int = 0
    leaves: int = 0
    per_depth: list = field(default_factory=list)


def _grow(prefix: list[Row], cands: list[Row], m: int, mindepth: int,
          max_rows: int, out: list, stats: SearchStats) -> None:
    p = len(prefix)
    if p == m:
        out.append(tuple(prefix))
        stats.leaves += 1
        return
    stats.nodes += 1
    while len(stats.per_depth) <= p:
        stats.per_depth.append(0)
    stats.per_depth[p] += 1
    for idx, w in enumerate(cands):
        new = prefix + [w]
        if p + 1 <= mindepth:
            stats.minimality_tests += 1
            if not is_minimum(tuple(new), max_rows):
                continue
        if p + 1 == m:
            out.append(tuple(new))
            stats.leaves += 1
            continue
        rest = [u for u in cands[idx + 1:] if not _dot(u, w)]
        if len(rest) < m - p - 1:
            continue
        _grow(new, rest, m, mindepth, max_rows, out, stats)


def _subtree(args):
    first, cands, m, mindepth, max_rows = args
    out: list = []
    stats = SearchStats()
    _grow([first], cands, m, mindepth, max_rows, out, stats)
    return out, stats


def rep_piw(
    m: int,
    n: int,
    k: int,
    mindepth: Optional[int] = None,
    entry_cap: Optional[int] = None,
    workers: int = 1,
    max_rows: int = DEFAULT_MAX_ROWS,
    stats: Optional[SearchStats] = None,
) -> list[IntMatrix]:
    """Minimum Hadamard representatives of ``PIW(m, n, k)``, sorted.

    With ``mindepth < m`` the list may contain several matrices per class,
    but always contains every class minimum.  ``entry_cap`` bounds the
    absolute value of entries (``1`` gives classical weighing matrices).
    """
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    if k < 1:
        raise ValueError("weight must be positive")
    if mindepth is None:
        mindepth = m
    if not 0 <= mindepth <= m:
        raise ValueError("mindepth must lie in [0, m]")
    if mindepth > max_rows:
        raise ValueError("mindepth exceeds the minimality-test row bound")
    stats = stats if stats is not None else SearchStats()
    rows = all_rows(n, k, entry_cap)
    firsts = minimum_first_rows(n, k, entry_cap)
    if m == 1:
        return [(v,) for v in firsts]
    jobs = []
    for v in firsts:
        start = bisect.bisect_right(rows, v)
        cands = [w for w in rows[start:] if not _dot(w, v)]
        jobs.append((v, cands, m, mindepth, max_rows))
    results = []
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_subtree, jobs))
    else:
        results = [_subtree(j) for j in jobs]
    out: list[IntMatrix] = []
    for found, st in results:
        out.extend(found)
        stats.nodes += st.nodes
        stats.minimality_tests += st.minimality_tests
        stats.leaves += st.leaves
        for d, c in enumerate(st.per_depth):
            while len(stats.per_depth) <= d:
                stats.per_depth.append(0)
            stats.per_depth[d] += c
    out.sort()
    log.info("rep_piw(%d,%d,%d,mindepth=%d): %d matrices, %d minimality tests",
             m, n, k, mindepth, len(out), stats.minimality_tests)
    return out


def dedup_classes(candidates: Sequence[IntMatrix], depth: Optional[int] = None,
                  canonical: bool = True, max_rows: int = DEFAULT_MAX_ROWS) -> list[IntMatrix]:
    """One representative per Hadamard class among ``candidates``.

    Candidates are bucketed by code invariant and then compared pairwise with
    the graph isomorphism test.  The returned representative of each class is
    its row-lex minimum when ``canonical`` is set and the row count allows it,
    otherwise the first candidate seen.
    """
    from .autiso import find_isomorphism

    if not candidates:
        return []
    rows = len(candidates[0])
    if depth is None:
        depth = min(4, rows)
    buckets: dict = {}
    for c in candidates:
        buckets.setdefault(code_invariant(c, depth, max_rows=max_rows), []).append(c)
    reps: list[IntMatrix] = []
    for key in sorted(buckets, key=lambda inv: inv.codes):
        classes: list[IntMatrix] = []
        for c in buckets[key]:
            if any(c == r or find_isomorphism(r, c) is not None for r in classes):
                continue
            classes.append(c)
        reps.extend(classes)
    if canonical and rows <= max_rows:
        reps = [minclass(r, max_rows) for r in reps]
    return sorted(reps)
