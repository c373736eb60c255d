"""Certification of automorphism groups by tuple-orbit enumeration.

Given a subgroup ``G`` of ``Aut(A)``, either prove ``G == Aut(A)`` or produce
an automorphism outside ``G``.  ``G`` acts on ordered ``r``-tuples of row
indices through the permutation part of ``L``.  Any automorphism outside
``G`` can be composed with an element of ``G`` so that it sends the first
basepoint tuple to a basepoint of some orbit; for each basepoint we solve for
the column part ``R`` up to the stabiliser of the sorted column form and read
off ``L`` by matching rows.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator, Optional, Sequence, Union

from .autiso import AutGroup, group_from_pairs
from .core import (
    HadamardPair,
    IntMatrix,
    SignedPerm,
    apply_pair,
    neg_ord_with_witness,
    normalize_vector,
    shape,
)

MAX_TUPLE = 4


# ---------------------------------------------------------------------------
# Row equivalence
# ---------------------------------------------------------------------------

def _row_key(rows: Sequence[Sequence[int]]) -> list:
    return sorted(normalize_vector(r) for r in rows)


def row_equivalent(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    """True iff ``a == L b`` for some monomial ``L``."""
    return len(a) == len(b) and _row_key(a) == _row_key(b)


def row_witness(a: IntMatrix, b: IntMatrix) -> Optional[SignedPerm]:
    """Monomial ``P`` with ``P a == b`` when the rows of ``a`` are pairwise independent."""
    if len(a) != len(b):
        return None
    index: dict = {}
    for t, row in enumerate(b):
        index.setdefault(tuple(row), []).append(t)
    perm = [0] * len(a)
    signs = [1] * len(a)
    used = set()
    for i, row in enumerate(a):
        for s in (1, -1):
            key = tuple(row) if s == 1 else tuple(-x for x in row)
            cands = [t for t in index.get(key, ()) if t not in used]
            if cands:
                t = cands[0]
                used.add(t)
                perm[i] = t
                signs[t] = s
                break
        else:
            return None
    return SignedPerm(tuple(perm), tuple(signs))


# ---------------------------------------------------------------------------
# Tuple orbits
# ---------------------------------------------------------------------------

def tuple_orbits(m: int, r: int, g: AutGroup) -> list[list[tuple[int, ...]]]:
    """Orbits of ordered ``r``-tuples of distinct rows, each sorted, ordered by least tuple."""
    tuples = list(permutations(range(m), r))
    where = {t: i for i, t in enumerate(tuples)}
    parent = list(range(len(tuples)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for pair in g.generators:
        p = pair.left.perm
        for i, t in enumerate(tuples):
            j = where[tuple(p[x] for x in t)]
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list] = {}
    for i, t in enumerate(tuples):
        groups.setdefault(find(i), []).append(t)
    return [groups[k] for k in sorted(groups)]


# ---------------------------------------------------------------------------
# Column stabiliser pieces
# ---------------------------------------------------------------------------

def _column_groups(b: IntMatrix) -> list[tuple[list[int], bool]]:
    """Runs of equal columns of a sorted matrix, with a flag for zero columns."""
    cols = list(zip(*b))
    out: list[tuple[list[int], bool]] = []
    for j, c in enumerate(cols):
        if out and cols[out[-1][0][0]] == c:
            out[-1][0].append(j)
        else:
            out.append(([j], not any(c)))
    return out


def _local_moves(block: list[int], zero: bool) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Monomial maps of a column block: (images, signs) indexed like ``block``."""
    for images in permutations(block):
        if zero:
            for signs in product((1, -1), repeat=len(block)):
                yield images, signs
        else:
            yield images, (1,) * len(block)


def _apply_cols_sub(a: IntMatrix, rows: Sequence[int], block: list[int],
                    images: Sequence[int], signs: Sequence[int]) -> list[tuple[int, ...]]:
    # Column block[t] of the result is sign * column images[t]... expressed as
    # out[:, images[t]] = signs[t] * a[:, block[t]], listed in block order.
    pos = {c: t for t, c in enumerate(block)}
    out = []
    for i in rows:
        row = [0] * len(block)
        for t, c in enumerate(block):
            row[pos[images[t]]] = signs[t] * a[i][c]
        out.append(tuple(row))
    return out


def _compose_q(n: int, groups, choice) -> SignedPerm:
    perm = list(range(n))
    signs = [1] * n
    for (block, _), (images, sg) in zip(groups, choice):
        for t, c in enumerate(block):
            perm[c] = images[t]
            signs[images[t]] = sg[t]
    return SignedPerm(tuple(perm), tuple(signs))


# ---------------------------------------------------------------------------
# Main routine
# ---------------------------------------------------------------------------

def new_aut(
    a: IntMatrix,
    g: AutGroup,
    r: int = 2,
    reuse_first_ord: bool = False,
    max_tuple: int = MAX_TUPLE,
) -> Union[bool, HadamardPair]:
    """``True`` if ``g`` is all of ``Aut(a)``, else an automorphism not in ``g``.

    ``reuse_first_ord`` applies the first tuple's column normaliser to the
    basepoint tuple as well instead of computing its own; this is weaker and
    kept only for comparison.
    """
    m, n = shape(a)
    if not 1 <= r <= m:
        raise ValueError(f"tuple length {r} outside 1..{m}")
    if r > max_tuple:
        raise ValueError(f"tuple length {r} exceeds the bound {max_tuple}")
    for pair in g.generators:
        if apply_pair(pair, a) != a:
            raise ValueError("group generator is not an automorphism")
    orbs = tuple_orbits(m, r, g)
    x1 = orbs[0][0]
    b1 = tuple(a[i] for i in x1)
    for j, orb in enumerate(orbs):
        xj = orb[0]
        bj = tuple(a[i] for i in xj)
        bj_ord, cj = neg_ord_with_witness(bj)
        rest_j = [i for i in range(m) if i not in xj]
        rest_1 = [i for i in range(m) if i not in x1]
        for s in product((1, -1), repeat=r):
            sb1 = tuple(row if si == 1 else tuple(-x for x in row) for si, row in zip(s, b1))
            b1_ord, c1 = neg_ord_with_witness(sb1)
            cjj = cj
            if reuse_first_ord:
                cjj = c1
                if c1.apply_cols(bj) != b1_ord:
                    continue
            elif b1_ord != bj_ord:
                continue
            u = c1.apply_cols(a)   # A C1^T
            v = cjj.apply_cols(a)  # A Cj^T
            groups = _column_groups(b1_ord)
            prunes = []
            for block, zero in groups:
                target = _row_key([tuple(v[i][c] for c in block) for i in rest_j])
                keep = [
                    mv for mv in _local_moves(block, zero)
                    if _row_key(_apply_cols_sub(u, rest_1, block, *mv)) == target
                ]
                if not keep:
                    break
                prunes.append(keep)
            else:
                for choice in product(*prunes):
                    q = _compose_q(n, groups, choice)
                    rmat = cjj.inverse() * q * c1
                    lhs = rmat.apply_cols(a)
                    lmat = row_witness(lhs, a)
                    if lmat is None:
                        continue
                    pair = HadamardPair(lmat, rmat)
                    if apply_pair(pair, a) != a:
                        continue
                    if j == 0 and g.contains(pair):
                        continue
                    return pair
    return True


def certify(a: IntMatrix, g: AutGroup, r: int = 2, max_rounds: int = 64) -> tuple[AutGroup, int]:
    """Extend ``g`` with new automorphisms until :func:`new_aut` returns True.

    Returns the final group and the number of elements that had to be added.
    """
    added = 0
    m, n = shape(a)
    gens = list(g.generators)
    for _ in range(max_rounds):
        res = new_aut(a, g, r)
        if res is True:
            return g, added
        gens.append(res)
        g = group_from_pairs(m, n, gens)
        added += 1
    raise RuntimeError("certification did not converge")
