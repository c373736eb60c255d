"""Automorphism groups and isomorphisms of integer matrices.

A matrix ``A`` is encoded by its extended matrix ``E(A)``: each entry ``x``
becomes the 2x2 block ``x*I`` for ``x >= 0`` and ``|x|*(J - I)`` for ``x < 0``.
Signed row ``i`` becomes vertices ``2i`` (sign +) and ``2i+1`` (sign -), and
the same for columns after an offset of ``2m``.  Monomial pairs ``(L, R)``
then act as permutations commuting with the involution swapping ``2i`` and
``2i+1``, and ``Aut(A)`` is the group of weighted bipartite graph
automorphisms that commute with that involution.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .bsgs import BSGS, Perm
from .core import DimensionError, HadamardPair, IntMatrix, SignedPerm, apply_pair, shape
from .graph import InvolutionGraph


def extend(a: IntMatrix) -> IntMatrix:
    """The ``2m x 2n`` extended matrix ``E(a)``."""
    out = []
    for row in a:
        top, bottom = [], []
        for x in row:
            if x >= 0:
                top += [x, 0]
                bottom += [0, x]
            else:
                top += [0, -x]
                bottom += [-x, 0]
        out.append(tuple(top))
        out.append(tuple(bottom))
    return tuple(out)


@dataclass(frozen=True)
class WeightedBipartiteGraph:
    """Bipartite graph of ``E(A)``; right vertices are numbered from ``left_count``."""

    left_count: int
    right_count: int
    edges: tuple[tuple[int, int, int], ...]

    @classmethod
    def of_matrix(cls, a: IntMatrix) -> "WeightedBipartiteGraph":
        e = extend(a)
        left = len(e)
        edges = tuple(
            (u, left + v, w) for u, row in enumerate(e) for v, w in enumerate(row) if w
        )
        return cls(left, len(e[0]), edges)

    @property
    def order(self) -> int:
        return self.left_count + self.right_count

    def to_engine(self) -> InvolutionGraph:
        n = self.order
        adj: list[dict[int, int]] = [dict() for _ in range(n)]
        for u, v, w in self.edges:
            adj[u][v] = w
            adj[v][u] = w
        colors = [0] * self.left_count + [1] * self.right_count
        tau = [x ^ 1 for x in range(n)]
        return InvolutionGraph(n, adj, colors, tau)


def graph_automorphisms(g: WeightedBipartiteGraph) -> BSGS:
    """Side-preserving weighted automorphisms commuting with the sign involution."""
    return BSGS(g.order, g.to_engine().automorphism_generators())


# ---------------------------------------------------------------------------
# Encoding pairs as permutations
# ---------------------------------------------------------------------------

def _encode_side(p: SignedPerm, offset: int, out: list[int]) -> None:
    for i, t in enumerate(p.perm):
        flip = 1 if p.signs[t] < 0 else 0
        out[offset + 2 * i] = offset + 2 * t + flip
        out[offset + 2 * i + 1] = offset + 2 * t + (1 - flip)


def encode_pair(pair: HadamardPair) -> Perm:
    m, n = pair.left.n, pair.right.n
    out = [0] * (2 * (m + n))
    _encode_side(pair.left, 0, out)
    _encode_side(pair.right, 2 * m, out)
    return tuple(out)


def _decode_side(g: Sequence[int], offset: int, size: int) -> SignedPerm:
    perm = [0] * size
    signs = [1] * size
    for i in range(size):
        y = g[offset + 2 * i] - offset
        perm[i] = y // 2
        signs[y // 2] = -1 if y % 2 else 1
    return SignedPerm(tuple(perm), tuple(signs))


def decode_pair(g: Sequence[int], m: int, n: int) -> HadamardPair:
    """Inverse of :func:`encode_pair`; ``g`` must commute with the sign involution."""
    return HadamardPair(_decode_side(g, 0, m), _decode_side(g, 2 * m, n))


# ---------------------------------------------------------------------------
# Automorphism groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AutGroup:
    """``Aut(A)`` with generators as Hadamard pairs and a stabiliser chain."""

    m: int
    n: int
    generators: tuple[HadamardPair, ...]
    order: int
    bsgs: BSGS

    def contains(self, pair: HadamardPair) -> bool:
        return self.bsgs.contains(encode_pair(pair))

    def elements(self) -> Iterator[HadamardPair]:
        for g in self.bsgs.elements():
            yield decode_pair(g, self.m, self.n)

    def generator_perms(self) -> list[Perm]:
        return [encode_pair(p) for p in self.generators]


def group_from_pairs(m: int, n: int, pairs: Sequence[HadamardPair]) -> AutGroup:
    bsgs = BSGS(2 * (m + n), [encode_pair(p) for p in pairs])
    gens = tuple(p for p in pairs if not p.is_identity())
    return AutGroup(m, n, gens, bsgs.order, bsgs)


def trivial_group(m: int, n: int) -> AutGroup:
    return group_from_pairs(m, n, [])


@lru_cache(maxsize=4096)
def _engine(a: IntMatrix) -> tuple[InvolutionGraph, tuple[Perm, ...]]:
    eng = WeightedBipartiteGraph.of_matrix(a).to_engine()
    return eng, tuple(eng.automorphism_generators())


def aut_group(a: IntMatrix) -> AutGroup:
    """The Hadamard automorphism group of ``a``."""
    m, n = shape(a)
    _, perms = _engine(a)
    pairs = [decode_pair(g, m, n) for g in perms]
    for p in pairs:
        if apply_pair(p, a) != a:
            raise AssertionError("engine produced a non-automorphism")
    bsgs = BSGS(2 * (m + n), list(perms))
    return AutGroup(m, n, tuple(pairs), bsgs.order, bsgs)


def find_isomorphism(a: IntMatrix, b: IntMatrix) -> Optional[HadamardPair]:
    """A pair ``(L, R)`` with ``L a R^T == b``, or None when not H-equivalent."""
    if shape(a) != shape(b):
        raise DimensionError("matrices differ in shape")
    m, n = shape(a)
    ea, _ = _engine(a)
    eb, gens_b = _engine(b)
    g = ea.find_isomorphism(eb, gens_b)
    if g is None:
        return None
    pair = decode_pair(g, m, n)
    if apply_pair(pair, a) != b:
        raise AssertionError("engine produced a bad isomorphism")
    return pair
