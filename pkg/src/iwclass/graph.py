"""Individualization-refinement search on edge-weighted graphs with an involution.

Only maps that commute with the fixed involution ``tau`` are of interest, so a
branch always individualizes a vertex together with its partner.  Leaf maps
are accepted when they preserve the weighted edge set and commute with
``tau``.  The search returns generators of the automorphism group (stabiliser
chain of the first leaf) and can test isomorphism between two graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .bsgs import Perm

Cells = list[list[int]]


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def add_perm(self, g: Perm) -> None:
        for x, y in enumerate(g):
            a, b = self.find(x), self.find(y)
            if a != b:
                self.parent[max(a, b)] = min(a, b)


@dataclass
class _Node:
    cells: Cells
    trace: tuple
    target: Optional[int] = None  # index of the cell branched on


@dataclass
class InvolutionGraph:
    """Undirected weighted graph on ``0..n-1`` with vertex colours and involution ``tau``."""

    n: int
    adj: list[dict[int, int]]
    colors: list
    tau: list[int]
    _first: Optional[list] = field(default=None, repr=False)
    _leaf: Optional[list[int]] = field(default=None, repr=False)
    _path: Optional[list[int]] = field(default=None, repr=False)

    # -- partition machinery ------------------------------------------------
    def initial(self) -> _Node:
        keys: dict = {}
        for v in range(self.n):
            key = (self.colors[v], tuple(sorted(self.adj[v].values())))
            keys.setdefault(key, []).append(v)
        order = sorted(keys)
        cells = [keys[k] for k in order]
        return self._refine(cells, (tuple(order),))

    def _refine(self, cells: Cells, trace: tuple) -> _Node:
        adj = self.adj
        trace = list(trace)
        while True:
            where = {}
            for ci, c in enumerate(cells):
                for v in c:
                    where[v] = ci
            new: Cells = []
            changed = False
            for c in cells:
                if len(c) == 1:
                    new.append(c)
                    continue
                sigs: dict = {}
                for v in c:
                    sig = tuple(sorted((where[u], w) for u, w in adj[v].items()))
                    sigs.setdefault(sig, []).append(v)
                if len(sigs) == 1:
                    new.append(c)
                    continue
                changed = True
                keys = sorted(sigs)
                trace.append((len(new), tuple((k, len(sigs[k])) for k in keys)))
                new.extend(sigs[k] for k in keys)
            cells = new
            if not changed:
                return _Node(cells, tuple(trace))

    def _individualize(self, node: _Node, v: int) -> _Node:
        cells = [list(c) for c in node.cells]
        for x in (v, self.tau[v]):
            for ci, c in enumerate(cells):
                if x in c:
                    if len(c) > 1:
                        c.remove(x)
                        cells[ci:ci + 1] = [[x], c]
                    break
        return self._refine(cells, (len(node.cells),))

    @staticmethod
    def _target(node: _Node) -> Optional[int]:
        for ci, c in enumerate(node.cells):
            if len(c) > 1:
                return ci
        return None

    # -- leaf tests ---------------------------------------------------------
    def _maps_to(self, other: "InvolutionGraph", g: Sequence[int]) -> bool:
        tau, otau = self.tau, other.tau
        for x in range(self.n):
            if g[tau[x]] != otau[g[x]]:
                return False
            if self.colors[x] != other.colors[g[x]]:
                return False
            nb = other.adj[g[x]]
            mine = self.adj[x]
            if len(nb) != len(mine):
                return False
            for u, w in mine.items():
                if nb.get(g[u]) != w:
                    return False
        return True

    @staticmethod
    def _leaf_map(src: list[int], dst: list[int]) -> Perm:
        g = [0] * len(src)
        for a, b in zip(src, dst):
            g[a] = b
        return tuple(g)

    # -- first path ---------------------------------------------------------
    def _first_path(self) -> None:
        if self._first is not None:
            return
        node = self.initial()
        nodes = [node]
        path = []
        while True:
            t = self._target(node)
            node.target = t
            if t is None:
                break
            v = node.cells[t][0]
            path.append(v)
            node = self._individualize(node, v)
            nodes.append(node)
        self._first = nodes
        self._path = path
        self._leaf = [c[0] for c in node.cells]

    def _find_leaf(self, node: _Node, depth: int, ref: "InvolutionGraph", fixed_orbits=None) -> Optional[Perm]:
        """Leaf under ``node`` whose map from ``ref``'s first leaf is an isomorphism ref -> self."""
        first = ref._first
        if depth >= len(first) or node.trace != first[depth].trace:
            return None
        t = self._target(node)
        if t is None:
            g = self._leaf_map(ref._leaf, [c[0] for c in node.cells])
            return g if ref._maps_to(self, g) else None
        seen: set = set()
        find = fixed_orbits(node) if fixed_orbits is not None else None
        for u in node.cells[t]:
            if find is not None:
                r = find(u)
                if r in seen:
                    continue
                seen.add(r)
            g = self._find_leaf(self._individualize(node, u), depth + 1, ref, fixed_orbits)
            if g is not None:
                return g
        return None

    # -- public -------------------------------------------------------------
    def automorphism_generators(self) -> list[Perm]:
        """Generators of the group of weight-preserving, tau-commuting automorphisms."""
        self._first_path()
        nodes, path = self._first, self._path
        gens: list[Perm] = []
        uf = _UnionFind(self.n)
        for d in range(len(path) - 1, -1, -1):
            node = nodes[d]
            failed: set = set()
            for v in node.cells[node.target]:
                r = uf.find(v)
                if r == uf.find(path[d]) or r in failed:
                    continue
                g = self._find_leaf(self._individualize(node, v), d + 1, self)
                if g is None:
                    failed.add(r)
                else:
                    gens.append(g)
                    uf.add_perm(g)
                    failed = {uf.find(x) for x in failed}
        return gens

    def find_isomorphism(self, other: "InvolutionGraph", other_gens: Sequence[Perm] = ()) -> Optional[Perm]:
        """A map ``g`` with ``g(self) == other``, or None.

        ``other_gens`` are automorphisms of ``other`` used to prune symmetric
        branches (only those fixing the current individualized vertices).
        """
        if self.n != other.n:
            return None
        self._first_path()

        def orbit_key(node: _Node):
            fixed = [c[0] for c in node.cells if len(c) == 1]
            uf = _UnionFind(other.n)
            for g in other_gens:
                if all(g[x] == x for x in fixed):
                    uf.add_perm(g)
            return uf.find

        return other._find_leaf(other.initial(), 0, self, orbit_key if other_gens else None)
