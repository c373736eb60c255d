"""Permutation groups via a base and strong generating set (Schreier-Sims).

Permutations are tuples of images.  ``mul(g, h)`` is the composition that
applies ``h`` first, matching the matrix product of the monomial matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(g: Perm, h: Perm) -> Perm:
    """``(g*h)[x] = g[h[x]]``."""
    return tuple(g[x] for x in h)


def inv(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def is_identity(g: Perm) -> bool:
    return all(i == x for i, x in enumerate(g))


def orbits(degree: int, gens: Sequence[Perm]) -> list[list[int]]:
    """Orbits of the group generated by ``gens``, each sorted, ordered by least point."""
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x, y in enumerate(g):
            a, b = find(x), find(y)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for x in range(degree):
        groups.setdefault(find(x), []).append(x)
    return [groups[k] for k in sorted(groups)]


def _orbit_transversal(point: int, gens: Sequence[Perm], degree: int) -> dict[int, Perm]:
    trans = {point: identity(degree)}
    queue = [point]
    for x in queue:
        u = trans[x]
        for g in gens:
            y = g[x]
            if y not in trans:
                trans[y] = mul(g, u)
                queue.append(y)
    return trans


@dataclass
class BSGS:
    """Stabiliser chain for the group generated by ``generators``."""

    degree: int
    generators: list[Perm]
    base: list[int] = field(default_factory=list)
    strong: list[Perm] = field(default_factory=list)
    _levels: list = field(default_factory=list, repr=False)  # per level: (gens, transversal)

    def __post_init__(self) -> None:
        gens = [tuple(g) for g in self.generators if not is_identity(g)]
        for g in gens:
            if len(g) != self.degree:
                raise ValueError("generator degree mismatch")
        self.generators = gens
        self.strong = list(gens)
        if gens and not self.base:
            self.base = [self._best_first_point(gens)]
        self._ensure_base_moved()
        self._rebuild(0)
        self._schreier_sims()

    # -- construction ------------------------------------------------------
    def _best_first_point(self, gens: Sequence[Perm]) -> int:
        best = max(orbits(self.degree, gens), key=lambda o: (len(o), -o[0]))
        return best[0]

    def _ensure_base_moved(self) -> None:
        for g in self.strong:
            if all(g[b] == b for b in self.base):
                self.base.append(next(x for x in range(self.degree) if g[x] != x))

    def _rebuild(self, start: int) -> None:
        del self._levels[start:]
        for i in range(start, len(self.base)):
            fixed = self.base[:i]
            gens = [s for s in self.strong if all(s[b] == b for b in fixed)]
            self._levels.append((gens, _orbit_transversal(self.base[i], gens, self.degree)))

    def _strip(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for i in range(start, len(self.base)):
            x = g[self.base[i]]
            trans = self._levels[i][1]
            if x not in trans:
                return g, i
            g = mul(inv(trans[x]), g)
        return g, len(self.base)

    def _schreier_sims(self) -> None:
        i = len(self.base) - 1
        while i >= 0:
            gens, trans = self._levels[i]
            added = False
            for x, u in list(trans.items()):
                for s in gens:
                    y = s[x]
                    sg = mul(inv(trans[y]), mul(s, u))
                    if is_identity(sg):
                        continue
                    h, j = self._strip(sg, i + 1)
                    if is_identity(h):
                        continue
                    self.strong.append(h)
                    if j == len(self.base):
                        self.base.append(next(p for p in range(self.degree) if h[p] != p))
                    self._rebuild(i + 1)
                    i = j
                    added = True
                    break
                if added:
                    break
            if not added:
                i -= 1

    # -- queries -----------------------------------------------------------
    @property
    def order(self) -> int:
        n = 1
        for _, trans in self._levels:
            n *= len(trans)
        return n

    def orbit_lengths(self) -> list[int]:
        return [len(t) for _, t in self._levels]

    def contains(self, g: Sequence[int]) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        h, _ = self._strip(g)
        return is_identity(h)

    def elements(self) -> Iterator[Perm]:
        """Every group element exactly once."""
        trans = [list(t.values()) for _, t in self._levels]

        def rec(i: int, acc: Perm) -> Iterator[Perm]:
            if i == len(trans):
                yield acc
                return
            for u in trans[i]:
                yield from rec(i + 1, mul(acc, u))

        yield from rec(0, identity(self.degree))

    def orbits(self) -> list[list[int]]:
        return orbits(self.degree, self.generators)


def group_order(degree: int, gens: Sequence[Perm], base: Optional[Sequence[int]] = None) -> int:
    return BSGS(degree, list(gens), list(base or [])).order
