"""Incidence and weighing matrices of projective spaces over prime fields.

Points and hyperplanes share one list of normalised vectors (first nonzero
coordinate 1); hyperplane ``w`` is ``{x : x . w = 0}`` for the standard dot
product, which makes both matrices symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .autiso import aut_group
from .core import IntMatrix, negate
from .symmetry import STREAM_BOUND, SymClassRecord, sh_isomorphism, sym_classes


def _is_prime(p: int) -> bool:
    return p > 1 and all(p % q for q in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class ProjectiveSpace:
    d: int
    p: int
    points: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError("dimension must be at least 2")
        if self.p == 2 or not _is_prime(self.p):
            raise ValueError("p must be an odd prime")
        pts = []
        for v in product(range(self.p), repeat=self.d + 1):
            nz = next((x for x in v if x), 0)
            if nz == 1:
                pts.append(v)
        object.__setattr__(self, "points", tuple(pts))

    @property
    def size(self) -> int:
        return (self.p ** (self.d + 1) - 1) // (self.p - 1)

    @property
    def weight(self) -> int:
        """Nonzero entries per row of the weighing matrix."""
        return self.p ** self.d

    def residues(self) -> frozenset[int]:
        return frozenset((x * x) % self.p for x in range(1, self.p))

    def _dot(self, v, w) -> int:
        return sum(a * b for a, b in zip(v, w)) % self.p


def projective_incidence(space: ProjectiveSpace) -> IntMatrix:
    """0/1 matrix with a 1 where the point lies on the hyperplane."""
    pts = space.points
    return tuple(tuple(1 if space._dot(v, w) == 0 else 0 for w in pts) for v in pts)


def projective_weighing(space: ProjectiveSpace) -> IntMatrix:
    """0 on incident pairs, otherwise the quadratic character of the dot product."""
    qr = space.residues()
    pts = space.points
    rows = []
    for v in pts:
        row = []
        for w in pts:
            x = space._dot(v, w)
            row.append(0 if x == 0 else (1 if x in qr else -1))
        rows.append(tuple(row))
    return tuple(rows)


def gl_order(n: int, p: int) -> int:
    out = 1
    for i in range(n):
        out *= p ** n - p ** i
    return out


def predicted_aut_order(space: ProjectiveSpace) -> int:
    """``|GL(d+1, p)|`` divided by the number of nonzero squares."""
    return gl_order(space.d + 1, space.p) * 2 // (space.p - 1)


def predicted_symmetric_count(space: ProjectiveSpace, incidence: bool = False) -> int:
    """SH-class count of symmetric members of ``[PW]`` (or ``[PI]``) for prime fields."""
    odd = space.d % 2 == 1
    if incidence:
        return 2 + (1 if odd else 0)
    return 2 + (1 if odd and space.p % 4 == 1 else 0)


@dataclass
class ProjectiveReport:
    space: ProjectiveSpace
    incidence: bool
    aut_order: int
    predicted_aut_order: Optional[int]
    computed: int
    predicted: int
    sym: SymClassRecord
    negative_same_class: Optional[bool] = None

    @property
    def ok(self) -> bool:
        aut_ok = self.predicted_aut_order is None or self.aut_order == self.predicted_aut_order
        return aut_ok and self.computed == self.predicted


def verify_projective_symmetric_count(space: ProjectiveSpace, incidence: bool = False,
                                      bound: int = STREAM_BOUND) -> ProjectiveReport:
    """Run the SH classification on ``PW`` (or ``PI``) and compare with the formula."""
    a = projective_incidence(space) if incidence else projective_weighing(space)
    g = aut_group(a)
    sym = sym_classes(a, g, 1, bound)
    report = ProjectiveReport(
        space=space,
        incidence=incidence,
        aut_order=g.order,
        predicted_aut_order=None if incidence else predicted_aut_order(space),
        computed=sym.count,
        predicted=predicted_symmetric_count(space, incidence),
        sym=sym,
    )
    if not incidence:
        report.negative_same_class = sh_isomorphism(a, negate(a)) is not None
    return report
