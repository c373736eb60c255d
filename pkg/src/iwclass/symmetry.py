"""Symmetric and anti-symmetric members of Hadamard classes.

For a matrix ``A`` with ``L A R^T = A^T`` a member ``M A`` is symmetric
exactly when ``(M^T L, M R)`` is an automorphism, so symmetric members are
found by streaming ``Aut(A)``.  When ``A`` is itself (anti-)symmetric, the
members ``M A`` with ``(M^T, M)`` in ``Aut(A)`` cover every SH-class, and two
of them are SH-equivalent iff they lie in one orbit of ``M -> Q M P^T`` for
``(P, Q)`` in ``Aut(A)``.  The stabiliser of ``M`` is isomorphic to
``SAut(M A)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import Iterator, Optional, Sequence

from .autiso import AutGroup, aut_group, find_isomorphism
from .core import (
    HadamardPair,
    IntMatrix,
    SignedPerm,
    block_diag,
    is_antisymmetric,
    is_symmetric,
    negate,
    transpose,
)
from .structure import (
    ClassRecord,
    ConsistencyError,
    FullClassification,
    Library,
    hadamard_group_order,
)

STREAM_BOUND = 10 ** 7


class CapacityError(RuntimeError):
    """A group is too large to stream element by element."""


def _stream(g: AutGroup, bound: int) -> Iterator[HadamardPair]:
    if g.order > bound:
        raise CapacityError(f"group of order {g.order} exceeds the streaming bound {bound}")
    return g.elements()


def mon_order(n: int) -> int:
    return 2 ** n * factorial(n)


# ---------------------------------------------------------------------------
# TAut
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TElement:
    """``A -> L A R^T`` or, when ``flip`` is set, ``A -> L A^T R^T``."""

    left: SignedPerm
    right: SignedPerm
    flip: bool = False

    def apply(self, a: IntMatrix) -> IntMatrix:
        b = transpose(a) if self.flip else a
        return self.right.apply_cols(self.left.apply_rows(b))

    def __mul__(self, other: "TElement") -> "TElement":
        """Apply ``other`` first."""
        if not self.flip:
            return TElement(self.left * other.left, self.right * other.right, other.flip)
        # L1 (L2 X R2^T)^T R1^T = (L1 R2) X^T (R1 L2)^T
        return TElement(self.left * other.right, self.right * other.left, not other.flip)


@dataclass(frozen=True)
class TAutGroup:
    aut: AutGroup
    witness: Optional[HadamardPair]  # L A R^T == A^T

    @property
    def order(self) -> int:
        return self.aut.order * (2 if self.witness is not None else 1)

    def transpose_element(self) -> Optional[TElement]:
        """An element ``(L', R')`` with flip, mapping ``A`` to itself through ``A^T``."""
        if self.witness is None:
            return None
        inv = self.witness.inverse()
        return TElement(inv.left, inv.right, True)


def taut_group(a: IntMatrix, g: Optional[AutGroup] = None) -> TAutGroup:
    g = g if g is not None else aut_group(a)
    return TAutGroup(g, find_isomorphism(a, transpose(a)))


# ---------------------------------------------------------------------------
# Finding a member
# ---------------------------------------------------------------------------

def _is_target(b: IntMatrix, sign: int) -> bool:
    return is_symmetric(b) if sign == 1 else is_antisymmetric(b)


def find_symmetric_member(
    a: IntMatrix,
    g: Optional[AutGroup] = None,
    sign: int = 1,
    bound: int = STREAM_BOUND,
    witness: Optional[HadamardPair] = None,
) -> Optional[IntMatrix]:
    """A symmetric (``sign=1``) or anti-symmetric (``sign=-1``) member of ``[a]``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = len(a)
    if sign == -1 and n % 2:
        return None
    if _is_target(a, sign):
        return a
    if witness is None:
        witness = find_isomorphism(a, transpose(a))
    if witness is None:
        return None
    g = g if g is not None else aut_group(a)
    l, r = witness.left, witness.right
    for pq in _stream(g, bound):
        pt = pq.left.inverse()
        lhs = l * pt * r
        target = pq.right if sign == 1 else -pq.right
        if lhs == target:
            m = l * pt if sign == 1 else -(l * pt)
            b = m.apply_rows(a)
            if not _is_target(b, sign):
                raise ConsistencyError("member test accepted a non-member")
            return b
    return None


# ---------------------------------------------------------------------------
# SH classification of one class
# ---------------------------------------------------------------------------

@dataclass
class SymClassRecord:
    """SH-classes of (anti-)symmetric members of one Hadamard class."""

    parent: str
    sign: int
    reps: list[IntMatrix] = field(default_factory=list)
    saut_orders: list[int] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.reps)

    def member_count(self, n: int) -> int:
        """Number of (anti-)symmetric matrices in the class."""
        return sum(mon_order(n) // s for s in self.saut_orders)

    def order_multiset(self) -> Counter:
        return Counter(self.saut_orders)


def sym_classes(
    a: IntMatrix,
    g: Optional[AutGroup] = None,
    sign: int = 1,
    bound: int = STREAM_BOUND,
    parent: str = "",
    check_stabilizers: bool = True,
) -> SymClassRecord:
    """Representatives of the SH-classes of (anti-)symmetric members of ``[a]``."""
    if not _is_target(a, sign):
        member = find_symmetric_member(a, g, sign, bound)
        if member is None:
            return SymClassRecord(parent, sign)
        if member != a:
            a, g = member, None
    g = g if g is not None else aut_group(a)
    elements = list(_stream(g, bound))
    sigma = [pq.right for pq in elements if pq.left == pq.right.inverse()]
    index = {m: i for i, m in enumerate(sigma)}
    parent_of = list(range(len(sigma)))

    def find(x: int) -> int:
        while parent_of[x] != x:
            parent_of[x] = parent_of[parent_of[x]]
            x = parent_of[x]
        return x

    for pq in g.generators:
        pt = pq.left.inverse()
        for i, m in enumerate(sigma):
            j = index.get(pq.right * m * pt)
            if j is None:
                raise ConsistencyError("orbit action left the symmetric set")
            x, y = find(i), find(j)
            if x != y:
                parent_of[max(x, y)] = min(x, y)
    orbits: dict[int, list[int]] = {}
    for i in range(len(sigma)):
        orbits.setdefault(find(i), []).append(i)
    ident = SignedPerm.identity(len(a))
    id_root = find(index[ident])
    out = SymClassRecord(parent, sign)
    order_list = []
    for root, members in orbits.items():
        if root == id_root:
            rep_m, rep = ident, a
        else:
            rep_m, rep = min(((sigma[i], sigma[i].apply_rows(a)) for i in members), key=lambda t: t[1])
        saut = g.order // len(members)
        if check_stabilizers:
            direct = sum(1 for pq in elements if pq.right * rep_m * pq.left.inverse() == rep_m)
            if direct != saut:
                raise ConsistencyError(f"stabilizer count {direct} != {saut}")
        order_list.append((root != id_root, rep, saut))
    order_list.sort(key=lambda t: (t[0], t[1]))
    out.reps = [r for _, r, _ in order_list]
    out.saut_orders = [s for _, _, s in order_list]
    return out


def _sh_graph(s: IntMatrix):
    from .autiso import extend
    from .graph import InvolutionGraph

    e = extend(s)
    n = len(e)
    adj = [{v: w for v, w in enumerate(row) if w} for row in e]
    return InvolutionGraph(n, adj, [0] * n, [x ^ 1 for x in range(n)])


def sh_isomorphism(s1: IntMatrix, s2: IntMatrix) -> Optional[SignedPerm]:
    """Monomial ``T`` with ``T s1 T^T == s2``, found by graph isomorphism on ``E(s)``.

    Independent of the orbit computation in :func:`sym_classes`.
    """
    if len(s1) != len(s2):
        return None
    g1, g2 = _sh_graph(s1), _sh_graph(s2)
    perm = g1.find_isomorphism(g2, g2.automorphism_generators())
    if perm is None:
        return None
    n = len(s1)
    images = [(perm[2 * i] // 2, -1 if perm[2 * i] % 2 else 1) for i in range(n)]
    t = SignedPerm.from_images(images)
    if t.apply_cols(t.apply_rows(s1)) != s2:
        raise ConsistencyError("graph route produced a bad SH map")
    return t


def saut_order_graph(s: IntMatrix) -> int:
    """``|SAut(s)|`` as the order of the tau-commuting automorphism group of ``E(s)``."""
    from .bsgs import BSGS

    g = _sh_graph(s)
    return BSGS(g.n, g.automorphism_generators()).order


def are_sh_equivalent(s1: IntMatrix, s2: IntMatrix, bound: int = STREAM_BOUND) -> bool:
    """Direct SH test: ``T s1 T^T == s2`` for some monomial ``T``."""
    p = find_isomorphism(s1, s2)
    if p is None:
        return False
    g = aut_group(s1)
    for pq in _stream(g, bound):
        cand = (p * pq)
        if cand.left == cand.right:
            return True
    return False


# ---------------------------------------------------------------------------
# Assembly for imprimitive classes
# ---------------------------------------------------------------------------

def double_block(x: IntMatrix, sign: int) -> IntMatrix:
    """``[[0, X], [sign * X^T, 0]]``."""
    n = len(x)
    xt = transpose(x) if sign == 1 else negate(transpose(x))
    top = tuple(tuple([0] * n) + tuple(row) for row in x)
    bottom = tuple(tuple(row) + tuple([0] * n) for row in xt)
    return top + bottom


@dataclass
class PrimitiveSymData:
    record: ClassRecord
    taut_order: int
    sym: SymClassRecord


def primitive_sym_data(library: Library, sign: int, bound: int = STREAM_BOUND) -> dict[str, PrimitiveSymData]:
    out = {}
    for rec in library.records():
        g = rec.aut if rec.aut is not None else aut_group(rec.representative)
        if rec.symmetric_class:
            sym = sym_classes(rec.representative, g, sign, bound, parent=rec.name)
            taut = 2 * rec.aut_order
        else:
            sym = SymClassRecord(rec.name, sign)
            taut = rec.aut_order
        out[rec.name] = PrimitiveSymData(rec, taut, sym)
    return out


def _multisets_of(k: int, n_items: int, start: int = 0) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for i in range(start, n_items):
        for rest in _multisets_of(k - 1, n_items, i):
            yield (i,) + rest


def _options_for(data: PrimitiveSymData, mult: int) -> list[tuple[list[IntMatrix], int, list[IntMatrix]]]:
    """Ways to realise ``mult`` copies of a symmetric-class primitive.

    Each option is (type I blocks, SAut contribution, type II blocks).
    """
    reps = data.sym.reps
    orders = data.sym.saut_orders
    opts = []
    for b in range(mult // 2 + 1):
        a_count = mult - 2 * b
        if a_count and not reps:
            continue
        for combo in _multisets_of(a_count, len(reps)):
            saut = 1
            for idx, c in Counter(combo).items():
                saut *= orders[idx] ** c * factorial(c)
            saut *= data.taut_order ** b * factorial(b)
            blocks = [reps[i] for i in combo]
            opts.append((blocks, saut, [data.record.representative] * b))
    return opts


def assemble_symmetric_classification(
    classification: FullClassification,
    data: dict[str, PrimitiveSymData],
    sign: int = 1,
) -> list[SymClassRecord]:
    """SH-classes of (anti-)symmetric members for every class of a full classification."""
    out = []
    for rec in classification.records:
        sym = SymClassRecord(rec.name, sign)
        out.append(sym)
        if not rec.symmetric_class:
            continue
        if sign == -1 and classification.size % 2:
            continue
        comps = dict(rec.components)
        per_component: list[list[tuple[list[IntMatrix], int, list[IntMatrix]]]] = []
        ok = True
        for name, mult in rec.components:
            if name not in data:
                raise ConsistencyError(f"no symmetric data for primitive {name}")
            d = data[name]
            if d.record.symmetric_class:
                opts = _options_for(d, mult)
            else:
                partner = d.record.th_partner
                if comps.get(partner) != mult:
                    raise ConsistencyError(f"{rec.name}: unpaired non-symmetric block {name}")
                if name > partner:
                    continue
                opts = [([], d.record.aut_order ** mult * factorial(mult), [d.record.representative] * mult)]
            if not opts:
                ok = False
                break
            per_component.append(opts)
        if not ok:
            continue
        for choice in _product(per_component):
            type1: list[IntMatrix] = []
            type2: list[IntMatrix] = []
            saut = 1
            for blocks, s, doubles in choice:
                type1 += blocks
                type2 += doubles
                saut *= s
            mat = block_diag(type1 + [double_block(x, sign) for x in type2])
            sym.reps.append(mat)
            sym.saut_orders.append(saut)
    return out


def _product(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for tail in _product(lists[1:]):
            yield (head,) + tail


def total_symmetric_count(records: Sequence[SymClassRecord], n: int) -> int:
    return sum(r.member_count(n) for r in records)
