"""Primitive decomposition and assembly of full classifications.

An IW matrix is H-equivalent to a block sum of primitive blocks, unique up to
order.  Its automorphism group is a product of wreath products, so a full
classification follows from the primitive classes of every smaller size.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Optional, Sequence

from .autiso import AutGroup, aut_group, find_isomorphism
from .canon import code_invariant
from .core import IntMatrix, block_diag, gram_check, shape, transpose
from .search import dedup_classes, rep_piw


class ConsistencyError(RuntimeError):
    """An internal invariant failed (bad input or a bug)."""


class UnknownPrimitiveError(LookupError):
    def __init__(self, block: IntMatrix) -> None:
        super().__init__(f"no library entry matches the {len(block)}x{len(block)} block {block}")
        self.block = block


def hadamard_group_order(m: int, n: Optional[int] = None) -> int:
    """``|Mon(m)| * |Mon(n)|``, which is ``2^(2n) n!^2`` in the square case."""
    n = m if n is None else n
    return 2 ** (m + n) * factorial(m) * factorial(n)


@dataclass
class ClassRecord:
    """One Hadamard class, primitive or assembled."""

    name: str
    representative: IntMatrix
    aut_order: int
    cardinality: int
    primitive: bool
    symmetric_class: bool
    th_partner: Optional[str] = None
    aut: Optional[AutGroup] = field(default=None, repr=False)
    components: tuple[tuple[str, int], ...] = ()

    @property
    def size(self) -> int:
        return len(self.representative)

    @property
    def serial(self) -> int:
        return int(self.name.split(".")[1]) if self.primitive else 0


@dataclass(frozen=True)
class Decomposition:
    components: tuple[tuple[ClassRecord, int], ...]

    @property
    def size(self) -> int:
        return sum(rec.size * mult for rec, mult in self.components)

    def names(self) -> tuple[tuple[str, int], ...]:
        return tuple((rec.name, mult) for rec, mult in self.components)


# ---------------------------------------------------------------------------
# Components
# ---------------------------------------------------------------------------

def support_components(a: IntMatrix) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Connected components of the bipartite support graph, ordered by least row."""
    m, n = shape(a)
    seen_r = [False] * m
    seen_c = [False] * n
    comps = []
    for start in range(m):
        if seen_r[start]:
            continue
        rows, cols = {start}, set()
        seen_r[start] = True
        stack = [("r", start)]
        while stack:
            side, i = stack.pop()
            if side == "r":
                for j in range(n):
                    if a[i][j] and not seen_c[j]:
                        seen_c[j] = True
                        cols.add(j)
                        stack.append(("c", j))
            else:
                for r in range(m):
                    if a[r][i] and not seen_r[r]:
                        seen_r[r] = True
                        rows.add(r)
                        stack.append(("r", r))
        comps.append((tuple(sorted(rows)), tuple(sorted(cols))))
    if m == n and sum(seen_c) == n:
        for rows, cols in comps:
            if len(rows) != len(cols):
                raise ConsistencyError("component with unequal row and column counts")
    return comps


def is_primitive(a: IntMatrix) -> bool:
    return len(support_components(a)) == 1 and all(any(c) for c in zip(*a))


def _block(a: IntMatrix, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
    return tuple(tuple(a[i][j] for j in cols) for i in rows)


# ---------------------------------------------------------------------------
# Primitive libraries
# ---------------------------------------------------------------------------

@dataclass
class Library:
    """Primitive classes of one weight, keyed by size."""

    weight: int
    by_size: dict[int, list[ClassRecord]] = field(default_factory=dict)
    _index: dict = field(default_factory=dict, repr=False)

    def records(self) -> list[ClassRecord]:
        return [r for s in sorted(self.by_size) for r in self.by_size[s]]

    def get(self, name: str) -> ClassRecord:
        for r in self.records():
            if r.name == name:
                return r
        raise KeyError(name)

    def sizes_available(self) -> list[int]:
        return [s for s in sorted(self.by_size) if self.by_size[s]]

    def add_size(self, size: int, records: list[ClassRecord]) -> None:
        self.by_size[size] = records
        self._index.pop(size, None)

    def match(self, block: IntMatrix) -> ClassRecord:
        """Library record H-equivalent to the primitive ``block``."""
        size = len(block)
        if size not in self.by_size:
            raise UnknownPrimitiveError(block)
        depth = min(4, size)
        idx = self._index.get(size)
        if idx is None:
            idx = self._index[size] = {}
            for rec in self.by_size[size]:
                idx.setdefault(code_invariant(rec.representative, depth), []).append(rec)
        for rec in idx.get(code_invariant(block, depth), ()):
            if rec.representative == block or find_isomorphism(rec.representative, block) is not None:
                return rec
        raise UnknownPrimitiveError(block)


def _primitive_records(size: int, reps: Sequence[IntMatrix]) -> list[ClassRecord]:
    total = hadamard_group_order(size)
    recs = []
    for serial, a in enumerate(reps, start=1):
        g = aut_group(a)
        if total % g.order:
            raise ConsistencyError(f"|Aut| = {g.order} does not divide {total}")
        recs.append(ClassRecord(
            name=f"{size}.{serial}",
            representative=a,
            aut_order=g.order,
            cardinality=total // g.order,
            primitive=True,
            symmetric_class=False,
            aut=g,
        ))
    for rec in recs:
        at = transpose(rec.representative)
        if find_isomorphism(rec.representative, at) is not None:
            rec.symmetric_class = True
            continue
        for other in recs:
            if other is not rec and other.aut_order == rec.aut_order and \
                    find_isomorphism(other.representative, at) is not None:
                rec.th_partner = other.name
                break
        else:
            raise ConsistencyError(f"transpose of {rec.name} missing from the list")
    return recs


def primitive_classes(size: int, weight: int, mindepth: Optional[int] = None,
                      entry_cap: Optional[int] = None, workers: int = 1) -> list[ClassRecord]:
    """Search, deduplicate and keep the primitive classes of ``IW(size, weight)``."""
    md = size if mindepth is None else mindepth
    reps = rep_piw(size, size, weight, mindepth=md, entry_cap=entry_cap, workers=workers)
    if md < size:
        reps = dedup_classes(reps)
    return _primitive_records(size, [a for a in reps if is_primitive(a)])


def build_library(max_size: int, weight: int, **kw) -> Library:
    lib = Library(weight)
    for s in range(1, max_size + 1):
        lib.add_size(s, primitive_classes(s, weight, **kw))
    return lib


# ---------------------------------------------------------------------------
# Decomposition and assembly
# ---------------------------------------------------------------------------

def _order_key(rec: ClassRecord) -> tuple[int, int]:
    return rec.size, rec.serial


def primitive_decompose(a: IntMatrix, library: Library) -> Decomposition:
    counts: Counter = Counter()
    recs: dict[str, ClassRecord] = {}
    for rows, cols in support_components(a):
        rec = library.match(_block(a, rows, cols))
        counts[rec.name] += 1
        recs[rec.name] = rec
    comps = sorted(((recs[nm], c) for nm, c in counts.items()), key=lambda t: _order_key(t[0]))
    return Decomposition(tuple(comps))


def assembled_aut_order(d: Decomposition) -> int:
    """Wreath product order ``prod |Aut(A_t)|^r_t * r_t!``."""
    out = 1
    for rec, mult in d.components:
        out *= rec.aut_order ** mult * factorial(mult)
    return out


def shape_letters(library: Library) -> dict[int, str]:
    return {s: chr(ord("A") + i) for i, s in enumerate(library.sizes_available())}


def shape_label(d: Decomposition, letters: dict[int, str]) -> str:
    by_size: Counter = Counter()
    for rec, mult in d.components:
        by_size[rec.size] += mult
    parts = []
    for s in sorted(by_size):
        c = by_size[s]
        parts.append(f"{c if c > 1 else ''}{letters[s]}")
    return "+".join(parts)


def _multisets(items: Sequence[ClassRecord], n: int, start: int = 0) -> Iterable[list[tuple[ClassRecord, int]]]:
    if n == 0:
        yield []
        return
    for i in range(start, len(items)):
        rec = items[i]
        for mult in range(n // rec.size, 0, -1):
            for rest in _multisets(items, n - mult * rec.size, i + 1):
                yield [(rec, mult)] + rest


def class_name(comps: Sequence[tuple[str, int]]) -> str:
    return "+".join(nm if c == 1 else f"{c}*{nm}" for nm, c in comps)


@dataclass
class FullClassification:
    size: int
    weight: int
    records: list[ClassRecord]
    decompositions: dict[str, Decomposition]
    shapes: dict[str, str]
    h_count: int
    th_count: int

    def shape_table(self) -> list[tuple[str, int, int]]:
        """``(shape, TH multiplicity, H multiplicity)`` rows."""
        h: Counter = Counter()
        th: Counter = Counter()
        for rec in self.records:
            s = self.shapes[rec.name]
            h[s] += 1
            if rec.th_partner is None or rec.name < rec.th_partner:
                th[s] += 1
        return [(s, th[s], h[s]) for s in h]


def assemble_full_classification(library: Library, n: int) -> FullClassification:
    """Every H-class of ``IW(n, weight)`` as a multiset of primitive classes."""
    missing = [s for s in range(1, n + 1) if s not in library.by_size]
    if missing:
        raise ConsistencyError(f"library lacks primitive lists for sizes {missing}")
    items = sorted(library.records(), key=_order_key)
    items = [r for r in items if r.size <= n]
    letters = shape_letters(library)
    total = hadamard_group_order(n)
    records: list[ClassRecord] = []
    decs: dict[str, Decomposition] = {}
    shapes: dict[str, str] = {}
    for combo in _multisets(items, n):
        d = Decomposition(tuple(sorted(combo, key=lambda t: _order_key(t[0]))))
        comps = d.names()
        name = class_name(comps)
        aut_order = assembled_aut_order(d)
        rep = block_diag([rec.representative for rec, mult in d.components for _ in range(mult)])
        partner_counts: Counter = Counter()
        for rec, mult in d.components:
            partner_counts[rec.th_partner or rec.name] += mult
        partner = tuple(sorted(partner_counts.items(), key=lambda t: _order_key(library.get(t[0]))))
        symmetric = dict(partner) == dict(comps)
        single = len(comps) == 1 and comps[0][1] == 1
        records.append(ClassRecord(
            name=name,
            representative=rep,
            aut_order=aut_order,
            cardinality=total // aut_order,
            primitive=single,
            symmetric_class=symmetric,
            th_partner=None if symmetric else class_name(partner),
            aut=d.components[0][0].aut if single else None,
            components=comps,
        ))
        decs[name] = d
        shapes[name] = shape_label(d, letters)
    h = len(records)
    th = sum(1 for r in records if r.th_partner is None or r.name < r.th_partner)
    return FullClassification(n, library.weight, records, decs, shapes, h, th)


def validate_record(rec: ClassRecord, weight: int) -> None:
    """Raise ConsistencyError if the record violates a basic invariant."""
    a = rec.representative
    n = len(a)
    if not gram_check(a, weight):
        raise ConsistencyError(f"{rec.name}: Gram condition fails")
    if rec.cardinality * rec.aut_order != hadamard_group_order(n):
        raise ConsistencyError(f"{rec.name}: orbit-stabilizer relation fails")
    if rec.primitive != is_primitive(a):
        raise ConsistencyError(f"{rec.name}: primitivity flag disagrees with support graph")
    if rec.aut is not None:
        for p in rec.aut.generators:
            if p.apply(a) != a:
                raise ConsistencyError(f"{rec.name}: generator does not fix the representative")
