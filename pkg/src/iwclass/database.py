"""Versioned JSON storage for class lists (``.iwdb`` files).

Layout::

    {"format": "iwdb", "version": 1,
     "header": {"size", "weight", "entry_cap", "tool_version", "kind",
                "complete_sizes"},
     "classes": [{"name", "representative", "aut_order", "cardinality",
                  "primitive", "symmetric_class", "th_partner",
                  "generators", "components"}, ...],
     "symmetric": [{"parent", "sign", "reps", "saut_orders"}, ...]}

Integers that can outgrow a double (orders, cardinalities) are strings.  A
generator is ``[left_perm, left_signs, right_perm, right_signs]``.  Keys are
sorted and the file ends with a newline, so equal databases are equal bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Union

from . import __version__
from .autiso import group_from_pairs
from .core import HadamardPair, IntMatrix, SignedPerm, apply_pair, as_matrix, gram_check, shape
from .structure import ClassRecord, ConsistencyError, Library
from .symmetry import SymClassRecord

FORMAT = "iwdb"
SCHEMA_VERSION = 1
KINDS = ("primitive", "classes", "full")


class DatabaseError(ConsistencyError):
    """Unreadable, wrong-version or self-inconsistent database."""


@dataclass
class DatabaseHeader:
    size: Optional[int]
    weight: int
    kind: str = "primitive"
    entry_cap: Optional[int] = None
    tool_version: str = __version__
    complete_sizes: list[int] = field(default_factory=list)


@dataclass
class ClassDatabase:
    header: DatabaseHeader
    records: list[ClassRecord] = field(default_factory=list)
    symmetric: list[SymClassRecord] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "format": FORMAT,
            "version": SCHEMA_VERSION,
            "header": vars(self.header).copy(),
            "classes": [_record_json(r) for r in self.records],
            "symmetric": [_sym_json(s) for s in self.symmetric],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ClassDatabase":
        if data.get("format") != FORMAT:
            raise DatabaseError("not an iwdb document")
        if data.get("version") != SCHEMA_VERSION:
            raise DatabaseError(f"schema version {data.get('version')} is not {SCHEMA_VERSION}")
        try:
            header = DatabaseHeader(**data["header"])
        except TypeError as exc:
            raise DatabaseError(f"bad header: {exc}") from None
        if header.kind not in KINDS:
            raise DatabaseError(f"unknown kind {header.kind!r}")
        records = [_record_from(d, header.weight) for d in data.get("classes", [])]
        sym = [_sym_from(d) for d in data.get("symmetric", [])]
        return cls(header, records, sym)


# ---------------------------------------------------------------------------
# Record (de)serialisation
# ---------------------------------------------------------------------------

def _pair_json(p: HadamardPair) -> list:
    return [list(p.left.perm), list(p.left.signs), list(p.right.perm), list(p.right.signs)]


def _pair_from(x: Sequence) -> HadamardPair:
    lp, ls, rp, rs = x
    return HadamardPair(SignedPerm(tuple(lp), tuple(ls)), SignedPerm(tuple(rp), tuple(rs)))


def _record_json(r: ClassRecord) -> dict:
    return {
        "name": r.name,
        "representative": [list(row) for row in r.representative],
        "aut_order": str(r.aut_order),
        "cardinality": str(r.cardinality),
        "primitive": r.primitive,
        "symmetric_class": r.symmetric_class,
        "th_partner": r.th_partner,
        "generators": [_pair_json(p) for p in r.aut.generators] if r.aut is not None else None,
        "components": [[nm, c] for nm, c in r.components],
    }


def _record_from(d: dict, weight: int) -> ClassRecord:
    try:
        a = as_matrix(d["representative"])
        name = d["name"]
        aut_order = int(d["aut_order"])
        card = int(d["cardinality"])
    except (KeyError, ValueError, TypeError) as exc:
        raise DatabaseError(f"malformed class record: {exc}") from None
    if not gram_check(a, weight):
        raise DatabaseError(f"{name}: representative fails A A^T = {weight} I")
    aut = None
    if d.get("generators") is not None:
        pairs = [_pair_from(x) for x in d["generators"]]
        for p in pairs:
            if apply_pair(p, a) != a:
                raise DatabaseError(f"{name}: stored generator does not fix the representative")
        m, n = shape(a)
        aut = group_from_pairs(m, n, pairs)
        if aut.order != aut_order:
            raise DatabaseError(f"{name}: generators give order {aut.order}, header says {aut_order}")
    return ClassRecord(
        name=name,
        representative=a,
        aut_order=aut_order,
        cardinality=card,
        primitive=bool(d.get("primitive", False)),
        symmetric_class=bool(d.get("symmetric_class", False)),
        th_partner=d.get("th_partner"),
        aut=aut,
        components=tuple((nm, int(c)) for nm, c in d.get("components", [])),
    )


def _sym_json(s: SymClassRecord) -> dict:
    return {
        "parent": s.parent,
        "sign": s.sign,
        "reps": [[list(row) for row in r] for r in s.reps],
        "saut_orders": [str(x) for x in s.saut_orders],
    }


def _sym_from(d: dict) -> SymClassRecord:
    reps = [as_matrix(r) for r in d["reps"]]
    sign = int(d["sign"])
    for r in reps:
        if any(r[i][j] != sign * r[j][i] for i in range(len(r)) for j in range(len(r))):
            raise DatabaseError(f"{d['parent']}: stored representative is not sign-symmetric")
    return SymClassRecord(d["parent"], sign, reps, [int(x) for x in d["saut_orders"]])


# ---------------------------------------------------------------------------
# Files and libraries
# ---------------------------------------------------------------------------

PathLike = Union[str, Path]


def dumps(db: ClassDatabase) -> str:
    return json.dumps(db.to_json(), sort_keys=True, separators=(",", ":")) + "\n"


def save_database(db: ClassDatabase, path: PathLike) -> None:
    Path(path).write_text(dumps(db), encoding="utf-8")


def load_database(path: PathLike) -> ClassDatabase:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DatabaseError(f"{path}: {exc}") from None
    return ClassDatabase.from_json(data)


def primitive_database(size: int, weight: int, records: Sequence[ClassRecord],
                       entry_cap: Optional[int] = None) -> ClassDatabase:
    complete = [size] if entry_cap is None else []
    return ClassDatabase(DatabaseHeader(size, weight, "primitive", entry_cap, complete_sizes=complete),
                         list(records))


def library_file(directory: PathLike, size: int, weight: int) -> Path:
    return Path(directory) / f"prim{size}_{weight}.iwdb"


def save_library(library: Library, directory: PathLike) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    out = []
    for size in sorted(library.by_size):
        path = library_file(d, size, library.weight)
        save_database(primitive_database(size, library.weight, library.by_size[size]), path)
        out.append(path)
    return out


def load_library(directory: PathLike, weight: int) -> Library:
    """Collect complete primitive lists of one weight from every database in a directory."""
    lib = Library(weight)
    d = Path(directory)
    if not d.is_dir():
        raise DatabaseError(f"{directory} is not a directory")
    for path in sorted(d.iterdir()):
        if path.suffix not in (".iwdb", ".db"):
            continue
        db = load_database(path)
        h = db.header
        if h.weight != weight or h.kind != "primitive":
            continue
        for size in h.complete_sizes:
            recs = [r for r in db.records if r.size == size and r.primitive]
            if size in lib.by_size and [r.name for r in lib.by_size[size]] != [r.name for r in recs]:
                raise DatabaseError(f"conflicting primitive lists for size {size}")
            lib.add_size(size, recs)
    return lib


def covered_size(library: Library) -> int:
    """Largest ``n`` such that primitive lists of sizes ``1..n`` are all present."""
    n = 0
    while n + 1 in library.by_size:
        n += 1
    return n


def matrix_json(a: IntMatrix) -> list[list[int]]:
    return [list(r) for r in a]
