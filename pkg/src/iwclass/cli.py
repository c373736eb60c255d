"""Command-line front end: ``iwclass <subcommand> ...``.

Exit status: 0 success, 1 a ``validate`` check failed, 2 usage or input
error, 3 capacity exceeded, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .autiso import aut_group, find_isomorphism
from .canon import ExhaustionError, code_invariant, minclass
from .core import IntMatrix, as_matrix, format_matrix, gram_check, is_symmetric, max_abs_entry, parse_matrix, shape
from .counting import (
    IncompleteDataError,
    count_iw,
    count_sym_iw,
    library_counting_data,
    library_symmetric_data,
)
from .database import (
    ClassDatabase,
    DatabaseError,
    DatabaseHeader,
    covered_size,
    load_database,
    load_library,
    matrix_json,
    primitive_database,
    save_database,
    save_library,
)
from .newaut import certify, new_aut
from .nsoks import nsoks
from .projective import (
    ProjectiveSpace,
    projective_incidence,
    projective_weighing,
    verify_projective_symmetric_count,
)
from .search import dedup_classes, rep_piw
from .structure import (
    ClassRecord,
    ConsistencyError,
    Decomposition,
    FullClassification,
    Library,
    UnknownPrimitiveError,
    assemble_full_classification,
    assembled_aut_order,
    build_library,
    hadamard_group_order,
    is_primitive,
    primitive_classes,
    primitive_decompose,
)
from .symmetry import (
    CapacityError,
    SymClassRecord,
    assemble_symmetric_classification,
    primitive_sym_data,
    sym_classes,
    total_symmetric_count,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_CONSISTENCY = 4

log = logging.getLogger("iwclass")


@dataclass
class Config:
    """Tunables that may come from a JSON config file."""

    mindepth: Optional[int] = None
    stream_bound: int = 10 ** 7
    workers: int = 1
    max_rows: int = 8
    newaut_r: int = 2

    @classmethod
    def load(cls, path: Optional[str]) -> "Config":
        if path is None:
            return cls()
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)


class _Out:
    """Collects output in either a plain table or JSON records."""

    def __init__(self, fmt: str) -> None:
        self.fmt = fmt
        self.items: list = []

    @property
    def table(self) -> bool:
        return self.fmt == "table"

    def line(self, text: str = "") -> None:
        if self.table:
            print(text)

    def record(self, obj) -> None:
        if not self.table:
            self.items.append(obj)

    def result(self, obj) -> None:
        """The single JSON object of a command that yields one answer."""
        if not self.table:
            self.single = obj

    def flush(self) -> None:
        if not self.table:
            print(json.dumps(getattr(self, "single", self.items), sort_keys=True))


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def read_matrix(path: str) -> IntMatrix:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("["):
        return as_matrix(json.loads(text))
    return parse_matrix(text)


def _weight_of(a: IntMatrix) -> Optional[int]:
    k = sum(x * x for x in a[0])
    return k if gram_check(a, k) else None


def _library(args, weight: int) -> Library:
    lib = load_library(args.library, weight)
    if not lib.by_size:
        raise IncompleteDataError(f"no primitive lists of weight {weight} in {args.library}")
    return lib


def _truncate(lib: Library, n: int, weighing_only: bool = False) -> Library:
    out = Library(lib.weight)
    for s in range(1, n + 1):
        if s in lib.by_size:
            recs = lib.by_size[s]
            if weighing_only:
                recs = [r for r in recs if max_abs_entry(r.representative) <= 1]
            out.add_size(s, recs)
    return out


def _saut_text(orders: Sequence[int]) -> str:
    if not orders:
        return "--"
    c = Counter(orders)
    return "+".join(f"{c[o]}({o})" for o in sorted(c))


def _pair_text(p) -> str:
    return f"L={list(p.left.perm)}{list(p.left.signs)} R={list(p.right.perm)}{list(p.right.signs)}"


def _pair_obj(p) -> dict:
    return {"left": [list(p.left.perm), list(p.left.signs)],
            "right": [list(p.right.perm), list(p.right.signs)]}


def _record_obj(r: ClassRecord) -> dict:
    return {"name": r.name, "aut_order": r.aut_order, "cardinality": r.cardinality,
            "primitive": r.primitive, "symmetric_class": r.symmetric_class,
            "th_partner": r.th_partner, "representative": matrix_json(r.representative)}


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_nsoks(args, cfg: Config, out: _Out) -> int:
    reps = nsoks(args.n, args.r, args.maxsq)
    if args.count_only:
        out.line(str(len(reps)))
        out.result({"n": args.n, "r": args.r, "count": len(reps)})
        return EXIT_OK
    for rep in reps:
        out.line(" ".join(f"{s}^{c}" for s, c in rep))
        out.record([[s, c] for s, c in rep])
    return EXIT_OK


def cmd_classify(args, cfg: Config, out: _Out) -> int:
    m, n, k = args.rows, args.cols, args.weight
    md = args.mindepth if args.mindepth is not None else cfg.mindepth
    workers = args.workers or cfg.workers
    if m == n:
        recs = primitive_classes(m, k, mindepth=md, entry_cap=args.entry_cap, workers=workers)
        db = primitive_database(m, k, recs, args.entry_cap)
    else:
        reps = rep_piw(m, n, k, mindepth=md, entry_cap=args.entry_cap, workers=workers, max_rows=cfg.max_rows)
        if md is not None and md < m:
            reps = dedup_classes(reps, max_rows=cfg.max_rows)
        total = hadamard_group_order(m, n)
        recs = []
        for i, a in enumerate(reps, start=1):
            g = aut_group(a)
            recs.append(ClassRecord(f"{m}x{n}.{i}", a, g.order, total // g.order,
                                    is_primitive(a), False, aut=g))
        db = ClassDatabase(DatabaseHeader(m, k, "classes", args.entry_cap), recs)
    for r in recs:
        out.line(f"{r.name}  |Aut|={r.aut_order}  cardinality={r.cardinality}")
        out.record(_record_obj(r))
    out.line(f"total {len(recs)}")
    if args.out:
        save_database(db, args.out)
    return EXIT_OK


def cmd_library(args, cfg: Config, out: _Out) -> int:
    lib = build_library(args.max_size, args.weight, mindepth=cfg.mindepth, workers=args.workers or cfg.workers)
    for path in save_library(lib, args.dir):
        out.line(str(path))
    for s in sorted(lib.by_size):
        out.line(f"size {s}: {len(lib.by_size[s])} primitive H-classes")
        out.record({"size": s, "count": len(lib.by_size[s])})
    return EXIT_OK


def cmd_minclass(args, cfg: Config, out: _Out) -> int:
    mn = minclass(read_matrix(args.matrix), cfg.max_rows)
    out.line(format_matrix(mn))
    out.result(matrix_json(mn))
    return EXIT_OK


def cmd_codeinv(args, cfg: Config, out: _Out) -> int:
    inv = code_invariant(read_matrix(args.matrix), args.depth, max_rows=cfg.max_rows)
    for code, mult in inv.codes:
        out.line(f"{code} {mult}")
    out.result({"depth": inv.d, "codes": [[str(c), m] for c, m in inv.codes]})
    return EXIT_OK


def cmd_aut(args, cfg: Config, out: _Out) -> int:
    a = read_matrix(args.matrix)
    g = aut_group(a)
    added = None
    if args.certify is not None:
        g, added = certify(a, g, args.certify)
    out.line(f"order {g.order}")
    for p in g.generators:
        out.line(_pair_text(p))
    if added is not None:
        out.line(f"certified (r={args.certify}, added {added})")
    out.result({"order": g.order, "generators": [_pair_obj(p) for p in g.generators],
                "certified": added is not None, "added": added})
    return EXIT_OK


def cmd_iso(args, cfg: Config, out: _Out) -> int:
    a, b = read_matrix(args.a), read_matrix(args.b)
    p = find_isomorphism(a, b) if shape(a) == shape(b) else None
    out.line("not equivalent" if p is None else "equivalent " + _pair_text(p))
    out.result({"equivalent": p is not None, "witness": None if p is None else _pair_obj(p)})
    return EXIT_OK


def cmd_decompose(args, cfg: Config, out: _Out) -> int:
    a = read_matrix(args.matrix)
    k = _weight_of(a)
    if k is None:
        raise ValueError("input is not an IW matrix")
    d = primitive_decompose(a, _library(args, k))
    name = "+".join(nm if c == 1 else f"{c}*{nm}" for nm, c in d.names())
    order = assembled_aut_order(d)
    out.line(f"{name}  |Aut|={order}")
    out.result({"class": name, "components": d.names(), "aut_order": order})
    return EXIT_OK


def _assemble(args) -> tuple[Library, FullClassification]:
    lib = _library(args, args.weight)
    if covered_size(lib) < args.size:
        raise IncompleteDataError(f"library covers sizes up to {covered_size(lib)}, need {args.size}")
    lib = _truncate(lib, args.size)
    return lib, assemble_full_classification(lib, args.size)


def _full_database(fc: FullClassification, sym: Sequence[SymClassRecord] = ()) -> ClassDatabase:
    header = DatabaseHeader(fc.size, fc.weight, "full", complete_sizes=[fc.size])
    return ClassDatabase(header, list(fc.records), list(sym))


def cmd_assemble(args, cfg: Config, out: _Out) -> int:
    _, fc = _assemble(args)
    for r in fc.records:
        out.line(f"{r.name}  {fc.shapes[r.name]}  |Aut|={r.aut_order}  cardinality={r.cardinality}")
        out.record(dict(_record_obj(r), shape=fc.shapes[r.name]))
    out.line(f"H-classes {fc.h_count}  TH-classes {fc.th_count}")
    out.line(f"total cardinality {sum(r.cardinality for r in fc.records)}")
    if args.out:
        save_database(_full_database(fc), args.out)
    return EXIT_OK


def cmd_symclasses(args, cfg: Config, out: _Out) -> int:
    a = read_matrix(args.matrix)
    sign = -1 if args.anti else 1
    sym = sym_classes(a, None, sign, cfg.stream_bound)
    for rep, s in zip(sym.reps, sym.saut_orders):
        out.line(f"|SAut|={s}")
        out.line(format_matrix(rep))
        out.line()
        out.record({"saut_order": s, "representative": matrix_json(rep)})
    out.line(f"{sym.count} SH-classes")
    return EXIT_OK


def cmd_assemble_sym(args, cfg: Config, out: _Out) -> int:
    lib, fc = _assemble(args)
    sign = -1 if args.anti else 1
    data = primitive_sym_data(lib, sign, cfg.stream_bound)
    recs = assemble_symmetric_classification(fc, data, sign)
    for s in recs:
        out.line(f"{s.parent}  {s.count}  {_saut_text(s.saut_orders)}")
        out.record({"class": s.parent, "count": s.count, "saut_orders": s.saut_orders})
    out.line(f"SH-classes {sum(s.count for s in recs)}  members {total_symmetric_count(recs, args.size)}")
    if args.out:
        save_database(_full_database(fc, recs), args.out)
    return EXIT_OK


def cmd_count(args, cfg: Config, out: _Out) -> int:
    lib = _library(args, args.weight)
    covered = covered_size(lib)
    if covered < args.size:
        raise IncompleteDataError(f"library covers sizes up to {covered}, need {args.size}")
    lib = _truncate(lib, args.size, args.weighing_only)
    if args.symmetric or args.antisymmetric:
        sign = 1 if args.symmetric else -1
        data = primitive_sym_data(lib, sign, cfg.stream_bound)
        ordinary, symmetric = library_symmetric_data(lib, data)
        value = count_sym_iw(ordinary, symmetric, args.size, sign, covered)
        kind = "SIW" if sign == 1 else "AIW"
    else:
        value = count_iw(library_counting_data(lib), args.size, covered)
        kind = "IW"
    if args.weighing_only:
        kind = kind.replace("IW", "W")
    out.line(str(value))
    out.result({"kind": kind, "size": args.size, "weight": args.weight, "count": value})
    return EXIT_OK


def cmd_projective(args, cfg: Config, out: _Out) -> int:
    space = ProjectiveSpace(args.dim, args.prime)
    a = projective_incidence(space) if args.incidence else projective_weighing(space)
    info = {"dim": space.d, "prime": space.p, "size": space.size, "symmetric": is_symmetric(a),
            "incidence": args.incidence}
    if not args.incidence:
        info["gram_ok"] = gram_check(a, space.weight)
        out.line(f"PW({space.d},{space.p}): W({space.size},{space.weight})  symmetric={info['symmetric']}  "
                 f"gram={info['gram_ok']}")
    else:
        out.line(f"PI({space.d},{space.p}): {space.size}x{space.size}  symmetric={info['symmetric']}")
    if args.print_matrix:
        out.line(format_matrix(a))
        info["matrix"] = matrix_json(a)
    if args.verify_symmetric:
        rep = verify_projective_symmetric_count(space, args.incidence, cfg.stream_bound)
        info.update(aut_order=rep.aut_order, predicted_aut_order=rep.predicted_aut_order,
                    computed=rep.computed, predicted=rep.predicted, saut_orders=rep.sym.saut_orders,
                    negative_same_class=rep.negative_same_class)
        out.line(f"|Aut| = {rep.aut_order}" + (f" (predicted {rep.predicted_aut_order})"
                                               if rep.predicted_aut_order is not None else ""))
        out.line(f"SH-classes computed {rep.computed}, predicted {rep.predicted}  "
                 f"SAut {_saut_text(rep.sym.saut_orders)}")
        if rep.negative_same_class is not None:
            out.line(f"-PW SH-equivalent to PW: {rep.negative_same_class}")
        out.line("OK" if rep.ok else "MISMATCH")
    out.result(info)
    return EXIT_OK


# -- validate / report ------------------------------------------------------

def _default_library_dir(args) -> Path:
    return Path(args.library) if args.library else Path(args.db).parent


def _check_distinct(records: Sequence[ClassRecord], max_rows: int) -> list[str]:
    problems = []
    by_size: dict[int, list[ClassRecord]] = {}
    for r in records:
        by_size.setdefault(r.size, []).append(r)
    for size, recs in by_size.items():
        depth = min(4, size)
        buckets: dict = {}
        for r in recs:
            buckets.setdefault(code_invariant(r.representative, depth, max_rows=max_rows), []).append(r)
        for group in buckets.values():
            for i, x in enumerate(group):
                for y in group[i + 1:]:
                    if find_isomorphism(x.representative, y.representative) is not None:
                        problems.append(f"{x.name} and {y.name} are H-equivalent")
    return problems


def cmd_validate(args, cfg: Config, out: _Out) -> int:
    db = load_database(args.db)
    h = db.header
    checks: list[tuple[str, bool, str]] = []

    bad = [r.name for r in db.records if r.cardinality * r.aut_order != hadamard_group_order(*shape(r.representative))]
    checks.append(("orbit-stabilizer", not bad, ", ".join(bad)))

    failed = []
    certified = 0
    for r in db.records:
        if r.aut is None:
            continue
        res = new_aut(r.representative, r.aut, min(cfg.newaut_r, r.size))
        certified += 1
        if res is not True:
            failed.append(r.name)
    checks.append((f"new_aut certification ({certified} groups)", not failed, ", ".join(failed)))

    problems = _check_distinct(db.records, cfg.max_rows)
    checks.append(("pairwise distinct classes", not problems, "; ".join(problems)))

    if h.kind == "primitive":
        wrong = [r.name for r in db.records if r.primitive != is_primitive(r.representative)]
        checks.append(("primitivity flags", not wrong, ", ".join(wrong)))
    if h.kind == "full" and h.size is not None:
        lib = load_library(_default_library_dir(args), h.weight)
        expected = count_iw(library_counting_data(_truncate(lib, h.size)), h.size, covered_size(lib))
        total = sum(r.cardinality for r in db.records)
        checks.append(("cardinality sum", total == expected, f"{total} != {expected}"))
        wrong = []
        index = {r.name: r for r in lib.records()}
        for r in db.records:
            comps = [(index[nm], c) for nm, c in r.components if nm in index]
            if len(comps) != len(r.components):
                wrong.append(f"{r.name}: unknown component")
                continue
            if assembled_aut_order(Decomposition(tuple(comps))) != r.aut_order:
                wrong.append(r.name)
        checks.append(("wreath product orders", not wrong, ", ".join(wrong)))
        if db.symmetric:
            sym_total = total_symmetric_count(db.symmetric, h.size)
            sign = db.symmetric[0].sign
            ordinary, symmetric = library_symmetric_data(
                _truncate(lib, h.size), primitive_sym_data(_truncate(lib, h.size), sign, cfg.stream_bound))
            expected_s = count_sym_iw(ordinary, symmetric, h.size, sign)
            checks.append(("symmetric member sum", sym_total == expected_s, f"{sym_total} != {expected_s}"))

    ok = all(passed for _, passed, _ in checks)
    for name, passed, detail in checks:
        out.line(f"{'ok  ' if passed else 'FAIL'} {name}" + ("" if passed or not detail else f": {detail}"))
        out.record({"check": name, "passed": passed, "detail": "" if passed else detail})
    out.line("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_report(args, cfg: Config, out: _Out) -> int:
    db = load_database(args.db)
    h = db.header
    sign = -1 if args.anti else 1
    if h.kind == "full":
        lib = _truncate(load_library(_default_library_dir(args), h.weight), h.size)
        fc = assemble_full_classification(lib, h.size)
        out.line(f"{'Decomposition':<16}{'TH':>6}{'H':>6}")
        for shape_name, th, hh in fc.shape_table():
            out.line(f"{shape_name:<16}{th:>6}{hh:>6}")
            out.record({"shape": shape_name, "th": th, "h": hh})
        out.line(f"{'Total':<16}{fc.th_count:>6}{fc.h_count:>6}")
        out.line(f"total cardinality {sum(r.cardinality for r in db.records)}")
        return EXIT_OK
    out.line(f"{'Class':<8}{'|Aut|':>8}{'Cardinality':>22}{'#Sym':>6}  SAut")
    for r in db.records:
        if r.symmetric_class:
            s = sym_classes(r.representative, r.aut, sign, cfg.stream_bound, parent=r.name)
        else:
            s = SymClassRecord(r.name, sign)
        out.line(f"{r.name:<8}{r.aut_order:>8}{r.cardinality:>22}{s.count:>6}  {_saut_text(s.saut_orders)}")
        out.record({"class": r.name, "aut_order": r.aut_order, "cardinality": r.cardinality,
                    "sym_count": s.count, "saut_orders": s.saut_orders})
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted before or after the subcommand; the copies on
    # subparsers use SUPPRESS so they never overwrite a value given earlier.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS,
                        help="JSON file with mindepth, stream_bound, workers, max_rows, newaut_r")
    common.add_argument("--format", choices=("table", "records"), default=argparse.SUPPRESS)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="iwclass", description="Integer weighing matrix classification tools.",
                                parents=[common])
    p.add_argument("--version", action="version", version=__version__)
    subparsers = p.add_subparsers(dest="command", required=True)

    class _Sub:
        def add_parser(self, name, **kw):
            return subparsers.add_parser(name, parents=[common], **kw)

    sub = _Sub()

    s = sub.add_parser("nsoks", help="representations as sums of squares")
    s.add_argument("n", type=int)
    s.add_argument("r", type=int)
    s.add_argument("--maxsq", type=int)
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_nsoks)

    s = sub.add_parser("classify", help="Hadamard classes of PIW(m, n, k)")
    s.add_argument("--rows", type=int, required=True)
    s.add_argument("--cols", type=int, required=True)
    s.add_argument("--weight", type=int, required=True)
    s.add_argument("--mindepth", type=int)
    s.add_argument("--entry-cap", type=int)
    s.add_argument("--workers", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("library", help="build and save primitive lists for sizes 1..N")
    s.add_argument("--max-size", type=int, required=True)
    s.add_argument("--weight", type=int, required=True)
    s.add_argument("--dir", required=True)
    s.add_argument("--workers", type=int)
    s.set_defaults(func=cmd_library)

    s = sub.add_parser("minclass", help="row-lex minimum of the Hadamard class")
    s.add_argument("--matrix", required=True)
    s.set_defaults(func=cmd_minclass)

    s = sub.add_parser("codeinv", help="code invariant at a depth")
    s.add_argument("--matrix", required=True)
    s.add_argument("--depth", type=int, required=True)
    s.set_defaults(func=cmd_codeinv)

    s = sub.add_parser("aut", help="automorphism group")
    s.add_argument("--matrix", required=True)
    s.add_argument("--certify", type=int, metavar="R")
    s.set_defaults(func=cmd_aut)

    s = sub.add_parser("iso", help="Hadamard equivalence test")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("decompose", help="primitive decomposition against a library")
    s.add_argument("--matrix", required=True)
    s.add_argument("--library", required=True)
    s.set_defaults(func=cmd_decompose)

    for name, func, help_text in (("assemble", cmd_assemble, "full classification from a library"),
                                  ("assemble-sym", cmd_assemble_sym, "symmetric classification from a library")):
        s = sub.add_parser(name, help=help_text)
        s.add_argument("--size", type=int, required=True)
        s.add_argument("--weight", type=int, required=True)
        s.add_argument("--library", required=True)
        s.add_argument("--out")
        if name == "assemble-sym":
            s.add_argument("--anti", action="store_true")
        s.set_defaults(func=func)

    s = sub.add_parser("symclasses", help="SH-classes of (anti-)symmetric members of a class")
    s.add_argument("--matrix", required=True)
    s.add_argument("--anti", action="store_true")
    s.set_defaults(func=cmd_symclasses)

    s = sub.add_parser("count", help="|IW|, |SIW| or |AIW| from a library")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--weight", type=int, required=True)
    s.add_argument("--library", required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--symmetric", action="store_true")
    g.add_argument("--antisymmetric", action="store_true")
    s.add_argument("--weighing-only", action="store_true")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("projective", help="projective-space weighing or incidence matrix")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--prime", type=int, required=True)
    s.add_argument("--incidence", action="store_true")
    s.add_argument("--verify-symmetric", action="store_true")
    s.add_argument("--print-matrix", action="store_true")
    s.set_defaults(func=cmd_projective)

    s = sub.add_parser("validate", help="check a database")
    s.add_argument("--db", required=True)
    s.add_argument("--library")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("report", help="tables from a database")
    s.add_argument("--db", required=True)
    s.add_argument("--library")
    s.add_argument("--anti", action="store_true")
    s.set_defaults(func=cmd_report)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    for name, value in (("config", None), ("format", "table"), ("verbose", False)):
        if not hasattr(args, name):
            setattr(args, name, value)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    out = _Out(args.format)
    try:
        cfg = Config.load(args.config)
        status = args.func(args, cfg, out)
    except (CapacityError, ExhaustionError) as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ConsistencyError, DatabaseError, IncompleteDataError, UnknownPrimitiveError, ArithmeticError) as exc:
        print(f"consistency error: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.flush()
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
