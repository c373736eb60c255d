import json

import pytest

from iwclass.database import (
    ClassDatabase,
    DatabaseError,
    DatabaseHeader,
    covered_size,
    dumps,
    load_database,
    load_library,
    primitive_database,
    save_database,
    save_library,
)
from iwclass.structure import Library, assemble_full_classification


def _same(a, b):
    assert a.header == b.header
    assert len(a.records) == len(b.records)
    for x, y in zip(a.records, b.records):
        assert (x.name, x.representative, x.aut_order, x.cardinality, x.primitive, x.symmetric_class,
                x.th_partner, x.components) == (y.name, y.representative, y.aut_order, y.cardinality,
                                                y.primitive, y.symmetric_class, y.th_partner, y.components)
        assert (x.aut is None) == (y.aut is None)
        if x.aut is not None:
            assert x.aut.generators == y.aut.generators
    assert [(s.parent, s.sign, s.reps, s.saut_orders) for s in a.symmetric] == \
        [(s.parent, s.sign, s.reps, s.saut_orders) for s in b.symmetric]


def test_round_trip(tmp_path, library, sym_plus):
    db = primitive_database(6, 25, library.by_size[6])
    db.symmetric = [sym_plus[r.name].sym for r in library.by_size[6] if sym_plus[r.name].sym.count]
    path = tmp_path / "p6.iwdb"
    save_database(db, path)
    back = load_database(path)
    _same(db, back)
    assert dumps(back) == path.read_text()


def test_full_round_trip(tmp_path, library):
    fc = assemble_full_classification(library, 5)
    db = ClassDatabase(DatabaseHeader(5, 25, "full", complete_sizes=[5]), fc.records)
    save_database(db, tmp_path / "f.iwdb")
    _same(db, load_database(tmp_path / "f.iwdb"))


def test_empty_database_is_valid(tmp_path):
    db = primitive_database(3, 25, [])
    save_database(db, tmp_path / "e.iwdb")
    back = load_database(tmp_path / "e.iwdb")
    assert back.records == [] and back.header.complete_sizes == [3]


def _tamper(tmp_path, library, edit):
    path = tmp_path / "t.iwdb"
    save_database(primitive_database(4, 25, library.by_size[4]), path)
    data = json.loads(path.read_text())
    edit(data)
    path.write_text(json.dumps(data))
    return path


def test_tampered_representative(tmp_path, library):
    def edit(d):
        d["classes"][0]["representative"][0][0] += 1

    with pytest.raises(DatabaseError):
        load_database(_tamper(tmp_path, library, edit))


def test_tampered_generator_and_order(tmp_path, library):
    def swap_gen(d):
        d["classes"][0]["generators"] = d["classes"][1]["generators"]

    def bad_order(d):
        d["classes"][0]["aut_order"] = "7"

    for edit in (swap_gen, bad_order):
        with pytest.raises(DatabaseError):
            load_database(_tamper(tmp_path, library, edit))


def test_version_mismatch(tmp_path, library):
    def edit(d):
        d["version"] = 99

    with pytest.raises(DatabaseError, match="schema version"):
        load_database(_tamper(tmp_path, library, edit))


def test_library_directory(tmp_path, library):
    small = Library(25, {s: library.by_size[s] for s in range(1, 6)})
    save_library(small, tmp_path)
    back = load_library(tmp_path, 25)
    assert covered_size(back) == 5
    assert [r.name for r in back.records()] == [r.name for r in small.records()]
    assert load_library(tmp_path, 16).by_size == {}
