import json
import subprocess
import sys

import pytest

from iwclass.cli import EXIT_CAPACITY, EXIT_CONSISTENCY, EXIT_FAIL, EXIT_OK, EXIT_USAGE, run
from iwclass.core import format_matrix
from iwclass.database import load_database, save_database

from conftest import B1


@pytest.fixture(scope="module")
def libdir(tmp_path_factory):
    d = tmp_path_factory.mktemp("lib")
    assert run(["library", "--max-size", "7", "--weight", "25", "--dir", str(d)]) == EXIT_OK
    return d


def out_of(capsys, argv, code=EXIT_OK):
    assert run(argv) == code
    return capsys.readouterr().out


def test_nsoks(capsys):
    assert out_of(capsys, ["nsoks", "200", "200", "--count-only"]).strip() == "27482"
    recs = json.loads(out_of(capsys, ["nsoks", "25", "4", "--format", "records"]))
    assert len(recs) == 3


def test_count(capsys, libdir):
    lib = str(libdir)
    assert out_of(capsys, ["count", "--size", "4", "--weight", "25", "--library", lib]).strip() == "37248"
    assert out_of(capsys, ["count", "--size", "4", "--weight", "25", "--library", lib,
                           "--antisymmetric"]).strip() == "60"
    assert out_of(capsys, ["count", "--size", "7", "--weight", "25", "--library", lib]).strip() == "1915159357440"
    assert out_of(capsys, ["count", "--size", "7", "--weight", "25", "--library", lib,
                           "--weighing-only"]).strip() == "0"
    assert run(["count", "--size", "8", "--weight", "25", "--library", lib]) == EXIT_CONSISTENCY


def test_assemble_validate_report(capsys, libdir, tmp_path):
    lib = str(libdir)
    db = libdir / "iw7_25.db"
    text = out_of(capsys, ["assemble", "--size", "7", "--weight", "25", "--library", lib, "--out", str(db)])
    assert "H-classes 49  TH-classes 44" in text
    text = out_of(capsys, ["validate", "--db", str(db)])
    assert text.strip().endswith("PASS")
    report = out_of(capsys, ["report", "--db", str(db)])
    assert "Total" in report and "1915159357440" in report
    prim = out_of(capsys, ["report", "--db", str(libdir / "prim4_25.iwdb")])
    assert "4.1" in prim and "1(4)+4(8)" in prim
    assert out_of(capsys, ["validate", "--db", str(libdir / "prim6_25.iwdb")]).strip().endswith("PASS")


def test_validate_detects_bad_order(capsys, libdir, tmp_path):
    d = load_database(libdir / "prim4_25.iwdb")
    d.records[1].cardinality += 1
    save_database(d, tmp_path / "bad.iwdb")
    text = out_of(capsys, ["validate", "--db", str(tmp_path / "bad.iwdb")], EXIT_FAIL)
    assert "FAIL orbit-stabilizer" in text


def test_assemble_sym(capsys, libdir):
    text = out_of(capsys, ["assemble-sym", "--size", "4", "--weight", "25", "--library", str(libdir), "--anti"])
    assert "members 60" in text


def test_matrix_commands(capsys, tmp_path):
    f = tmp_path / "b.txt"
    f.write_text(format_matrix(B1))
    assert out_of(capsys, ["minclass", "--matrix", str(f)]).split() == ["-4", "-3", "-3", "4"]
    aut = json.loads(out_of(capsys, ["aut", "--matrix", str(f), "--certify", "2", "--format", "records"]))
    assert aut["order"] == 4 and aut["certified"]
    assert "2 SH-classes" in out_of(capsys, ["symclasses", "--matrix", str(f)])
    assert out_of(capsys, ["iso", "--a", str(f), "--b", str(f)]).startswith("equivalent")
    j = tmp_path / "b.json"
    j.write_text(json.dumps([[5, 0], [0, 5]]))
    assert out_of(capsys, ["iso", "--a", str(f), "--b", str(j)]).strip() == "not equivalent"
    inv = json.loads(out_of(capsys, ["codeinv", "--matrix", str(f), "--depth", "2", "--format", "records"]))
    assert inv["depth"] == 2 and len(inv["codes"]) == 1


def test_decompose(capsys, libdir, tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("5 0 0 0\n0 3 4 0\n0 4 -3 0\n0 0 0 -5\n")
    assert out_of(capsys, ["decompose", "--matrix", str(f), "--library", str(libdir)]).startswith("2*1.1+2.1")


def test_classify(capsys, tmp_path):
    out = tmp_path / "c.iwdb"
    text = out_of(capsys, ["classify", "--rows", "2", "--cols", "3", "--weight", "25", "--out", str(out)])
    assert load_database(out).header.kind == "classes"
    assert text.strip().endswith(f"total {len(load_database(out).records)}")
    out_of(capsys, ["classify", "--rows", "3", "--cols", "3", "--weight", "25", "--out", str(out)])
    assert load_database(out).records == []


def test_projective(capsys):
    text = out_of(capsys, ["projective", "--dim", "2", "--prime", "3", "--verify-symmetric"])
    assert "W(13,9)" in text and "|Aut| = 11232" in text and "computed 2, predicted 2" in text
    assert run(["projective", "--dim", "3", "--prime", "3", "--verify-symmetric"]) == EXIT_CAPACITY


def test_usage_errors(capsys, tmp_path):
    assert run(["nonsense"]) == EXIT_USAGE
    assert run(["minclass", "--matrix", str(tmp_path / "missing")]) == EXIT_USAGE
    assert run(["projective", "--dim", "2", "--prime", "4"]) == EXIT_USAGE
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"bogus": 1}))
    assert run(["--config", str(cfg), "nsoks", "5", "2"]) == EXIT_USAGE


def test_config_stream_bound(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"stream_bound": 10}))
    f = tmp_path / "m.txt"
    f.write_text("-3 -2 -2 -2 -2\n-2 -3 2 2 2\n-2 2 -3 2 2\n-2 2 2 -3 2\n-2 2 2 2 -3\n")
    assert run(["symclasses", "--matrix", str(f), "--config", str(cfg)]) == EXIT_CAPACITY


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "iwclass.cli", "nsoks", "25", "4", "--count-only"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "3"
