import json
from pathlib import Path

import pytest

from iwclass.core import as_matrix
from iwclass.structure import build_library
from iwclass.symmetry import primitive_sym_data

DATA = Path(__file__).parent / "data" / "primitive_iw25.json"

B1 = ((3, 4), (4, -3))
FIVE = ((5,),)


@pytest.fixture(scope="session")
def published():
    """Displayed primitive representatives and table rows for weight 25."""
    raw = json.loads(DATA.read_text())
    classes = {int(s): [as_matrix(m) for m in ms] for s, ms in raw["classes"].items()}
    return {"classes": classes, "table": raw["class_table"], "non_symmetric": raw["non_symmetric"]}


@pytest.fixture(scope="session")
def library():
    return build_library(7, 25)


@pytest.fixture(scope="session")
def sym_plus(library):
    return primitive_sym_data(library, 1)


@pytest.fixture(scope="session")
def sym_minus(library):
    return primitive_sym_data(library, -1)


@pytest.fixture(scope="session")
def label_map(published, library):
    """Published label ``size.q`` -> library record, matched by H-equivalence."""
    out = {}
    for size, mats in published["classes"].items():
        for q, m in enumerate(mats, start=1):
            out[f"{size}.{q}"] = library.match(m)
    return out


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
