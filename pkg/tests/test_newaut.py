import pytest

from iwclass.autiso import aut_group, group_from_pairs, trivial_group
from iwclass.core import apply_pair, block_diag
from iwclass.newaut import certify, new_aut, row_equivalent, row_witness, tuple_orbits

from conftest import B1, FIVE
from oracles import brute_aut_order
from test_canon import C1, C2


def test_row_equivalence():
    assert row_equivalent(((1, 2), (0, -3)), ((0, 3), (-1, -2)))
    assert not row_equivalent(((1, 2),), ((2, 1),))
    a = ((1, 2), (0, -3))
    b = ((0, 3), (-1, -2))
    p = row_witness(a, b)
    assert p.apply_rows(a) == b


def test_tuple_orbits_partition():
    g = aut_group(block_diag([FIVE, FIVE, B1]))
    orbs = tuple_orbits(4, 2, g)
    assert sum(len(o) for o in orbs) == 12
    assert orbs[0][0] == (0, 1)


def test_examples():
    a = block_diag([FIVE, FIVE])
    res = new_aut(a, trivial_group(2, 2), 1)
    assert res is not True and apply_pair(res, a) == a and not res.is_identity()
    assert new_aut(((-5,),), aut_group(((-5,),)), 1) is True


def test_certify_from_trivial_recovers_order():
    for a in (C1, C2, block_diag([FIVE, FIVE]), block_diag([FIVE, B1])):
        g, added = certify(a, trivial_group(len(a), len(a)), 2 if len(a) > 1 else 1)
        assert g.order == brute_aut_order(a)
        assert added >= 1


def test_never_returns_member():
    a = C1
    full = aut_group(a)
    partial = group_from_pairs(4, 4, full.generators[:1])
    res = new_aut(a, partial, 2)
    assert res is not True
    assert apply_pair(res, a) == a and not partial.contains(res)


def test_errors():
    with pytest.raises(ValueError):
        new_aut(C1, aut_group(C1), 5)
    with pytest.raises(ValueError):
        new_aut(C1, aut_group(C2), 2)


def test_first_tuple_reuse_is_incomplete():
    # Reusing the first tuple's column normaliser certifies an undersized group.
    assert new_aut(C1, trivial_group(4, 4), 2, reuse_first_ord=True) is True
    assert new_aut(C1, trivial_group(4, 4), 2) is not True


@pytest.mark.slow
def test_library_groups_certified(library):
    for rec in library.records():
        assert new_aut(rec.representative, rec.aut, min(2, rec.size)) is True, rec.name
