import random

import pytest

from iwclass.autiso import (
    WeightedBipartiteGraph,
    aut_group,
    decode_pair,
    encode_pair,
    extend,
    find_isomorphism,
    graph_automorphisms,
    trivial_group,
)
from iwclass.core import HadamardPair, apply_pair, block_diag, transpose
from iwclass.structure import hadamard_group_order

from conftest import B1, FIVE
from oracles import brute_aut_order, brute_equivalent
from test_canon import C1, C2
from test_core import random_signed_perm


def test_extend_blocks():
    assert extend(((2,),)) == ((2, 0), (0, 2))
    assert extend(((-1,),)) == ((0, 1), (1, 0))
    assert extend(((0,),)) == ((0, 0), (0, 0))
    a = ((1, -2, 0), (3, 0, -1))
    assert extend(transpose(a)) == transpose(extend(a))


def test_graph_group_of_single_entry():
    g = WeightedBipartiteGraph.of_matrix(((-5,),))
    assert g.order == 4
    assert graph_automorphisms(g).order == 2


def test_small_orders_against_brute_force():
    five2 = block_diag([FIVE, FIVE])
    assert aut_group(((-5,),)).order == 2 == brute_aut_order(((-5,),))
    assert aut_group(((-4, -3), (-3, 4))).order == 4 == brute_aut_order(B1)
    assert aut_group(five2).order == 8 == brute_aut_order(five2)
    five3 = block_diag([FIVE] * 3)
    assert aut_group(five3).order == 48 == brute_aut_order(five3)
    mixed = block_diag([FIVE, B1])
    assert aut_group(mixed).order == 8 == brute_aut_order(mixed)
    assert aut_group(C1).order == 16 == brute_aut_order(C1)
    assert aut_group(C2).order == 8 == brute_aut_order(C2)


def test_rectangular_and_zero_columns():
    a = ((-5, 0, 0), (0, -4, -3))
    assert aut_group(a).order == brute_aut_order(a)
    z = ((3, 0), (4, 0))
    assert aut_group(z).order == brute_aut_order(z)


def test_generators_and_membership():
    rng = random.Random(9)
    for a in (C1, C2, block_diag([FIVE, FIVE, B1])):
        g = aut_group(a)
        assert hadamard_group_order(len(a)) % g.order == 0
        for p in g.generators:
            assert apply_pair(p, a) == a
            assert decode_pair(encode_pair(p), len(a), len(a)) == p
        prod = HadamardPair.identity(len(a), len(a))
        for _ in range(10):
            prod = prod * rng.choice(g.generators)
            assert g.contains(prod)
        if len(a) <= 4:
            assert sum(1 for _ in g.elements()) == g.order


def test_known_orders(library):
    assert library.get("5.2").aut_order == 240
    assert sorted(r.aut_order for r in library.by_size[4]) == [8, 16]


def test_isomorphism_examples():
    assert find_isomorphism(B1, B1) is not None
    assert find_isomorphism(((-5, 0), (0, -5)), ((-4, -3), (-3, 4))) is None
    assert find_isomorphism(B1, transpose(B1)) is not None
    assert find_isomorphism(C1, C2) is None
    assert not brute_equivalent(C1, C2)


def test_isomorphism_witness_random():
    rng = random.Random(12)
    for a in (C1, C2, block_diag([B1, FIVE, FIVE])):
        n = len(a)
        for _ in range(5):
            p = HadamardPair(random_signed_perm(n, rng), random_signed_perm(n, rng))
            b = apply_pair(p, a)
            w = find_isomorphism(a, b)
            assert w is not None and apply_pair(w, a) == b


def test_trivial_group():
    assert trivial_group(3, 3).order == 1
