from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from iwclass.counting import (
    IncompleteDataError,
    RationalSeries,
    class_cardinality,
    count_iw,
    count_sym_iw,
    library_counting_data,
    library_symmetric_data,
    primitive_fraction,
    series_exp,
)
from iwclass.structure import ConsistencyError, assemble_full_classification

from oracles import brute_entrywise_iw, brute_iw, brute_symmetric_count

PRIM4 = [(1, 2), (2, 4), (4, 8), (4, 16)]


def test_exp_examples():
    assert series_exp(RationalSeries.zero(5)).coeffs == RationalSeries.one(5).coeffs
    s = RationalSeries.from_terms([(1, Fraction(1, 2)), (2, Fraction(1, 4)), (4, Fraction(1, 8)),
                                   (4, Fraction(1, 16))], 4)
    assert series_exp(s).coeffs == tuple(map(Fraction, ("1", "1/2", "3/8", "7/48", "97/384")))
    e = series_exp(RationalSeries.from_terms([(1, 1)], 6))
    from math import factorial

    assert e.coeffs == tuple(Fraction(1, factorial(i)) for i in range(7))
    with pytest.raises(ValueError):
        series_exp(RationalSeries.one(3))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=9), min_size=1, max_size=6))
def test_exp_of_negation_is_inverse(cs):
    s = RationalSeries((Fraction(0),) + tuple(cs))
    prod = series_exp(s) * series_exp(-s)
    assert prod.coeffs == RationalSeries.one(s.degree).coeffs


def test_cardinality_examples():
    assert class_cardinality(16, 4) == 9216
    assert class_cardinality(240, 5) == 61440
    assert class_cardinality(12, 6) == 176947200
    with pytest.raises(ConsistencyError):
        class_cardinality(7, 2)


def test_iw_counts():
    assert count_iw(PRIM4, 4) == 37248
    assert count_iw(PRIM4, 1) == 2 == len(brute_entrywise_iw(1, 25))
    assert count_iw(PRIM4, 2) == 24 == len(brute_entrywise_iw(2, 25))
    assert count_iw(PRIM4, 3) == len(brute_iw(3, 25))
    with pytest.raises(IncompleteDataError):
        count_iw(PRIM4, 5, covered=4)


def test_library_counts(library):
    data = library_counting_data(library)
    assert [count_iw(data, n) for n in range(1, 8)] == [
        2, 24, 336, 37248, 3598080, 2948520960, 1915159357440]
    assert count_iw(data, 4) == len(brute_iw(4, 25))
    for n in range(1, 8):
        fc = assemble_full_classification(library, n)
        assert sum(r.cardinality for r in fc.records) == count_iw(data, n)
    assert abs(float(primitive_fraction(library, 7)) - 0.848) < 0.0005
    assert sum(r.cardinality for r in library.by_size[7]) == 1623390289920


def test_symmetric_counts_against_row_scan(library, sym_plus, sym_minus):
    ord_p, sym_p = library_symmetric_data(library, sym_plus)
    ord_m, sym_m = library_symmetric_data(library, sym_minus)
    for n in range(1, 6):
        assert count_sym_iw(ord_p, sym_p, n, 1) == brute_symmetric_count(n, 25, 1)
        assert count_sym_iw(ord_m, sym_m, n, -1) == brute_symmetric_count(n, 25, -1)
    assert count_sym_iw(ord_m, sym_m, 4, -1) == 60
    assert count_sym_iw(ord_m, sym_m, 7, -1) == 0
    assert count_sym_iw(ord_p, sym_p, 7, 1) == 15835248


def test_sym_incomplete():
    with pytest.raises(IncompleteDataError):
        count_sym_iw([], [(1, 2)], 3, 1, covered=2)
