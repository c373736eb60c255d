from itertools import combinations_with_replacement
from math import isqrt

from hypothesis import given, settings, strategies as st

from iwclass.nsoks import count_nsoks, nsoks, rep_to_vector


def brute(n, r, maxsq=None):
    top = isqrt(n) if maxsq is None else min(isqrt(n), maxsq)
    out = set()
    for combo in combinations_with_replacement(range(top, -1, -1), r):
        if sum(s * s for s in combo) == n:
            out.add(tuple(combo))
    return out


def as_multiset(rep):
    return tuple(rep_to_vector(rep))


def test_golden_200():
    assert count_nsoks(200, 200) == 27482


def test_small_examples():
    assert {as_multiset(x) for x in nsoks(25, 4)} == {(5, 0, 0, 0), (4, 3, 0, 0), (4, 2, 2, 1)}
    assert nsoks(0, 3) == [((0, 3),)]
    assert nsoks(25, 4, maxsq=1) == []
    assert nsoks(3, 3, maxsq=1) == [((1, 3),)]


def test_oracle_all_small():
    for n in range(121):
        for r in range(1, 9):
            got = [as_multiset(x) for x in nsoks(n, r)]
            assert len(got) == len(set(got))
            assert set(got) == brute(n, r), (n, r)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 150), st.integers(1, 10), st.integers(1, 12))
def test_rep_invariants_and_monotone(n, r, m):
    small = nsoks(n, r, m)
    big = {tuple(x) for x in nsoks(n, r, m + 1)}
    for rep in small:
        roots = [s for s, _ in rep]
        assert roots == sorted(set(roots), reverse=True)
        assert sum(c for _, c in rep) == r
        assert sum(c * s * s for s, c in rep) == n
        assert all(c > 0 for _, c in rep)
        assert tuple(rep) in big
    assert {as_multiset(x) for x in small} == brute(n, r, m)
