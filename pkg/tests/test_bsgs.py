import random

from iwclass.bsgs import BSGS, group_order, identity, inv, mul, orbits


def closure(gens, n):
    seen = {tuple(identity(n))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(mul(g, list(x)))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def test_against_closure():
    rng = random.Random(4)
    for _ in range(25):
        n = rng.randint(2, 7)
        gens = []
        for _ in range(rng.randint(1, 3)):
            p = list(range(n))
            rng.shuffle(p)
            gens.append(p)
        full = closure(gens, n)
        g = BSGS(n, gens)
        assert g.order == len(full) == group_order(n, gens)
        assert {tuple(e) for e in g.elements()} == full
        for x in list(full)[:10]:
            assert g.contains(list(x))
        p = list(range(n))
        rng.shuffle(p)
        assert g.contains(p) == (tuple(p) in full)


def test_symmetric_group_and_orbits():
    n = 6
    g = BSGS(n, [[1, 0, 2, 3, 4, 5], [1, 2, 3, 4, 5, 0]])
    assert g.order == 720
    assert orbits(4, [[1, 0, 2, 3]]) == [[0, 1], [2], [3]]
    a = [2, 0, 1]
    assert mul(a, inv(a)) == identity(3)
