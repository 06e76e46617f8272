import random

from hypothesis import given, settings
from hypothesis import strategies as st

from kernelcut.matching import (
    BipartiteGraph,
    brute_force_matching_size,
    coverable,
    maximum_matching,
    theorem2_holds,
    theorem2_holds_naive,
)


def bip(nl, nr, edges):
    return BipartiteGraph(nl, nr, tuple(edges))


def test_empty():
    assert len(maximum_matching(bip(3, 3, []))) == 0
    assert theorem2_holds(bip(0, 0, []))


def test_small_example():
    m = maximum_matching(bip(2, 3, [(0, 0), (0, 1), (1, 1)]))
    assert len(m) == 2
    assert m.matched_left == {0, 1}


def test_complete_bipartite():
    for a in range(1, 6):
        for b in range(1, 6):
            h = bip(a, b, [(x, y) for x in range(a) for y in range(b)])
            assert len(maximum_matching(h)) == min(a, b)


def test_coverable_hall():
    assert coverable(bip(1, 2, [(0, 0), (0, 1)]), [])
    assert not coverable(bip(1, 2, [(0, 0), (0, 1)]), [0, 1])


def test_coverable_matches_restricted_matching():
    rng = random.Random(3)
    for _ in range(200):
        nl, nr = rng.randint(0, 6), rng.randint(1, 6)
        h = bip(nl, nr, [(a, b) for a in range(nl) for b in range(nr) if rng.random() < 0.4])
        demand = [b for b in range(nr) if rng.random() < 0.5]
        sub = BipartiteGraph(nl, nr, tuple(e for e in h.edges if e[1] in demand))
        assert coverable(h, demand) == (len(maximum_matching(sub)) == len(demand))


def test_adversarial_stars():
    for nr in range(1, 12):
        assert theorem2_holds(bip(1, nr, [(0, b) for b in range(nr)]))
        assert theorem2_holds(bip(nr, 1, [(a, 0) for a in range(nr)]))


graphs = st.integers(0, 7).flatmap(lambda nl: st.integers(1, 7).flatmap(
    lambda nr: st.sets(st.tuples(st.integers(0, max(nl - 1, 0)), st.integers(0, nr - 1))).map(
        lambda es: bip(nl, nr, [e for e in es if nl > 0]))))


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_hopcroft_karp_is_maximum(h):
    assert len(maximum_matching(h)) == brute_force_matching_size(h)


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_restriction_property_fast_equals_naive(h):
    assert theorem2_holds(h) == theorem2_holds_naive(h) is True


def test_left_order_only_changes_the_choice():
    h = bip(3, 2, [(0, 0), (1, 0), (2, 1), (1, 1)])
    a = maximum_matching(h, [0, 1, 2])
    b = maximum_matching(h, [2, 1, 0])
    assert len(a) == len(b) == 2
