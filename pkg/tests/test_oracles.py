import random
from itertools import combinations

import pytest

from conftest import complete, cycle, gnp, path, petersen, star
from kernelcut.config import Deadline, ResourceLimitExceeded
from kernelcut.graph import Graph, Instance, LabeledMultigraph
from kernelcut.oracles import (
    are_disjoint_cycles,
    are_disjoint_paths,
    decide,
    disjoint_cycles,
    disjoint_paths,
    forbidden_pairs_path,
    fpt_shortest_fp_path,
    hamiltonian_cycle,
    hamiltonian_path,
    is_cycle,
    is_fp_path,
    is_path,
    longest_cycle_or_path,
    max_leaf_by_spanning_trees,
    max_leaf_number,
    validate_bipartite_hampath_arcset,
)


def test_longest_cycle_examples():
    assert longest_cycle_or_path(cycle(5), "cycle") == 5
    assert longest_cycle_or_path(petersen(), "cycle") == 9
    m = LabeledMultigraph(Graph(2, ((0, 1), (0, 1)), multigraph=True), (3, 2))
    assert longest_cycle_or_path(m, "cycle") == 7
    assert longest_cycle_or_path(star(4), "cycle") == 0
    assert longest_cycle_or_path(star(4), "path") == 3


def test_longest_certificates_validate():
    rng = random.Random(4)
    for _ in range(40):
        g = gnp(rng, rng.randint(3, 10), 0.4)
        best, seq = longest_cycle_or_path(g, "cycle", with_certificate=True)
        if best:
            assert len(seq) == best and is_cycle(g, seq)
        best, seq = longest_cycle_or_path(g, "path", with_certificate=True)
        assert len(seq) == best and is_path(g, seq)


def test_weights_count_stand_ins():
    g = cycle(4)
    assert longest_cycle_or_path(g, "cycle", weights=[1, 1, 5, 1]) == 8


def test_hamiltonian_examples():
    r = hamiltonian_cycle(cycle(4))
    assert r.yes and r.order == [0, 1, 2, 3]
    for s, t in combinations(range(4), 2):
        assert not hamiltonian_path(star(3), s, t).yes
    assert not hamiltonian_cycle(petersen()).yes
    assert hamiltonian_path(petersen()).yes


def test_hamiltonian_agrees_with_longest_cycle():
    rng = random.Random(9)
    for _ in range(80):
        n = rng.randint(3, 12)
        g = gnp(rng, n, rng.choice((0.3, 0.5)))
        r = hamiltonian_cycle(g)
        assert r.yes == (longest_cycle_or_path(g, "cycle") >= n)
        if r.yes:
            assert is_cycle(g, r.order, hamiltonian=True)


def test_directed_hamiltonian():
    d = Graph(3, ((0, 1), (1, 2), (2, 0)), directed=True)
    assert hamiltonian_cycle(d).yes
    d = Graph(3, ((0, 1), (1, 2), (0, 2)), directed=True)
    assert not hamiltonian_cycle(d).yes
    assert hamiltonian_path(d, 0, 2).yes


def test_disjoint_examples():
    two = Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
    r = disjoint_cycles(two, 2)
    assert r.yes and are_disjoint_cycles(two, r.routes, 2)
    assert not disjoint_paths(path(4), ((0, 3), (1, 2))).yes
    r = disjoint_paths(complete(4), ((0, 1), (2, 3)))
    assert r.yes and are_disjoint_paths(complete(4), r.routes, ((0, 1), (2, 3)))


def test_fp_examples():
    g = Graph(4, ((0, 1), (1, 3), (0, 2), (2, 3)))  # s=0, a=1, b=2, t=3
    assert forbidden_pairs_path(g, 0, 3, (), "shortest").length == 3
    assert forbidden_pairs_path(g, 0, 3, (), "longest").length == 3
    r = forbidden_pairs_path(g, 0, 3, ((1, 2),), "exists")
    assert r.yes and is_fp_path(g, r.path, 0, 3, ((1, 2),))
    assert forbidden_pairs_path(g, 0, 3, ((1, 2),), "shortest").length == 3
    p = Graph(3, ((0, 1), (1, 2)))
    assert not forbidden_pairs_path(p, 0, 2, ((0, 1),), "exists").yes


def test_fpt_examples():
    g = Graph(4, ((0, 1), (1, 3), (0, 2), (2, 3)))
    r = fpt_shortest_fp_path(g, 0, 3, (), ())
    assert r.length == 3 and r.subsets == 1
    r = fpt_shortest_fp_path(g, 0, 3, ((1, 3),), (1,))
    assert r.length == 3 and r.path == [0, 2, 3] and r.subsets == 2
    with pytest.raises(ValueError):
        fpt_shortest_fp_path(g, 0, 3, ((1, 3),), (0,))


def test_fpt_matches_brute_force():
    rng = random.Random(10)
    for _ in range(100):
        n = rng.randint(2, 12)
        g = gnp(rng, n, 0.35)
        X = rng.sample(range(n), rng.randint(0, min(5, n)))
        H = [(x, y) for x in X for y in range(n) if x != y and rng.random() < 0.15]
        s, t = rng.sample(range(n), 2)
        a = fpt_shortest_fp_path(g, s, t, H, X)
        b = forbidden_pairs_path(g, s, t, H, "shortest")
        assert a.yes == b.yes and a.length == b.length
        assert a.subsets == 2 ** len(set(X))
        if a.yes:
            assert is_fp_path(g, a.path, s, t, H)


def test_arcset_validator():
    D = Graph(3, ((0, 2), (2, 1), (2, 0)), directed=True)  # b1=0, b2=1, a1=2
    assert validate_bipartite_hampath_arcset(D, [2], [0, 1], [(0, 2), (2, 1)])
    assert not validate_bipartite_hampath_arcset(D, [2], [0, 1], [(0, 2), (2, 0)])


def test_arcset_conditions_imply_walk():
    rng = random.Random(2)
    hits = 0
    for _ in range(3000):
        nA = rng.randint(1, 3)
        B = list(range(nA + 1))
        A = list(range(nA + 1, 2 * nA + 1))
        arcs = [(u, v) for u in B for v in A if rng.random() < 0.6]
        arcs += [(v, u) for u in B for v in A if rng.random() < 0.6]
        D = Graph(2 * nA + 1, tuple(arcs), directed=True)
        C = [e for e in arcs if rng.random() < 0.5]
        if validate_bipartite_hampath_arcset(D, A, B, C):
            hits += 1
            order, cur = [B[0]], B[0]
            succ = dict(C)
            while cur in succ:
                cur = succ[cur]
                order.append(cur)
            assert is_path(D, order, B[0], B[-1], hamiltonian=True)
    assert hits > 0


def test_max_leaf_examples():
    for n in range(3, 9):
        assert max_leaf_number(cycle(n)) == 2
        assert max_leaf_number(star(n)) == n
    assert max_leaf_number(petersen()) == 6


def test_max_leaf_methods_agree_and_bound_branches():
    rng = random.Random(6)
    for _ in range(60):
        g = gnp(rng, rng.randint(2, 9), 0.4)
        ml = max_leaf_number(g)
        assert ml == max_leaf_by_spanning_trees(g)
        branch = sum(1 for v in range(g.n) if g.degree(v) >= 3)
        assert branch <= 4 * max(ml, 1) - 2 or ml == 0


def test_decide_dispatch():
    assert decide(Instance("long-cycle", cycle(5), k=5)).yes
    assert not decide(Instance("long-cycle", cycle(5), k=6)).yes
    assert decide(Instance("long-path", path(4), k=4)).yes
    assert decide(Instance("hamiltonian-path", path(4), s=0, t=3)).yes
    assert not decide(Instance("hamiltonian-path", path(4), s=1, t=3)).yes
    g = Graph(4, ((0, 1), (1, 3), (0, 2), (2, 3)))
    assert decide(Instance("fp-st-path-shortest", g, k=3, pairs=(), s=0, t=3)).yes
    assert not decide(Instance("fp-st-path-shortest", g, k=2, pairs=(), s=0, t=3)).yes
    assert decide(Instance("fp-longest-path", g, k=4, pairs=(), )).yes
    assert not decide(Instance("fp-longest-path", g, k=4, pairs=((0, 3),))).yes


def test_caps_raise_instead_of_answering():
    with pytest.raises(ResourceLimitExceeded):
        longest_cycle_or_path(complete(40), "cycle")
    with pytest.raises(ResourceLimitExceeded):
        # K_{12,15}: no cycle reaches the trivial upper bound, so the search cannot stop early
        kab = Graph(27, tuple((a, b) for a in range(12) for b in range(12, 27)))
        longest_cycle_or_path(kab, "cycle", deadline=Deadline(0))
    with pytest.raises(ResourceLimitExceeded):
        disjoint_paths(path(41), ((0, 40),))
