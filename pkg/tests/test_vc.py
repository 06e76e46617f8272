import random
from math import comb

import pytest

from conftest import cycle, star
from kernelcut.graph import Graph, Instance, Status, Witness
from kernelcut.kernel_common import KernelError, WitnessError
from kernelcut.oracles import decide
from kernelcut.vc import build_connection_graph, hamiltonian_vc_bound, kernelize_vc, rule1_keep


def vc_inst(problem, g, X, **kw):
    return Instance(problem, g, witness=Witness.of("vertex-cover", X), **kw)


def same_answer(inst, res):
    want = decide(inst).yes
    if res.status.solved:
        return (res.status is Status.SOLVED_YES) == want
    return decide(res.instance).yes == want


def test_connection_graph_single_vertex():
    g = Graph(3, ((0, 2), (1, 2)))
    cg = build_connection_graph(g, [0, 1], "unordered")
    assert cg.pairs == ((0, 1),)
    assert cg.bipartite.edges == ((0, 0),)


def test_connection_graph_c5():
    cg = build_connection_graph(cycle(5), [0, 1, 3], "unordered")
    got = {(cg.left[a], cg.pairs[b]) for a, b in cg.bipartite.edges}
    assert got == {(2, (1, 3)), (4, (0, 3))}


def test_connection_graph_no_pairs_for_one_vertex():
    cg = build_connection_graph(star(4), [0], "unordered")
    assert cg.bipartite.n_right == 0


def test_ordered_mode_follows_arcs():
    d = Graph(3, ((0, 2), (2, 1)), directed=True)
    cg = build_connection_graph(d, [0, 1], "ordered")
    got = {cg.pairs[b] for _, b in cg.bipartite.edges}
    assert got == {(0, 1)}


def test_duplicated_mode_copies_pairs():
    cg = build_connection_graph(cycle(4), [0, 2], "duplicated")
    assert cg.pairs == ((0, 2), (0, 2))
    assert len(cg.bipartite.edges) == 4


def test_not_a_cover_is_rejected():
    with pytest.raises(KernelError):
        build_connection_graph(cycle(5), [0, 1], "unordered")
    with pytest.raises(WitnessError):
        kernelize_vc(vc_inst("long-cycle", cycle(5), [0, 1], k=5))


def test_c5_is_left_alone():
    res = kernelize_vc(vc_inst("long-cycle", cycle(5), [0, 1, 3], k=5))
    assert res.status is Status.REDUCED
    assert res.instance.graph.n == 5 <= 3 + comb(3, 2)
    assert decide(res.instance).yes


def test_star_loses_its_leaves():
    inst = vc_inst("long-cycle", star(5), [0], k=5)
    res = kernelize_vc(inst)
    assert same_answer(inst, res) and not decide(inst).yes
    assert res.status is Status.SOLVED_NO or res.instance.graph.n == 1


@pytest.mark.parametrize("g,X", [(cycle(3), [0, 1]), (cycle(5), [0, 1, 3]), (star(3), [0])])
def test_small_k_is_solved(g, X):
    res = kernelize_vc(vc_inst("long-cycle", g, X, k=3))
    assert res.status.solved
    assert res.status is (Status.SOLVED_YES if g.m == g.n else Status.SOLVED_NO)


def test_rule1_keep_partitions_independent_set():
    g = Graph(8, tuple((x, v) for x in (0, 1) for v in range(2, 8)))
    keep, drop = rule1_keep(g, [0, 1], "unordered")
    assert sorted(keep + drop) == list(range(8))
    assert len([v for v in keep if v >= 2]) == 1


def test_hamiltonian_bound():
    res = hamiltonian_vc_bound(vc_inst("hamiltonian-path", star(3), [0]))
    assert res.status is Status.SOLVED_NO
    c4 = vc_inst("hamiltonian-cycle", cycle(4), [0, 2])
    res = hamiltonian_vc_bound(c4)
    assert res.status is Status.REDUCED and res.instance == c4
    p3 = vc_inst("hamiltonian-path", Graph(3, ((0, 1), (1, 2))), [1])
    res = hamiltonian_vc_bound(p3)
    assert res.instance == p3 and decide(p3).yes


def test_disjoint_paths_within_budget():
    g = Graph(6, ((0, 1), (2, 3), (4, 5)))
    inst = vc_inst("disjoint-paths", g, [0, 2, 4], k=3, pairs=((0, 1), (2, 3), (4, 5)))
    assert same_answer(inst, kernelize_vc(inst)) and decide(inst).yes


def test_disjoint_paths_over_budget_is_no():
    g = Graph(4, ((0, 1), (0, 2), (0, 3)))
    inst = vc_inst("disjoint-paths", g, [0], k=2, pairs=((0, 1), (2, 3)))
    res = kernelize_vc(inst)
    assert res.status is Status.SOLVED_NO and not decide(inst).yes


def _random_vc(rng, n, ell, directed=False):
    X = rng.sample(range(n), ell)
    Xs = set(X)
    E = set()
    for u in range(n):
        for v in range(n):
            if u == v or (u not in Xs and v not in Xs):
                continue
            if rng.random() < 0.4:
                E.add((u, v) if directed else (min(u, v), max(u, v)))
    return Graph(n, tuple(sorted(E)), directed), X


@pytest.mark.parametrize("problem", ["long-cycle", "long-path", "disjoint-cycles"])
def test_random_equivalence(problem):
    rng = random.Random(problem)
    for _ in range(60):
        n = rng.randint(3, 12)
        g, X = _random_vc(rng, n, rng.randint(1, min(5, n)))
        k = rng.randint(1, 3) if problem == "disjoint-cycles" else rng.randint(3, n)
        inst = vc_inst(problem, g, X, k=k)
        res = kernelize_vc(inst)
        assert same_answer(inst, res)
        if res.status is Status.REDUCED and problem == "long-cycle":
            assert res.instance.graph.n <= len(X) + comb(len(X), 2)


def test_directed_long_cycle_equivalence():
    rng = random.Random(77)
    for _ in range(60):
        n = rng.randint(3, 11)
        g, X = _random_vc(rng, n, rng.randint(1, min(4, n)), directed=True)
        inst = vc_inst("long-cycle", g, X, k=rng.randint(2, n))
        res = kernelize_vc(inst)
        assert same_answer(inst, res)
        if res.status is Status.REDUCED:
            assert res.instance.graph.n <= len(X) + 2 * comb(len(X), 2)


def test_disjoint_paths_equivalence():
    rng = random.Random(5)
    for _ in range(80):
        n = rng.randint(4, 12)
        g, X = _random_vc(rng, n, rng.randint(1, min(5, n)))
        q = rng.randint(1, min(3, n // 2))
        vs = rng.sample(range(n), 2 * q)
        pairs = tuple((vs[2 * i], vs[2 * i + 1]) for i in range(q))
        inst = vc_inst("disjoint-paths", g, X, k=q, pairs=pairs)
        assert same_answer(inst, kernelize_vc(inst))


def test_hamiltonian_routed_elsewhere():
    with pytest.raises(KernelError):
        kernelize_vc(vc_inst("hamiltonian-cycle", cycle(4), [0, 2]))
