import pytest

from kernelcut.cluster import (
    fpt_long_cycle_cluster,
    kernelize_disjoint_cluster,
    kernelize_hamiltonian_cluster,
    kernelize_long_cycle_cluster,
    mark_clique_vertices,
    mark_cliques,
)
from kernelcut.graph import Graph, Instance, Status, Witness, check_structure
from kernelcut.oracles import decide
from kernelcut.suites import corpus_instance


def build(X_size, clique_sizes, attach):
    """Modulator 0..X_size-1, then cliques; ``attach(x, clique_index, position)`` decides X edges."""
    edges, cliques, v = [], [], X_size
    for s in clique_sizes:
        c = list(range(v, v + s))
        cliques.append(c)
        edges += [(a, b) for a in c for b in c if a < b]
        v += s
    for x in range(X_size):
        for ci, c in enumerate(cliques):
            edges += [(x, w) for pos, w in enumerate(c) if attach(x, ci, pos)]
    edges += [(x, y) for x in range(X_size) for y in range(x + 1, X_size) if attach(x, -1, y)]
    return Graph(v, tuple(edges)), list(range(X_size)), cliques


def cl_inst(problem, g, X, **kw):
    return Instance(problem, g, witness=Witness.of("cluster-modulator", X), **kw)


def answer(res):
    if res.status.solved:
        return res.status is Status.SOLVED_YES
    return decide(res.instance).yes


def test_big_clique_is_trivially_yes():
    g, X, _ = build(1, [5, 2], lambda x, ci, p: ci == 1)
    assert mark_cliques(g, 5, X).trivially_yes
    assert kernelize_long_cycle_cluster(cl_inst("long-cycle", g, X, k=5)).status is Status.SOLVED_YES


def test_single_modulator_vertex_drops_everything():
    g, X, _ = build(1, [3], lambda x, ci, p: ci == 0 and p == 0)
    out = mark_cliques(g, 5, X)
    assert not out.trivially_yes and out.kept == [] and len(out.deleted) == 1
    inst = cl_inst("long-cycle", g, X, k=5)
    assert answer(kernelize_long_cycle_cluster(inst)) is decide(inst).yes is False


def test_shared_neighbour_rule_marks_ell_plus_one():
    g, X, cliques = build(2, [1] * 10, lambda x, ci, p: ci >= 0)
    out = mark_cliques(g, 10, X)
    assert len(out.kept) == 3
    assert out.kept == cliques[:3]


def test_vertex_marking_quotas():
    g, X, cl = build(1, [6], lambda x, ci, p: ci == 0)
    dec = mark_clique_vertices(g, 10, X, cl)
    assert len(dec.marked[0]) == 3
    g, X, cl = build(2, [100], lambda x, ci, p: ci == 0)
    dec = mark_clique_vertices(g, 200, X, cl)
    assert len(dec.marked[0]) <= 27
    assert dec.marked[0] == sorted(dec.marked[0])


def test_fpt_examples():
    g, X, _ = build(1, [4], lambda x, ci, p: False)
    assert fpt_long_cycle_cluster(g, 4, X)
    g, X, _ = build(2, [3, 3], lambda x, ci, p: ci >= 0)
    assert fpt_long_cycle_cluster(g, 8, X)
    assert not fpt_long_cycle_cluster(g, 9, X)
    assert decide(cl_inst("long-cycle", g, X, k=8)).yes


def _two_big_cliques():
    # each modulator vertex sees three vertices of both 50-cliques
    return build(2, [50, 50], lambda x, ci, p: ci >= 0 and p < 3)


def test_compression_of_large_cliques():
    g, X, _ = _two_big_cliques()
    for k, want in ((60, True), (102, True), (103, False)):
        res = kernelize_long_cycle_cluster(cl_inst("long-cycle", g, X, k=k))
        assert res.status is Status.REDUCED
        out = res.instance
        assert check_structure(out.graph, out.witness).ok
        assert len(out.stand_ins) == 2
        per_clique = (out.graph.n - 2) // 2
        assert per_clique <= 28
        assert {si.label for si in out.stand_ins} == {50 - (per_clique - 1)}
        assert decide(out).yes is want
        assert fpt_long_cycle_cluster(g, k, X) is want


def test_small_cliques_get_zero_labels():
    g, X, _ = build(2, [3, 2], lambda x, ci, p: ci >= 0)
    res = kernelize_long_cycle_cluster(cl_inst("long-cycle", g, X, k=7))
    assert res.status is Status.REDUCED
    assert all(si.label == 0 for si in res.instance.stand_ins)
    assert res.instance.graph.n == g.n


def test_hamiltonian_bridged_cliques():
    for attach in (lambda x, ci, p: ci >= 0 and p == x, lambda x, ci, p: ci == 0):
        g, X, _ = build(2, [6, 6], attach)
        for problem in ("hamiltonian-cycle", "hamiltonian-path"):
            inst = cl_inst(problem, g, X)
            assert answer(kernelize_hamiltonian_cluster(inst)) == decide(inst).yes


def test_hamiltonian_small_is_unchanged_up_to_relabeling():
    g, X, _ = build(2, [2, 3], lambda x, ci, p: ci >= 0 and p == 0)
    res = kernelize_hamiltonian_cluster(cl_inst("hamiltonian-cycle", g, X))
    if res.status is Status.REDUCED:
        assert res.instance.graph.n == g.n and res.instance.graph.m == g.m


def test_disjoint_paths_same_clique_pair_dropped():
    g, X, cl = build(1, [4, 3], lambda x, ci, p: p == 0 and ci >= 0)
    inst = cl_inst("disjoint-paths", g, X, k=2, pairs=((cl[0][1], cl[0][2]), (cl[1][1], cl[0][3])))
    res = kernelize_disjoint_cluster(inst)
    drops = [t for t in res.trace if "same" in t.get("rule", "")]
    assert drops
    assert answer(res) == decide(inst).yes


def test_disjoint_cycles_triangles_from_one_clique():
    g = Graph(9, tuple((a, b) for a in range(9) for b in range(a + 1, 9)))
    res = kernelize_disjoint_cluster(cl_inst("disjoint-cycles", g, [], k=3))
    assert res.status is Status.SOLVED_YES


@pytest.mark.parametrize("problem", ["long-cycle", "hamiltonian-cycle", "hamiltonian-path",
                                     "disjoint-paths", "disjoint-cycles"])
def test_random_equivalence(problem):
    for seed in range(40):
        inst = corpus_instance("cluster", problem, 5000 + seed)
        if problem == "long-cycle":
            res = kernelize_long_cycle_cluster(inst)
        elif problem.startswith("hamiltonian"):
            res = kernelize_hamiltonian_cluster(inst)
        else:
            res = kernelize_disjoint_cluster(inst)
        assert answer(res) == decide(inst).yes, seed


def test_fpt_matches_oracle_random():
    for seed in range(60):
        inst = corpus_instance("cluster", "long-cycle", 7000 + seed)
        assert fpt_long_cycle_cluster(inst.graph, inst.k, inst.witness.vertices) == decide(inst).yes


def test_hamiltonian_merges_oversized_cliques():
    g, X, _ = build(1, [12], lambda x, ci, p: p < 2)
    inst = cl_inst("hamiltonian-cycle", g, X)
    assert kernelize_hamiltonian_cluster(inst).status is Status.SOLVED_YES
    g, X, _ = build(0, [12], lambda x, ci, p: False)
    inst = cl_inst("hamiltonian-path", g, X)
    res = kernelize_hamiltonian_cluster(inst)
    assert answer(res) and res.instance.graph.n < 12
    again = kernelize_hamiltonian_cluster(res.instance)
    assert again.instance == res.instance
