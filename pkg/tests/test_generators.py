import pytest

from conftest import complete, path
from kernelcut.formats import serialize
from kernelcut.generators import (
    KINDS,
    CompositionError,
    bipartite_shape,
    certificate_ok,
    compose_thm7,
    compose_thm8,
    compose_thm11,
    domino_chain_template,
    gen_prop1,
    gen_random_planted,
    gen_thm9,
    planted_bipartite_path,
    prove_domino,
)
from kernelcut.graph import Graph, Instance, Witness, check_structure
from kernelcut.oracles import decide, hamiltonian_cycle, is_fp_path


def test_domino_two_traversals():
    proof = prove_domino()
    assert proof.holds, proof.reason
    assert proof.endpoint_kinds == {frozenset({0, 7}), frozenset({2, 5})}


@pytest.mark.parametrize("mode", ["directed", "undirected"])
def test_prop1_small(mode):
    edge = gen_prop1(Graph(2, ((0, 1),)), 0, 1, mode)
    bipartite_shape(edge)
    assert decide(edge).yes
    p3 = gen_prop1(path(3), 0, 2, mode)
    assert decide(p3).yes
    # the middle vertex of a path cannot be an endpoint of a Hamiltonian path
    assert not decide(gen_prop1(path(3), 1, 2, mode)).yes


def _inputs(nA, directed, yes_flags, tag):
    out = []
    for i, yes in enumerate(yes_flags):
        out.append(planted_bipartite_path(nA, directed, f"{tag}/{i}", yes=yes))
    return out


def test_thm7_counts():
    ins = [x for x, _ in _inputs(4, True, [False, False], "c")]
    comp = compose_thm7(ins)
    assert len(comp.modulator) == 6
    assert comp.instance.graph.n == 34
    w = Witness.of("bipaths-modulator", comp.modulator)
    assert check_structure(comp.instance.graph, w).status == "holds"


def test_thm7_or_and_certificate():
    pairs = _inputs(2, True, [False, True], "or7")
    ins = [x for x, _ in pairs]
    assert decide(compose_thm7(ins).instance).yes
    comp = compose_thm7(ins, (1, pairs[1][1]))
    assert certificate_ok(comp)
    no = [planted_bipartite_path(2, True, f"no7/{i}", yes=False, density=0.0)[0] for i in range(2)]
    assert not any(decide(x).yes for x in no)
    assert not hamiltonian_cycle(compose_thm7(no).instance.graph).yes


def test_thm8_counts_and_template():
    ins = [x for x, _ in _inputs(2, False, [False, False], "c8")]
    comp = compose_thm8(ins)
    assert len(comp.modulator) == 6
    ok, why = domino_chain_template(comp.instance.graph, comp.modulator, 2, 2)
    assert ok, why


def test_thm8_certificate_and_no_case():
    pairs = _inputs(2, False, [True, False], "or8")
    comp = compose_thm8([x for x, _ in pairs], (0, pairs[0][1]))
    assert certificate_ok(comp)
    no = [planted_bipartite_path(2, False, f"no8/{i}", yes=False, density=0.0)[0] for i in range(2)]
    assert not any(decide(x).yes for x in no)
    comp = compose_thm8(no)
    assert comp.instance.graph.n == 44
    assert not hamiltonian_cycle(comp.instance.graph).yes


def test_large_certificates_validate():
    for directed, fn in ((True, compose_thm7), (False, compose_thm8)):
        pairs = [planted_bipartite_path(10, directed, f"big/{i}", yes=(i == 4)) for i in range(10)]
        comp = fn([x for x, _ in pairs], (4, pairs[4][1]))
        assert certificate_ok(comp)


def test_mismatched_inputs_rejected():
    a, _ = planted_bipartite_path(2, True, "m/0")
    b, _ = planted_bipartite_path(3, True, "m/1")
    with pytest.raises(CompositionError):
        compose_thm7([a, b])
    with pytest.raises(CompositionError):
        compose_thm7([])


def test_thm9_examples():
    inst = gen_thm9(complete(3), 3, [1, 2, 3])
    r = decide(inst)
    assert r.yes and len(r.certificate) == 7
    assert inst.witness.ell == 4
    assert not decide(gen_thm9(Graph(3, ()), 3, [1, 2, 3])).yes


def _fp(n, edges, H):
    return Instance("fp-st-path", Graph(n, tuple(edges)), pairs=tuple(H), s=0, t=n - 1)


def test_thm11_counts():
    ins = [_fp(4, [(0, 1), (1, 3)], [])]
    comp = compose_thm11(ins)
    assert len(comp.modulator) == 53
    assert check_structure(comp.instance.graph, comp.instance.witness, comp.instance.pairs).status == "holds"


def test_thm11_or():
    yes = _fp(3, [(0, 1), (1, 2)], [])
    no = _fp(3, [(0, 1), (1, 2)], [(0, 1)])
    comp = compose_thm11([no, yes], (1, [0, 1, 2]))
    I = comp.instance
    assert decide(I).yes
    assert is_fp_path(I.graph, comp.certificate, I.s, I.t, I.pairs)
    assert not decide(compose_thm11([no, no]).instance).yes


def test_thm11_pendant_variant():
    yes = _fp(3, [(0, 1), (1, 2)], [])
    comp = compose_thm11([yes], (0, [0, 1, 2]), pendant=True)
    I = comp.instance
    assert I.problem == "fp-longest-path"
    assert len(comp.certificate) >= I.k


def test_planted_examples():
    inst = gen_random_planted("vc", {"n": 12, "ell": 4}, 1)
    assert check_structure(inst.graph, inst.witness).status == "holds"
    inst = gen_random_planted("cluster", {"cliques": 3, "max_clique": 4, "ell": 2}, 1)
    assert check_structure(inst.graph, inst.witness).status == "holds"
    for kind in KINDS:
        assert serialize(gen_random_planted(kind, None, 3)) == serialize(gen_random_planted(kind, None, 3))
    with pytest.raises(ValueError):
        gen_random_planted("nope", None, 0)


def test_planted_maxleaf_is_exact():
    from kernelcut.oracles import max_leaf_number
    for seed in range(10):
        inst = gen_random_planted("maxleaf", None, seed)
        assert inst.witness.ell == max(1, max_leaf_number(inst.graph))
