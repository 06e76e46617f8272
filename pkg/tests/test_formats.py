import json

import pytest

from kernelcut.formats import FormatError, parse_edge_list, parse_instance, serialize
from kernelcut.generators import KINDS, gen_random_planted
from kernelcut.graph import Graph, Instance, LabeledMultigraph, StandIn, Witness

MINIMAL = b'{"problem":"long-cycle","n":3,"edges":[[0,1],[1,2],[2,0]],"k":3,' \
          b'"witness":{"kind":"vertex-cover","vertices":[0,1],"ell":2}}'


def test_minimal_long_cycle():
    inst = parse_instance(MINIMAL)
    assert inst.problem == "long-cycle"
    assert inst.k == 3
    assert inst.witness.ell == 2
    assert inst.graph.m == 3


def test_out_of_range_vertex():
    with pytest.raises(FormatError, match="out of range"):
        parse_instance('{"problem":"hamiltonian-cycle","n":3,"edges":[[0,5]]}')


@pytest.mark.parametrize("text", ["{bad", "[]", '{"problem":"long-cycle"}', '{"problem":"long-cycle","n":"x","edges":[]}',
                                  '{"problem":"long-cycle","n":2,"edges":[],"k":2,"mystery":1}'])
def test_malformed(text):
    with pytest.raises(FormatError):
        parse_instance(text)


def test_round_trip_random_corpus():
    for seed in range(250):
        for kind in KINDS:
            inst = gen_random_planted(kind, None, seed)
            text = serialize(inst)
            again = parse_instance(text)
            assert again == inst
            assert serialize(again) == text


def test_round_trip_labels_and_stand_ins():
    m = LabeledMultigraph(Graph(3, ((0, 1), (0, 1), (1, 2)), multigraph=True), (2, 5, 0))
    inst = Instance("long-cycle", m, k=4, witness=Witness("max-leaf-bound", (), 2))
    assert parse_instance(serialize(inst)) == inst
    g = Graph(3, ((0, 1), (1, 2), (0, 2)))
    inst = Instance("long-cycle", g, k=3, witness=Witness.of("cluster-modulator", [0]),
                    stand_ins=(StandIn(0, 2, 7),))
    d = json.loads(serialize(inst))
    assert d["stand_ins"] == [{"clique_id": 0, "vertex_id": 2, "label": 7}]
    assert parse_instance(serialize(inst)) == inst


def test_serialize_is_canonical():
    # key order and whitespace do not matter; edge order is kept (labels align with it)
    a = parse_instance('{"n":3,"problem":"long-cycle","k":3,"edges":[[0,1],[1,2]]}')
    b = parse_instance('{ "edges": [[0, 1], [1, 2]], "k": 3, "n": 3, "problem": "long-cycle" }')
    assert serialize(a) == serialize(b)
    assert serialize(a).endswith("\n") and " " not in serialize(a)


def test_certificate_field_is_carried():
    inst = parse_instance(MINIMAL)
    assert json.loads(serialize(inst, [0, 1, 2]))["certificate"] == [0, 1, 2]


def test_edge_list():
    g = parse_edge_list("# triangle\n3 3\n0 1\n1 2\n2 0\n")
    assert g.n == 3 and g.m == 3
    with pytest.raises(FormatError):
        parse_edge_list("3 2\n0 1\n")
