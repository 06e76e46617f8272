"""Hamiltonian constructions: the bipartite s-t path reduction and two OR-compositions.

Bipartite s-t path instances use one fixed layout: vertices ``0..nB-1`` are
``b_1..b_nB`` and ``nB..nB+nA-1`` are ``a_1..a_nA``; ``s = 0`` and ``t = nB-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..graph import Graph, Instance, Witness, check_structure
from ..oracles.validators import is_cycle
from . import domino


class CompositionError(ValueError):
    pass


@dataclass
class Composition:
    instance: Instance
    modulator: tuple[int, ...]
    certificate: list[int] | None
    names: dict[int, str]


# --- Hamiltonian s-t path in (directed) bipartite graphs ---------------------


def gen_prop1(g: Graph, s: int, t: int, output: str = "directed") -> Instance:
    """Bipartite s-t path instance equivalent to a Hamiltonian s-t path in ``g``."""
    if output not in ("directed", "undirected"):
        raise CompositionError(f"unknown output mode {output!r}")
    if g.directed:
        raise CompositionError("input must be undirected")
    if s == t or not (0 <= s < g.n and 0 <= t < g.n):
        raise CompositionError("need distinct s, t inside the graph")
    n = g.n
    # copy (v, i) for i in 1..4; sides: {1, 3} -> A, {2, 4} -> B
    und = []
    for v in range(n):
        und += [((v, 1), (v, 2)), ((v, 2), (v, 3)), ((v, 3), (v, 4))]
    for u, v in g.edges:
        und += [((v, 1), (u, 4)), ((v, 4), (u, 1)), ((u, 1), (v, 4)), ((u, 4), (v, 1))]
    und = list(dict.fromkeys(tuple(sorted(e)) for e in und))
    b_side = [(v, i) for v in range(n) for i in (2, 4)]
    a_side = [(v, i) for v in range(n) for i in (1, 3)] + ["w"]
    b_order = ["s*"] + b_side + ["t*"]
    nB = len(b_order)
    ids = {x: i for i, x in enumerate(b_order)}
    ids.update({x: nB + i for i, x in enumerate(a_side)})
    arcs = []
    for x, y in und:
        arcs += [(ids[x], ids[y]), (ids[y], ids[x])]
    arcs += [(ids["s*"], ids[(s, 1)]), (ids[(t, 4)], ids["w"]), (ids["w"], ids["t*"])]
    if output == "directed":
        return Instance("hamiltonian-path", Graph(len(ids), tuple(sorted(arcs)), True), s=0, t=nB - 1)
    edges = sorted({(min(a, b), max(a, b)) for a, b in arcs})
    return Instance("hamiltonian-path", Graph(len(ids), tuple(edges)), s=0, t=nB - 1)


def bipartite_shape(inst: Instance) -> tuple[int, int]:
    """(nA, nB) of a bipartite s-t path instance, after checking its layout."""
    g = inst.graph
    if inst.problem != "hamiltonian-path" or inst.s != 0:
        raise CompositionError("expected a hamiltonian-path instance starting at vertex 0")
    nB = inst.t + 1
    nA = g.n - nB
    if nB != nA + 1:
        raise CompositionError(f"need nB = nA + 1, got nA={nA}, nB={nB}")
    for u, v in g.edges:
        if (u < nB) == (v < nB):
            raise CompositionError(f"edge ({u}, {v}) inside one colour class")
    if g.directed:
        if g.in_neighbors(0) or g.out_neighbors(nB - 1):
            raise CompositionError("b_1 must be a source and b_nB a sink")
    elif len(g.neighbors(0)) != 1 or len(g.neighbors(nB - 1)) != 1:
        raise CompositionError("b_1 and b_nB must have degree 1")
    return nA, nB


def _path_pairs(order: Sequence[int], nB: int) -> list[tuple[int, int, int]]:
    """For each a on the path: (a index, b before, b after), all 0-based."""
    out = []
    for i in range(1, len(order) - 1, 2):
        out.append((order[i] - nB, order[i - 1], order[i + 1]))
    return out


def _check_shapes(inputs: Sequence[Instance], directed: bool) -> tuple[int, int]:
    if not inputs:
        raise CompositionError("nothing to compose")
    shapes = {bipartite_shape(x) for x in inputs}
    if len(shapes) != 1:
        raise CompositionError(f"inputs disagree on (nA, nB): {sorted(shapes)}")
    if any(x.graph.directed != directed for x in inputs):
        raise CompositionError("inputs have the wrong directedness")
    return shapes.pop()


# --- directed composition into a bi-paths modulator -------------------------------


def compose_thm7(inputs: Sequence[Instance], witness: tuple[int, Sequence[int]] | None = None) -> Composition:
    """OR of directed bipartite s-t path instances as one directed Hamiltonian cycle.

    ``witness`` is ``(i, order)``: a Hamiltonian b_1..b_nB path of input ``i``.
    """
    nA, nB = _check_shapes(inputs, directed=True)
    r = len(inputs)
    names: dict[int, str] = {}
    ids: dict[tuple, int] = {}

    def new(key: tuple, label: str) -> int:
        ids[key] = len(ids)
        names[ids[key]] = label
        return ids[key]

    for i in range(r):
        new(("x", i), f"x{i + 1}")
        for j in range(nA):
            for part, mark in ((1, "'"), (2, "''"), (3, "'''")):
                new(("a", i, j, part), f"a{mark}{i + 1},{j + 1}")
        new(("y", i), f"y{i + 1}")
    z = new(("z",), "z")
    bstar = [new(("b", h), f"b*{h + 1}") for h in range(nB)]

    def a(i, j, part):
        return ids[("a", i, j, part)]

    arcs = []
    for i in range(r):
        for j in range(nA):
            arcs += [(a(i, j, 1), a(i, j, 2)), (a(i, j, 2), a(i, j, 1)),
                     (a(i, j, 2), a(i, j, 3)), (a(i, j, 3), a(i, j, 2))]
        for j in range(nA - 1):
            arcs.append((a(i, j, 3), a(i, j + 1, 1)))
        arcs += [(ids[("x", i)], a(i, 0, 1)), (a(i, nA - 1, 3), ids[("y", i)])]
        if i < r - 1:
            arcs.append((ids[("y", i)], ids[("x", i + 1)]))
        arcs += [(ids[("x", i)], z), (z, ids[("y", i)])]
    arcs += [(ids[("y", r - 1)], bstar[0]), (bstar[nB - 1], ids[("x", 0)])]
    for i, inst in enumerate(inputs):
        for u, v in inst.graph.edges:
            if u >= nB:  # (a_j, b_h)
                arcs.append((a(i, u - nB, 1), bstar[v]))
            else:  # (b_j, a_h)
                arcs.append((bstar[u], a(i, v - nB, 3)))
    g = Graph(len(ids), tuple(sorted(set(arcs))), directed=True)
    X = tuple(sorted([z] + bstar))
    assert len(X) == 1 + nB
    assert g.n == r * (3 * nA + 2) + 1 + nB
    inst = Instance("hamiltonian-cycle", g, witness=Witness.of("bipaths-modulator", X))
    rep = check_structure(g, inst.witness)
    assert rep.ok, rep.reason

    cert = None
    if witness is not None:
        istar, order = witness
        cert = []
        for i in range(r):
            cert.append(ids[("x", i)])
            if i == istar:
                cert.append(z)
            else:
                for j in range(nA):
                    cert += [a(i, j, 1), a(i, j, 2), a(i, j, 3)]
            cert.append(ids[("y", i)])
        cert.append(bstar[order[0]])
        for j, b_in, b_out in _path_pairs(order, nB):
            cert += [a(istar, j, 3), a(istar, j, 2), a(istar, j, 1), bstar[b_out]]
    return Composition(inst, X, cert, names)


# --- undirected composition into an outerplanar modulator --------------------------


def compose_thm8(inputs: Sequence[Instance], witness: tuple[int, Sequence[int]] | None = None) -> Composition:
    """OR of bipartite s-t path instances as one undirected Hamiltonian cycle."""
    nA, nB = _check_shapes(inputs, directed=False)
    r = len(inputs)
    names: dict[int, str] = {}
    ids: dict[tuple, int] = {}

    def new(key: tuple, label: str) -> int:
        ids[key] = len(ids)
        names[ids[key]] = label
        return ids[key]

    for i in range(r):
        new(("w", i), f"w{i + 1}")
        new(("x", i), f"x{i + 1}")
        for j in range(nA):
            for d in range(domino.DOMINO_N):
                new(("o", i, j, d), f"O{i + 1},{j + 1}:{d}")
        new(("y", i), f"y{i + 1}")
    zm, z, zp = new(("z-",), "z-"), new(("z",), "z"), new(("z+",), "z+")
    bstar = [new(("b", h), f"b*{h + 1}") for h in range(nB)]

    def o(i, j, d):
        return ids[("o", i, j, d)]

    edges = []
    for i in range(r):
        for j in range(nA):
            edges += [(o(i, j, u), o(i, j, v)) for u, v in domino.DOMINO_EDGES]
        for j in range(nA - 1):
            edges.append((o(i, j, domino.A_PLUS), o(i, j + 1, domino.A_MINUS)))
        edges += [(ids[("w", i)], ids[("x", i)]), (ids[("x", i)], o(i, 0, domino.A_MINUS)),
                  (o(i, nA - 1, domino.A_PLUS), ids[("y", i)])]
        if i < r - 1:
            edges.append((ids[("y", i)], ids[("w", i + 1)]))
        edges += [(ids[("x", i)], zm), (zp, ids[("y", i)])]
    edges += [(zm, z), (z, zp), (ids[("y", r - 1)], bstar[0]), (bstar[nB - 1], ids[("w", 0)])]
    for i, inst in enumerate(inputs):
        for u, v in inst.graph.edges:
            b, av = (u, v) if u < nB else (v, u)
            j = av - nB
            edges += [(o(i, j, domino.AHAT_MINUS), bstar[b]), (o(i, j, domino.AHAT_PLUS), bstar[b])]
    g = Graph(len(ids), tuple(sorted({(min(u, v), max(u, v)) for u, v in edges})))
    X = tuple(sorted([zm, z, zp] + bstar))
    assert len(X) == 3 + nB
    assert g.n == r * (8 * nA + 3) + 3 + nB
    inst = Instance("hamiltonian-cycle", g, witness=Witness.of("outerplanar-modulator", X))
    ok, why = domino_chain_template(g, X, r, nA)
    assert ok, why

    cert = None
    if witness is not None:
        istar, order = witness
        cert = []
        for i in range(r):
            cert += [ids[("w", i)], ids[("x", i)]]
            if i == istar:
                cert += [zm, z, zp]
            else:
                for j in range(nA):
                    cert += [o(i, j, d) for d in domino.A_TRAVERSAL]
            cert.append(ids[("y", i)])
        cert.append(bstar[order[0]])
        for j, b_in, b_out in _path_pairs(order, nB):
            cert += [o(istar, j, d) for d in domino.AHAT_TRAVERSAL]
            cert.append(bstar[b_out])
    return Composition(inst, X, cert, names)


def domino_chain_template(g: Graph, X: Sequence[int], r: int, nA: int) -> tuple[bool, str]:
    """Check that ``g - X`` is exactly r rails of nA chained dominos.

    Rebuilds the expected graph from (r, nA) alone, then compares edge sets
    under the rail layout w, x, dominos, y per block.
    """
    block = 8 * nA + 3
    if g.n - len(X) != r * block:
        return False, f"expected {r * block} non-modulator vertices, got {g.n - len(X)}"
    rest = [v for v in range(g.n) if v not in set(X)]
    sub, _ = g.induced(rest)
    want = set()
    for i in range(r):
        base = i * block
        w, x, y = base, base + 1, base + block - 1

        def d(j, k):
            return base + 2 + 8 * j + k

        want |= {(w, x), (x, d(0, domino.A_MINUS)), (d(nA - 1, domino.A_PLUS), y)}
        for j in range(nA):
            want |= {(d(j, u), d(j, v)) for u, v in domino.DOMINO_EDGES}
        for j in range(nA - 1):
            want.add((d(j, domino.A_PLUS), d(j + 1, domino.A_MINUS)))
        if i < r - 1:
            want.add((y, base + block))
    want = {(min(u, v), max(u, v)) for u, v in want}
    got = set(sub.edges)
    if got != want:
        extra, missing = sorted(got - want)[:3], sorted(want - got)[:3]
        return False, f"template mismatch, extra {extra}, missing {missing}"
    return True, ""


def certificate_ok(comp: Composition) -> bool:
    return comp.certificate is not None and is_cycle(comp.instance.graph, comp.certificate, hamiltonian=True)
