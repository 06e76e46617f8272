"""Graph and instance data model.

Vertices are always the dense integers ``0..n-1``.  Every reduction that
deletes vertices renumbers the survivors in ascending order and records the
old ids in its trace entry, so solutions can be mapped back.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    pass


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()
    directed: bool = False
    multigraph: bool = False

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise GraphError("negative vertex count")
        seen = set()
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"vertex out of range in edge ({u}, {v}) with n={self.n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (u, v) if self.directed else _pair(u, v)
            if key in seen and not self.multigraph:
                raise GraphError(f"duplicate edge {key} without multigraph flag")
            seen.add(key)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _out(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            out[u].add(v)
            if not self.directed:
                out[v].add(u)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def _in(self) -> tuple[frozenset[int], ...]:
        if not self.directed:
            return self._out
        inn: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            inn[v].add(u)
        return tuple(frozenset(s) for s in inn)

    @cached_property
    def _degree(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        if self.directed:
            return frozenset(self.edges)
        return frozenset(_pair(u, v) for u, v in self.edges)

    def out_neighbors(self, v: int) -> frozenset[int]:
        return self._out[v]

    def in_neighbors(self, v: int) -> frozenset[int]:
        return self._in[v]

    def neighbors(self, v: int) -> frozenset[int]:
        """All neighbours, ignoring arc direction."""
        if not self.directed:
            return self._out[v]
        return self._out[v] | self._in[v]

    def degree(self, v: int) -> int:
        """Number of incident edges (parallel edges counted separately)."""
        return self._degree[v]

    def has_edge(self, u: int, v: int) -> bool:
        if self.directed:
            return (u, v) in self.edge_set
        return _pair(u, v) in self.edge_set

    def underlying(self) -> Graph:
        """Undirected simple graph obtained by dropping orientation and parallels."""
        pairs = sorted({_pair(u, v) for u, v in self.edges})
        return Graph(self.n, tuple(pairs))

    def adjacency_masks(self) -> list[int]:
        """Out-neighbourhoods as integer bitmasks."""
        masks = [0] * self.n
        for v in range(self.n):
            for w in self._out[v]:
                masks[v] |= 1 << w
        return masks

    def induced(self, keep: Iterable[int]) -> tuple[Graph, list[int]]:
        """Subgraph induced by ``keep``; returns it with the new-to-old id map."""
        old = sorted(set(keep))
        new_id = {v: i for i, v in enumerate(old)}
        edges = tuple(
            (new_id[u], new_id[v]) for u, v in self.edges if u in new_id and v in new_id
        )
        return Graph(len(old), edges, self.directed, self.multigraph), old

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.neighbors(v):
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps


@dataclass(frozen=True)
class LabeledMultigraph:
    """Multigraph whose edge labels count the subdivision vertices they stand for."""

    base: Graph
    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if not self.base.multigraph:
            object.__setattr__(
                self, "base", Graph(self.base.n, self.base.edges, self.base.directed, True)
            )
        if len(labels) != len(self.base.edges):
            raise GraphError("labels must align with edges")
        if any(x < 0 for x in labels):
            raise GraphError("labels must be nonnegative")
        plain = set()
        for (u, v), lab in zip(self.base.edges, labels):
            if lab == 0:
                key = (u, v) if self.base.directed else _pair(u, v)
                if key in plain:
                    raise GraphError(f"parallel unlabeled edges {key}: expansion is not simple")
                plain.add(key)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.base.edges

    @property
    def directed(self) -> bool:
        return self.base.directed

    def expanded_order(self) -> int:
        return self.base.n + sum(self.labels)

    def expansion(self) -> Graph:
        """Simple graph with every labelled edge subdivided ``label`` times."""
        n = self.base.n
        edges = []
        for (u, v), lab in zip(self.base.edges, self.labels):
            prev = u
            for _ in range(lab):
                edges.append((prev, n))
                prev = n
                n += 1
            edges.append((prev, v))
        return Graph(n, tuple(edges), self.base.directed)

    @classmethod
    def from_graph(cls, g: Graph) -> LabeledMultigraph:
        return cls(Graph(g.n, g.edges, g.directed, True), (0,) * g.m)


AnyGraph = Graph | LabeledMultigraph


PROBLEMS = (
    "long-cycle",
    "long-path",
    "hamiltonian-cycle",
    "hamiltonian-path",
    "disjoint-paths",
    "disjoint-cycles",
    "fp-st-path",
    "fp-st-path-shortest",
    "fp-st-path-longest",
    "fp-longest-path",
)
NEEDS_K = {
    "long-cycle",
    "long-path",
    "disjoint-paths",
    "disjoint-cycles",
    "fp-st-path-shortest",
    "fp-st-path-longest",
    "fp-longest-path",
}
NEEDS_ST = {"fp-st-path", "fp-st-path-shortest", "fp-st-path-longest"}
NEEDS_PAIRS = {"disjoint-paths", "fp-st-path", "fp-st-path-shortest", "fp-st-path-longest", "fp-longest-path"}
# Hamiltonian path instances may optionally fix both endpoints.
OPTIONAL_ST = {"hamiltonian-path"}

WITNESS_KINDS = (
    "vertex-cover",
    "cluster-modulator",
    "bipaths-modulator",
    "outerplanar-modulator",
    "max-leaf-bound",
    "vc-of-H",
)


@dataclass(frozen=True)
class Witness:
    kind: str
    vertices: tuple[int, ...] = ()
    ell: int = 0

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(int(v) for v in self.vertices)))
        if self.kind not in WITNESS_KINDS:
            raise GraphError(f"unknown witness kind {self.kind!r}")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("witness vertices repeat")
        if self.kind == "max-leaf-bound":
            if self.vertices:
                raise GraphError("max-leaf-bound witness carries no vertices")
            if self.ell < 1:
                raise GraphError("max-leaf-bound needs ell >= 1")
        elif self.ell != len(self.vertices):
            raise GraphError(f"witness ell={self.ell} but {len(self.vertices)} vertices given")

    @classmethod
    def of(cls, kind: str, vertices: Iterable[int]) -> Witness:
        vs = tuple(sorted(set(vertices)))
        return cls(kind, vs, len(vs))


@dataclass(frozen=True)
class StandIn:
    """A vertex standing for ``label`` interchangeable clique vertices."""

    clique_id: int
    vertex_id: int
    label: int


@dataclass(frozen=True)
class Instance:
    problem: str
    graph: AnyGraph
    k: int | None = None
    pairs: tuple[tuple[int, int], ...] | None = None
    s: int | None = None
    t: int | None = None
    witness: Witness | None = None
    stand_ins: tuple[StandIn, ...] = ()

    def __post_init__(self):
        if self.pairs is not None:
            object.__setattr__(self, "pairs", tuple((int(a), int(b)) for a, b in self.pairs))
        object.__setattr__(self, "stand_ins", tuple(self.stand_ins))
        p = self.problem
        if p not in PROBLEMS:
            raise GraphError(f"unknown problem {p!r}")
        if (self.k is not None) != (p in NEEDS_K):
            raise GraphError(f"k must be {'given' if p in NEEDS_K else 'absent'} for {p}")
        if p in NEEDS_ST:
            if self.s is None or self.t is None:
                raise GraphError(f"s and t required for {p}")
        elif p in OPTIONAL_ST:
            if (self.s is None) != (self.t is None):
                raise GraphError("give both s and t or neither")
        elif self.s is not None or self.t is not None:
            raise GraphError(f"s, t not allowed for {p}")
        if p in NEEDS_PAIRS and self.pairs is None:
            raise GraphError(f"pairs required for {p}")
        if p not in NEEDS_PAIRS and self.pairs is not None:
            raise GraphError(f"pairs not allowed for {p}")
        n = self.graph.n
        for v in (self.s, self.t):
            if v is not None and not 0 <= v < n:
                raise GraphError(f"vertex out of range: {v}")
        for a, b in self.pairs or ():
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"vertex out of range in pair ({a}, {b})")
            if a == b:
                raise GraphError(f"degenerate pair ({a}, {a})")
        if p == "disjoint-paths":
            terms = [v for pr in self.pairs for v in pr]
            if len(set(terms)) != len(terms):
                raise GraphError("disjoint-paths terminals must be distinct")
            if self.k != len(self.pairs):
                raise GraphError("disjoint-paths needs k == number of pairs")
        if p in NEEDS_ST and self.s == self.t:
            raise GraphError("s and t must differ")
        if self.witness is not None:
            for v in self.witness.vertices:
                if not 0 <= v < n:
                    raise GraphError(f"vertex out of range in witness: {v}")
        for si in self.stand_ins:
            if not 0 <= si.vertex_id < n or si.label < 1:
                raise GraphError(f"bad stand-in {si}")

    @property
    def directed(self) -> bool:
        return self.graph.directed

    @property
    def ell(self) -> int:
        return self.witness.ell if self.witness else 0

    def vertex_weights(self) -> list[int] | None:
        """Per-vertex weights implied by stand-ins, or None when all are 1."""
        if not self.stand_ins:
            return None
        w = [1] * self.graph.n
        for si in self.stand_ins:
            w[si.vertex_id] = si.label
        return w

    def replace(self, **changes) -> Instance:
        fields = dict(
            problem=self.problem,
            graph=self.graph,
            k=self.k,
            pairs=self.pairs,
            s=self.s,
            t=self.t,
            witness=self.witness,
            stand_ins=self.stand_ins,
        )
        fields.update(changes)
        return Instance(**fields)


class Status(str, enum.Enum):
    REDUCED = "Reduced"
    SOLVED_YES = "SolvedYes"
    SOLVED_NO = "SolvedNo"
    PROMISE_VIOLATED = "PromiseViolated"

    @property
    def solved(self) -> bool:
        return self in (Status.SOLVED_YES, Status.SOLVED_NO)


@dataclass(frozen=True)
class SizeStats:
    vertices: int
    edges: int
    bits: int


@dataclass
class KernelResult:
    status: Status
    instance: Instance
    trace: list[dict] = field(default_factory=list)
    before: SizeStats | None = None
    after: SizeStats | None = None


# --------------------------------------------------------------------------
# structural predicates


@dataclass(frozen=True)
class WitnessReport:
    status: str  # "holds" | "holds-conditionally" | "violated"
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "violated"


def _is_clique(g: Graph, comp: Sequence[int]) -> bool:
    size = len(comp)
    return all(len(g.neighbors(v) & set(comp)) == size - 1 for v in comp)


def check_structure(
    g: AnyGraph, w: Witness, pairs: Sequence[tuple[int, int]] | None = None
) -> WitnessReport:
    """Check a structural witness against a graph.

    ``pairs`` is only consulted for ``vc-of-H`` witnesses, where it holds the
    forbidden pairs.
    """
    if isinstance(g, LabeledMultigraph):
        g = g.base
    X = set(w.vertices)
    if w.kind == "outerplanar-modulator":
        raise GraphError("outerplanarity is checked against construction templates only")
    if w.kind == "vertex-cover":
        for u, v in g.edges:
            if u not in X and v not in X:
                return WitnessReport("violated", f"edge ({u}, {v}) uncovered")
        return WitnessReport("holds")
    if w.kind == "vc-of-H":
        for u, v in pairs or ():
            if u not in X and v not in X:
                return WitnessReport("violated", f"forbidden pair ({u}, {v}) uncovered")
        return WitnessReport("holds")
    if w.kind in ("cluster-modulator", "bipaths-modulator"):
        rest = [v for v in range(g.n) if v not in X]
        sub, old = g.induced(rest)
        if w.kind == "bipaths-modulator":
            und = sub.underlying()
            for comp in und.components():
                if len(comp) == 1:
                    continue
                degs = [und.degree(v) for v in comp]
                if max(degs) > 2 or und.induced(comp)[0].m != len(comp) - 1:
                    return WitnessReport("violated", f"component at {old[comp[0]]} is not a path")
            return WitnessReport("holds")
        for comp in sub.components():
            if not _is_clique(sub, comp):
                return WitnessReport("violated", f"component at {old[comp[0]]} is not a clique")
        return WitnessReport("holds")
    # max-leaf-bound: only the branch-vertex census is checkable in poly time
    branch = sum(1 for v in range(g.n) if len(g.neighbors(v)) >= 3 or g.degree(v) >= 3)
    if branch > 4 * w.ell - 2:
        return WitnessReport("violated", f"{branch} branch vertices exceed 4*ell-2")
    return WitnessReport("holds-conditionally")


def cluster_cliques(g: Graph, X: Iterable[int]) -> list[list[int]]:
    """Components of ``g - X`` (in original ids), each sorted."""
    Xs = set(X)
    rest = [v for v in range(g.n) if v not in Xs]
    sub, old = g.induced(rest)
    return sorted(([old[v] for v in comp] for comp in sub.components()), key=lambda c: c[0])


# --------------------------------------------------------------------------
# degree-2 structure


@dataclass(frozen=True)
class Run:
    """A maximal run of degree-2 vertices between two anchors."""

    ends: tuple[int, int]
    internal: tuple[int, ...]


@dataclass(frozen=True)
class PathDecomposition:
    branch: tuple[int, ...]
    paths: tuple[Run, ...]  # branch-to-branch runs, including direct edges and loops
    pendants: tuple[Run, ...]  # ends = (branch vertex, degree-1 vertex)
    cycles: tuple[tuple[int, ...], ...]  # components consisting of degree-2 vertices only
    bare_paths: tuple[tuple[int, ...], ...]  # path components without branch vertices


def degree2_path_decomposition(g: Graph) -> PathDecomposition:
    if g.directed or g.multigraph:
        raise GraphError("decomposition expects a simple undirected graph")
    deg = [g.degree(v) for v in range(g.n)]
    branch = tuple(v for v in range(g.n) if deg[v] >= 3)
    used_darts: set[tuple[int, int]] = set()
    paths, pendants, bare = [], [], []
    seen2 = set()
    for a in range(g.n):
        if deg[a] == 2 or deg[a] == 0:
            continue
        for w in sorted(g.neighbors(a)):
            if (a, w) in used_darts:
                continue
            prev, cur, internal = a, w, []
            while deg[cur] == 2:
                internal.append(cur)
                seen2.add(cur)
                (nxt,) = g.neighbors(cur) - {prev} or {prev}
                prev, cur = cur, nxt
            used_darts.add((a, w))
            used_darts.add((cur, prev))
            run = Run((a, cur), tuple(internal))
            if deg[a] >= 3 and deg[cur] >= 3:
                paths.append(run)
            elif deg[a] >= 3:
                pendants.append(run)
            elif deg[cur] >= 3:
                pendants.append(Run((cur, a), tuple(reversed(internal))))
            else:
                bare.append((a, *internal, cur))
    cycles = []
    for v in range(g.n):
        if deg[v] != 2 or v in seen2:
            continue
        cyc, prev, cur = [v], None, v
        seen2.add(v)
        while True:
            nbrs = sorted(g.neighbors(cur))
            nxt = nbrs[0] if nbrs[0] != prev else nbrs[1]
            if prev is None:
                nxt = nbrs[0]
            if nxt == v:
                break
            cyc.append(nxt)
            seen2.add(nxt)
            prev, cur = cur, nxt
        cycles.append(tuple(cyc))
    return PathDecomposition(branch, tuple(paths), tuple(pendants), tuple(cycles), tuple(bare))
