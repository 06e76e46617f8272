"""Plumbing shared by all kernelizers: dummies, stats, relabelling."""

from __future__ import annotations

from typing import Iterable

from .formats import serialize
from .graph import (
    Graph,
    Instance,
    KernelResult,
    LabeledMultigraph,
    SizeStats,
    Status,
    Witness,
    check_structure,
)


class KernelError(ValueError):
    """The instance cannot be handled by the requested kernelizer."""


class WitnessError(KernelError):
    """The supplied structural witness does not hold."""


def size_stats(inst: Instance) -> SizeStats:
    g = inst.graph
    return SizeStats(g.n, len(g.edges), 8 * len(serialize(inst).encode()))


_TRIANGLE = ((0, 1), (0, 2), (1, 2))
_DTRIANGLE = ((0, 1), (1, 2), (2, 0))


def dummy(problem: str, yes: bool, kind: str | None, directed: bool = False) -> Instance:
    """Fixed smallest equivalent instance for a decided answer."""
    k = None
    pairs = None
    if problem in ("long-cycle", "hamiltonian-cycle", "disjoint-cycles"):
        if yes:
            g = Graph(3, _DTRIANGLE if directed else _TRIANGLE, directed)
            cover = (0, 1)
        else:
            g, cover = Graph(1, (), directed), ()
        if problem == "long-cycle":
            k = 3 if yes else 2
        elif problem == "disjoint-cycles":
            k = 1
    elif problem in ("long-path", "hamiltonian-path"):
        if yes:
            g, cover = Graph(2, ((0, 1),), directed), (0,)
        elif problem == "long-path":
            g, cover = Graph(1, (), directed), ()
        else:
            g, cover = Graph(2, (), directed), ()
        if problem == "long-path":
            k = 2
    elif problem == "disjoint-paths":
        g = Graph(2, ((0, 1),) if yes else ())
        cover = (0,) if yes else ()
        k, pairs = 1, ((0, 1),)
    else:
        raise KernelError(f"no dummy defined for {problem}")
    witness = None
    if kind == "vertex-cover":
        witness = Witness.of("vertex-cover", cover)
    elif kind == "cluster-modulator":
        witness = Witness.of("cluster-modulator", ())
    elif kind == "max-leaf-bound":
        witness = Witness("max-leaf-bound", (), 2 if g.m else 1)
    return Instance(problem, g, k=k, pairs=pairs, witness=witness)


def solved(inst: Instance, yes: bool, trace: list[dict], reason: str) -> KernelResult:
    kind = inst.witness.kind if inst.witness else None
    out = dummy(inst.problem, yes, kind, inst.directed)
    trace = trace + [{"rule": "decide", "answer": "YES" if yes else "NO", "reason": reason}]
    return KernelResult(
        Status.SOLVED_YES if yes else Status.SOLVED_NO, out, trace, size_stats(inst), size_stats(out)
    )


def reduced(before: Instance, after: Instance, trace: list[dict]) -> KernelResult:
    return KernelResult(Status.REDUCED, after, trace, size_stats(before), size_stats(after))


def require_witness(inst: Instance, kind: str) -> None:
    w = inst.witness
    if w is None or w.kind != kind:
        got = w.kind if w else "none"
        raise KernelError(f"this kernelizer needs a {kind} witness, got {got}")
    if kind != "max-leaf-bound":
        rep = check_structure(inst.graph, w, inst.pairs)
        if not rep.ok:
            raise WitnessError(f"witness invalid: {rep.reason}")


def sorted_edges(edges: Iterable[tuple[int, int]], directed: bool) -> tuple[tuple[int, int], ...]:
    if directed:
        return tuple(sorted(set(edges)))
    return tuple(sorted({(min(u, v), max(u, v)) for u, v in edges}))


def restrict(
    inst: Instance,
    keep: Iterable[int],
    *,
    extra_edges: Iterable[tuple[int, int]] = (),
    witness_vertices: Iterable[int] | None = None,
    k: int | None = None,
    pairs: Iterable[tuple[int, int]] | None = None,
) -> tuple[Instance, list[int]]:
    """Induced sub-instance on ``keep`` (old ids), renumbered ascending.

    Returns the instance and the new-to-old vertex map.
    """
    g = inst.graph
    if isinstance(g, LabeledMultigraph):
        raise KernelError("restrict expects a plain graph")
    old = sorted(set(keep))
    nid = {v: i for i, v in enumerate(old)}
    edges = [(nid[u], nid[v]) for u, v in list(g.edges) + list(extra_edges) if u in nid and v in nid]
    ng = Graph(len(old), sorted_edges(edges, g.directed), g.directed)
    w = inst.witness
    if w is not None:
        if w.kind == "max-leaf-bound":
            nw = w
        else:
            src = w.vertices if witness_vertices is None else witness_vertices
            nw = Witness.of(w.kind, (nid[v] for v in src if v in nid))
    else:
        nw = None
    src_pairs = inst.pairs if pairs is None else tuple(pairs)
    new_pairs = None if src_pairs is None else tuple((nid[a], nid[b]) for a, b in src_pairs)
    out = inst.replace(
        graph=ng,
        witness=nw,
        k=inst.k if k is None else k,
        pairs=new_pairs,
        s=None if inst.s is None else nid[inst.s],
        t=None if inst.t is None else nid[inst.t],
        stand_ins=(),
    )
    return out, old
