"""One entry point that answers any instance exactly."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..config import Deadline
from ..graph import Graph, Instance, LabeledMultigraph
from .disjoint import disjoint_cycles, disjoint_paths
from .forbidden import forbidden_pairs_path
from .hamiltonian import hamiltonian_cycle, hamiltonian_path
from .paths import longest_cycle_or_path


@dataclass
class Answer:
    yes: bool
    value: int | None = None
    certificate: Any = None


def _plain(inst: Instance) -> Graph:
    if isinstance(inst.graph, LabeledMultigraph):
        if inst.problem not in ("long-cycle", "long-path"):
            raise ValueError(f"labelled graphs are only meaningful for long-cycle/long-path")
        return inst.graph.expansion()
    return inst.graph


def decide(inst: Instance, deadline: Deadline | None = None) -> Answer:
    deadline = deadline or Deadline()
    p = inst.problem
    g = _plain(inst)
    weights = inst.vertex_weights()
    if p in ("long-cycle", "long-path"):
        mode = "cycle" if p == "long-cycle" else "path"
        best, seq = longest_cycle_or_path(g, mode, weights=weights, deadline=deadline,
                                          with_certificate=True)
        yes = best > 0 and best >= inst.k or (mode == "path" and inst.k <= 0)
        return Answer(yes, best, seq if yes else None)
    if weights is not None:
        raise ValueError(f"stand-in weights are not defined for {p}")
    if p == "hamiltonian-cycle":
        r = hamiltonian_cycle(g, deadline)
        return Answer(r.yes, None, r.order)
    if p == "hamiltonian-path":
        r = hamiltonian_path(g, inst.s, inst.t, deadline)
        return Answer(r.yes, None, r.order)
    if p == "disjoint-paths":
        r = disjoint_paths(g, inst.pairs, deadline)
        return Answer(r.yes, None, r.routes)
    if p == "disjoint-cycles":
        r = disjoint_cycles(g, inst.k, deadline)
        return Answer(r.yes, None, r.routes)
    if p == "fp-st-path":
        r = forbidden_pairs_path(g, inst.s, inst.t, inst.pairs, "exists", deadline)
        return Answer(r.yes, r.length, r.path)
    if p == "fp-st-path-shortest":
        r = forbidden_pairs_path(g, inst.s, inst.t, inst.pairs, "shortest", deadline)
        yes = r.yes and r.length <= inst.k
        return Answer(yes, r.length, r.path if yes else None)
    if p == "fp-st-path-longest":
        r = forbidden_pairs_path(g, inst.s, inst.t, inst.pairs, "longest", deadline)
        yes = r.yes and r.length >= inst.k
        return Answer(yes, r.length, r.path if yes else None)
    if p == "fp-longest-path":
        r = forbidden_pairs_path(g, None, None, inst.pairs, "longest-anywhere", deadline)
        yes = r.yes and r.length >= inst.k
        return Answer(yes, r.length, r.path if yes else None)
    raise ValueError(f"no oracle for {p}")
