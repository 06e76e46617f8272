"""Which kernelizer handles which (parameter, problem) cell."""

from __future__ import annotations

from typing import Callable

from .cluster import kernelize_disjoint_cluster, kernelize_hamiltonian_cluster, kernelize_long_cycle_cluster
from .graph import Instance, KernelResult
from .kernel_common import KernelError
from .maxleaf import (
    kernelize_disjoint_paths_maxleaf,
    kernelize_long_cycle_maxleaf,
    reduce_degree2_single_internal,
)
from .vc import hamiltonian_vc_bound, kernelize_vc

PARAMS = ("vc", "maxleaf", "cluster")

WITNESS_FOR = {"vc": "vertex-cover", "maxleaf": "max-leaf-bound", "cluster": "cluster-modulator"}

ROUTES: dict[tuple[str, str], Callable[[Instance], KernelResult]] = {
    ("vc", "long-cycle"): kernelize_vc,
    ("vc", "long-path"): kernelize_vc,
    ("vc", "disjoint-paths"): kernelize_vc,
    ("vc", "disjoint-cycles"): kernelize_vc,
    ("vc", "hamiltonian-cycle"): hamiltonian_vc_bound,
    ("vc", "hamiltonian-path"): hamiltonian_vc_bound,
    ("maxleaf", "long-cycle"): kernelize_long_cycle_maxleaf,
    ("maxleaf", "hamiltonian-path"): reduce_degree2_single_internal,
    ("maxleaf", "disjoint-cycles"): reduce_degree2_single_internal,
    ("maxleaf", "disjoint-paths"): kernelize_disjoint_paths_maxleaf,
    ("cluster", "long-cycle"): kernelize_long_cycle_cluster,
    ("cluster", "hamiltonian-cycle"): kernelize_hamiltonian_cluster,
    ("cluster", "hamiltonian-path"): kernelize_hamiltonian_cluster,
    ("cluster", "disjoint-paths"): kernelize_disjoint_cluster,
    ("cluster", "disjoint-cycles"): kernelize_disjoint_cluster,
}

# cells with no kernelizer, and why
_REJECT = {
    ("maxleaf", "long-path"): "polynomial kernel exists via labelled path contraction, not implemented here",
    ("maxleaf", "hamiltonian-cycle"): "pose it as long-cycle with k = n",
    ("cluster", "long-path"): "polynomial compression exists via a universal vertex, not implemented here",
}
_FP_REASON = (
    "forbidden-pair path problems have no polynomial kernel: W[1]-hard under a vertex cover of G, "
    "and no polynomial kernel under a vertex cover of G plus H; use `solve --algo fpt-fp`"
)


def route(param: str, problem: str) -> Callable[[Instance], KernelResult]:
    if param not in PARAMS:
        raise KernelError(f"unknown parameter {param!r}; choose from {', '.join(PARAMS)}")
    fn = ROUTES.get((param, problem))
    if fn is not None:
        return fn
    if problem.startswith("fp-"):
        raise KernelError(f"{problem} x {param}: {_FP_REASON}")
    why = _REJECT.get((param, problem), "unsupported combination")
    raise KernelError(f"{problem} x {param}: {why}")


def kernelize(inst: Instance, param: str) -> KernelResult:
    return route(param, inst.problem)(inst)


def supported_cells() -> list[tuple[str, str]]:
    return sorted(ROUTES)
