from .disjoint import DisjointResult, disjoint_cycles, disjoint_paths
from .forbidden import FPResult, forbidden_pairs_path, fpt_shortest_fp_path
from .hamiltonian import HamResult, hamiltonian, hamiltonian_cycle, hamiltonian_path
from .maxleaf import max_leaf_by_spanning_trees, max_leaf_number
from .paths import longest_cycle_or_path
from .solve import Answer, decide
from .validators import (
    are_disjoint_cycles,
    are_disjoint_paths,
    avoids_pairs,
    is_cycle,
    is_fp_path,
    is_path,
    validate_bipartite_hampath_arcset,
)

__all__ = [
    "Answer", "DisjointResult", "FPResult", "HamResult",
    "are_disjoint_cycles", "are_disjoint_paths", "avoids_pairs", "decide",
    "disjoint_cycles", "disjoint_paths", "forbidden_pairs_path", "fpt_shortest_fp_path",
    "hamiltonian", "hamiltonian_cycle", "hamiltonian_path", "is_cycle", "is_fp_path",
    "is_path", "longest_cycle_or_path", "max_leaf_by_spanning_trees", "max_leaf_number",
    "validate_bipartite_hampath_arcset",
]
