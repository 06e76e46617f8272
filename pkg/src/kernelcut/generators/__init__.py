from .domino import DominoProof, prove_domino
from .forbidden import FPComposition, compose_thm11, gen_thm9, has_multicolored_clique
from .hamiltonian import (
    Composition,
    CompositionError,
    bipartite_shape,
    certificate_ok,
    compose_thm7,
    compose_thm8,
    domino_chain_template,
    gen_prop1,
)
from .planted import KINDS, gen_random_planted, planted_bipartite_path

__all__ = [
    "Composition", "CompositionError", "DominoProof", "FPComposition", "KINDS",
    "bipartite_shape", "certificate_ok", "compose_thm11", "compose_thm7", "compose_thm8",
    "domino_chain_template", "gen_prop1", "gen_random_planted", "gen_thm9",
    "has_multicolored_clique", "planted_bipartite_path", "prove_domino",
]
