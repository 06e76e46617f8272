"""The 8-vertex domino gadget and an exhaustive check of its traversal contract.

Two pentagons glued along the edge 3-4.  Terminals: a- = 0, a+ = 7,
a-hat- = 2, a-hat+ = 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

DOMINO_N = 8
DOMINO_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 4), (3, 7))
A_MINUS, A_PLUS, AHAT_MINUS, AHAT_PLUS = 0, 7, 2, 5
TERMINALS = (A_MINUS, A_PLUS, AHAT_MINUS, AHAT_PLUS)

A_TRAVERSAL = (0, 1, 2, 3, 4, 5, 6, 7)
AHAT_TRAVERSAL = (2, 1, 0, 4, 3, 7, 6, 5)
# outer boundary walk; 3-4 is the only chord
OUTER_CYCLE = (0, 1, 2, 3, 7, 6, 5, 4)


@dataclass(frozen=True)
class DominoProof:
    holds: bool
    subsets_checked: int
    endpoint_kinds: frozenset
    reason: str = ""


def _components(edges: list[tuple[int, int]]) -> list[set[int]]:
    parent = list(range(DOMINO_N))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    groups: dict[int, set[int]] = {}
    for v in range(DOMINO_N):
        groups.setdefault(find(v), set()).add(v)
    return list(groups.values())


def prove_domino() -> DominoProof:
    """Check every edge subset a Hamiltonian cycle could induce on the gadget.

    Inside any Hamiltonian cycle of a host graph that touches the gadget only at
    its terminals, the gadget edges used form vertex-disjoint paths in which every
    non-terminal has degree 2.  The contract: every such subset is a single path
    through all 8 vertices with ends {a-, a+} or {a-hat-, a-hat+}, and both kinds
    occur.
    """
    kinds = set()
    checked = 0
    for size in range(len(DOMINO_EDGES) + 1):
        for sub in combinations(DOMINO_EDGES, size):
            deg = [0] * DOMINO_N
            for u, v in sub:
                deg[u] += 1
                deg[v] += 1
            if max(deg) > 2 or any(deg[v] != 2 for v in range(DOMINO_N) if v not in TERMINALS):
                continue
            comps = _components(list(sub))
            if any(len(c) - 1 != sum(1 for u, v in sub if u in c) for c in comps):
                continue  # contains a cycle
            checked += 1
            if len(comps) != 1:
                return DominoProof(False, checked, frozenset(kinds), f"split traversal {sub}")
            ends = frozenset(v for v in range(DOMINO_N) if deg[v] == 1)
            if ends not in (frozenset((A_MINUS, A_PLUS)), frozenset((AHAT_MINUS, AHAT_PLUS))):
                return DominoProof(False, checked, frozenset(kinds), f"bad ends {sorted(ends)}")
            kinds.add(ends)
    if len(kinds) != 2:
        return DominoProof(False, checked, frozenset(kinds), "a traversal kind is missing")
    return DominoProof(True, checked, frozenset(kinds))
