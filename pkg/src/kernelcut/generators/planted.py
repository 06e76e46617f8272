"""Seeded random instances whose structural witness holds by construction."""

from __future__ import annotations

import random
from typing import Any

from ..graph import Graph, Instance, Witness
from ..oracles.maxleaf import MAXLEAF_COMPONENT_CAP, max_leaf_number

KINDS = ("vc", "cluster", "maxleaf", "fp")

_DEFAULTS: dict[str, dict[str, Any]] = {
    "vc": {"n": 12, "ell": 4, "p": 0.5, "problem": "long-cycle"},
    "cluster": {"cliques": 3, "max_clique": 4, "ell": 2, "p": 0.4, "problem": "long-cycle"},
    "maxleaf": {"core": 4, "extra": 2, "subdiv": 3, "problem": "long-cycle"},
    "fp": {"n": 10, "ell": 3, "p": 0.35, "pairs": 6, "problem": "fp-st-path"},
}


def _shuffle_ids(rng: random.Random, n: int, edges, X) -> tuple[list[tuple[int, int]], list[int]]:
    perm = list(range(n))
    rng.shuffle(perm)
    e = sorted({(min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges})
    return e, sorted(perm[x] for x in X)


def _targets(rng: random.Random, problem: str, g: Graph, params: dict) -> dict:
    """k / pairs / s, t for the chosen problem, unless fixed in params."""
    out: dict[str, Any] = {}
    n = g.n
    if problem in ("long-cycle", "long-path"):
        lo = 3 if problem == "long-cycle" else 2
        out["k"] = params.get("k", rng.randint(lo, max(lo, n)))
    elif problem == "disjoint-cycles":
        out["k"] = params.get("k", rng.randint(1, 3))
    elif problem == "disjoint-paths":
        q = min(params.get("requests", rng.randint(1, max(1, min(3, n // 2)))), n // 2)
        vs = rng.sample(range(n), 2 * q)
        out["pairs"] = tuple((vs[2 * i], vs[2 * i + 1]) for i in range(q))
        out["k"] = q
    elif problem == "hamiltonian-path" and params.get("st") and n >= 2:
        s, t = rng.sample(range(n), 2)
        out["s"], out["t"] = s, t
    return out


def gen_random_planted(kind: str, params: dict | None = None, seed: int = 0) -> Instance:
    if kind not in KINDS:
        raise ValueError(f"unknown planted kind {kind!r}")
    p = dict(_DEFAULTS[kind])
    p.update(params or {})
    rng = random.Random(f"{kind}:{seed}")
    problem = p["problem"]

    if kind == "vc":
        n, ell = p["n"], p["ell"]
        if not 0 <= ell <= n:
            raise ValueError("need 0 <= ell <= n")
        X = range(ell)
        edges = [(u, v) for u in X for v in range(u + 1, n) if rng.random() < p["p"]]
        edges, Xs = _shuffle_ids(rng, n, edges, X)
        g = Graph(n, tuple(edges))
        return Instance(problem, g, witness=Witness.of("vertex-cover", Xs), **_targets(rng, problem, g, p))

    if kind == "cluster":
        ell = p["ell"]
        sizes = p.get("sizes") or [rng.randint(1, p["max_clique"]) for _ in range(p["cliques"])]
        n = ell + sum(sizes)
        edges = []
        v = ell
        for s in sizes:
            edges += [(a, b) for a in range(v, v + s) for b in range(a + 1, v + s)]
            v += s
        edges += [(x, y) for x in range(ell) for y in range(x + 1, n) if rng.random() < p["p"]]
        edges, Xs = _shuffle_ids(rng, n, edges, range(ell))
        g = Graph(n, tuple(edges))
        return Instance(problem, g, witness=Witness.of("cluster-modulator", Xs), **_targets(rng, problem, g, p))

    if kind == "maxleaf":
        n0 = max(2, p["core"])
        base = {(rng.randrange(v), v) for v in range(1, n0)}
        for _ in range(p["extra"]):
            u, v = rng.sample(range(n0), 2)
            base.add((min(u, v), max(u, v)))
        edges = []
        n = n0
        for u, v in sorted(base):
            prev = u
            for _ in range(rng.randint(0, p["subdiv"])):
                edges.append((prev, n))
                prev = n
                n += 1
            edges.append((prev, v))
        edges, _ = _shuffle_ids(rng, n, edges, ())
        g = Graph(n, tuple(edges))
        if n <= MAXLEAF_COMPONENT_CAP:
            ell = max(1, max_leaf_number(g))
        else:
            ell = max(1, n - 1)  # trivially valid promise
        return Instance(problem, g, witness=Witness("max-leaf-bound", (), ell), **_targets(rng, problem, g, p))

    # fp: forbidden pairs each touch the planted set X
    n, ell = p["n"], p["ell"]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p["p"]]
    H = set()
    for _ in range(p["pairs"]):
        x = rng.randrange(ell)
        y = rng.randrange(n)
        if x != y:
            H.add((min(x, y), max(x, y)))
    perm = list(range(n))
    rng.shuffle(perm)
    edges = sorted({(min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges})
    H = sorted({(min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in H})
    X = sorted(perm[x] for x in range(ell))
    g = Graph(n, tuple(edges))
    extra: dict[str, Any] = {}
    if problem in ("fp-st-path", "fp-st-path-shortest", "fp-st-path-longest"):
        s, t = rng.sample(range(n), 2)
        extra.update(s=s, t=t)
    if problem != "fp-st-path":
        extra["k"] = p.get("k", rng.randint(2, n))
    return Instance(problem, g, pairs=tuple(H), witness=Witness.of("vc-of-H", X), **extra)


def planted_bipartite_path(nA: int, directed: bool, seed: int, yes: bool = True, density: float = 0.3):
    """Bipartite s-t path instance in the fixed b-first layout.

    With ``yes`` a random Hamiltonian b_1..b_nB path is planted and returned
    as the second element; otherwise that element is None and the answer is
    whatever the random arcs give.
    """
    rng = random.Random(f"bip:{nA}:{directed}:{seed}:{yes}")
    nB = nA + 1
    n = nA + nB
    E: set[tuple[int, int]] = set()
    order = None
    if yes:
        bs = [0] + rng.sample(range(1, nB - 1), nB - 2) + [nB - 1]
        As = rng.sample(range(nB, n), nA)
        order = [bs[0]]
        for a, b in zip(As, bs[1:]):
            order += [a, b]
        for u, v in zip(order, order[1:]):
            E.add((u, v) if directed else (min(u, v), max(u, v)))
    for b in range(nB):
        for a in range(nB, n):
            if rng.random() >= density:
                continue
            if directed:
                if b != nB - 1:
                    E.add((b, a))
                if b != 0 and rng.random() < 0.5:
                    E.add((a, b))
            elif b not in (0, nB - 1):
                E.add((b, a))
    if not directed:
        for end in (0, nB - 1):
            if not any(end in e for e in E):
                E.add((end, rng.randrange(nB, n)))
    g = Graph(n, tuple(sorted(E)), directed)
    return Instance("hamiltonian-path", g, s=0, t=nB - 1), order
