"""Acceptance criteria 1-10.

Each test prints one ``criterion N: PASS|FAIL`` line (visible without -s).
Run this file directly to get the ten lines without pytest.
"""

from __future__ import annotations

import random
import sys
import time
from collections import Counter
from math import comb

import pytest

from kernelcut.cluster import fpt_long_cycle_cluster
from kernelcut.generators import (
    bipartite_shape,
    compose_thm7,
    compose_thm8,
    compose_thm11,
    domino_chain_template,
    gen_random_planted,
    planted_bipartite_path,
    prove_domino,
)
from kernelcut.generators.domino import DOMINO_EDGES
from kernelcut.graph import Graph, Instance, LabeledMultigraph, Status, Witness, check_structure
from kernelcut.maxleaf import held_karp_longest_cycle
from kernelcut.oracles import decide
from kernelcut.oracles.forbidden import forbidden_pairs_path, fpt_shortest_fp_path
from kernelcut.oracles.paths import longest_cycle_or_path
from kernelcut.routing import kernelize, supported_cells
from kernelcut.suites import (
    MAXLEAF_PROBLEMS,
    _answer,
    corpus_instance,
    idempotent,
    maxleaf_bounds,
    run_case,
    run_suite,
)


def _line(n: int, ok: bool, detail: str) -> str:
    return f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


def _fails(results) -> list[str]:
    return [f"{r.case} {r.verdict} {r.detail.get('error', '')}" for r in results if r.verdict != "PASS"]


# --- 1 ------------------------------------------------------------------------


def criterion_1():
    t0 = time.perf_counter()
    res = [run_case("sizes", f"rule1:{s:05d}") for s in range(500)]
    secs = time.perf_counter() - t0
    bad = _fails(res)
    ok = not bad and secs < 10
    return ok, f"rule-1 bound on 500 instances, {500 - len(bad)}/500 within, {secs:.1f}s (limit 10s)", bad


# --- 2 and 10 share one pass over the equivalence corpus ---------------------

_CORPUS: dict = {}


def _equivalence_corpus():
    if _CORPUS:
        return _CORPUS
    t0 = time.perf_counter()
    wrong, unknown, not_idem = [], [], []
    total = 0
    for param, problem in supported_cells():
        for seed in range(200):
            total += 1
            tag = f"{param}:{problem}:{seed:05d}"
            inst = corpus_instance(param, problem, seed)
            want = decide(inst).yes
            res = kernelize(inst, param)
            if res.status is Status.PROMISE_VIOLATED:
                unknown.append(tag)
                continue
            got = _answer(res)
            if got is None:
                unknown.append(tag)
            elif got != want:
                wrong.append(tag)
            if not idempotent(res, param):
                not_idem.append(tag)
    _CORPUS.update(total=total, wrong=wrong, unknown=unknown, not_idem=not_idem,
                   cells=len(supported_cells()), secs=time.perf_counter() - t0)
    return _CORPUS


def criterion_2():
    c = _equivalence_corpus()
    bad = c["wrong"] + c["unknown"]
    ok = not bad and c["secs"] < 300
    return ok, (f"{c['cells']} cells x 200, {c['total'] - len(bad)}/{c['total']} preserved, "
                f"{len(c['unknown'])} unknown, {c['secs']:.1f}s (limit 300s)"), bad


def criterion_10():
    c = _equivalence_corpus()
    bad = c["not_idem"]
    return not bad, f"second pass unchanged on {c['total'] - len(bad)}/{c['total']}", bad


# --- 3 ------------------------------------------------------------------------


def criterion_3():
    t0 = time.perf_counter()
    res = run_suite("theorem2", range(1, 1001))
    secs = time.perf_counter() - t0
    bad = _fails(res)
    return not bad and secs < 60, f"{1000 - len(bad)}/1000 bipartite graphs, {secs:.1f}s (limit 60s)", bad


# --- 4 ------------------------------------------------------------------------


def _expansion_longest_cycle(g: Graph) -> int:
    """Uncapped DFS over simple cycles; fine on sparse subdivided graphs."""
    adj = [sorted(g.neighbors(v)) for v in range(g.n)]
    best = 0

    def dfs(root: int, v: int, used: set, length: int) -> None:
        nonlocal best
        for w in adj[v]:
            if w == root and length >= 3:
                best = max(best, length)
            elif w > root and w not in used:
                used.add(w)
                dfs(root, w, used, length + 1)
                used.discard(w)

    for r in range(g.n):
        dfs(r, r, {r}, 1)
    return best


def random_labeled(rng: random.Random) -> LabeledMultigraph:
    n = rng.randint(1, 8)
    edges, labels, plain = [], [], set()
    for _ in range(rng.randint(0, min(14, 2 * n))):
        if n < 2:
            break
        u, v = sorted(rng.sample(range(n), 2))
        lab = rng.randint(0, 5)
        if lab == 0:
            if (u, v) in plain:
                lab = 1
            plain.add((u, v))
        edges.append((u, v))
        labels.append(lab)
    return LabeledMultigraph(Graph(n, tuple(edges), False, True), tuple(labels))


def criterion_4():
    t0 = time.perf_counter()
    rng = random.Random("held-karp")
    bad = []
    for i in range(200):
        m = random_labeled(rng)
        hk = held_karp_longest_cycle(m)
        bf = _expansion_longest_cycle(m.expansion())
        if hk != bf:
            bad.append(f"#{i}: held-karp {hk}, brute force {bf}")
    secs = time.perf_counter() - t0
    return not bad and secs < 60, f"{200 - len(bad)}/200 labelled multigraphs agree, {secs:.1f}s (limit 60s)", bad


# --- 5 ------------------------------------------------------------------------


def criterion_5():
    t0 = time.perf_counter()
    bad, yes = [], 0
    for seed in range(200):
        rng = random.Random(f"fpt-cluster:{seed}")
        ell = rng.randint(0, 3)
        sizes = []
        while True:
            s = rng.randint(1, 5)
            if ell + sum(sizes) + s > 14 or len(sizes) >= 4:
                break
            sizes.append(s)
        inst = gen_random_planted("cluster", {"ell": ell, "sizes": sizes or [1],
                                              "p": rng.choice((0.3, 0.5, 0.8))}, seed)
        g = inst.graph
        k = rng.randint(3, max(3, g.n))
        want = longest_cycle_or_path(g) >= k
        got = fpt_long_cycle_cluster(g, k, inst.witness.vertices)
        yes += want
        if got != want:
            bad.append(f"seed {seed}: n={g.n} k={k} fpt {got}, oracle {want}")
    secs = time.perf_counter() - t0
    return not bad and secs < 120, f"{200 - len(bad)}/200 agree ({yes} YES), {secs:.1f}s (limit 120s)", bad


# --- 6 ------------------------------------------------------------------------


def criterion_6():
    t0 = time.perf_counter()
    bad, yes = [], 0
    for seed in range(200):
        rng = random.Random(f"fpt-fp:{seed}")
        n = rng.randint(3, 12)
        inst = gen_random_planted("fp", {"n": n, "ell": rng.randint(1, min(5, n)), "p": rng.uniform(0.2, 0.6),
                                         "pairs": rng.randint(0, 8), "problem": "fp-st-path-shortest"}, seed)
        X = inst.witness.vertices
        got = fpt_shortest_fp_path(inst.graph, inst.s, inst.t, inst.pairs, X)
        ref = forbidden_pairs_path(inst.graph, inst.s, inst.t, inst.pairs, "shortest")
        yes += ref.yes
        if got.yes != ref.yes or (ref.yes and got.length != ref.length):
            bad.append(f"seed {seed}: fpt {got.yes}/{got.length}, brute {ref.yes}/{ref.length}")
        if got.subsets != 2 ** len(set(X)):
            bad.append(f"seed {seed}: {got.subsets} subsets for |X|={len(set(X))}")
    secs = time.perf_counter() - t0
    return not bad and secs < 30, f"{200 - len(bad)}/200 agree ({yes} YES), subsets == 2^|X|, {secs:.1f}s", bad


# --- 7 ------------------------------------------------------------------------


def criterion_7():
    t0 = time.perf_counter()
    res = [r for r in run_suite("generators", range(40)) if not r.case.startswith("domino")]
    secs = time.perf_counter() - t0
    bad = _fails(res)
    kinds = Counter(r.case.split(":")[0] for r in res)
    worst = max(r.millis for r in res) / 1000
    summary = " ".join(f"{k}={v}" for k, v in sorted(kinds.items()))
    ok = not bad and worst < 120
    return ok, f"{len(res) - len(bad)}/{len(res)} cases ({summary}), slowest {worst:.2f}s, total {secs:.1f}s", bad


# --- 8 ------------------------------------------------------------------------


def criterion_8():
    bad = []
    checked = 0
    for seed in range(40):
        rng = random.Random(f"formulas:{seed}")
        r = rng.randint(1, 10)
        nA = rng.randint(1, 10)
        nB = nA + 1
        ins7 = [planted_bipartite_path(nA, True, f"f7:{seed}/{i}", yes=rng.random() < 0.5)[0] for i in range(r)]
        c7 = compose_thm7(ins7)
        if len(c7.modulator) != 1 + nB:
            bad.append(f"thm7 seed {seed}: |X*|={len(c7.modulator)}")
        if check_structure(c7.instance.graph, Witness.of("bipaths-modulator", c7.modulator)).status != "holds":
            bad.append(f"thm7 seed {seed}: bi-paths check failed")
        ins8 = [planted_bipartite_path(nA, False, f"f8:{seed}/{i}", yes=rng.random() < 0.5)[0] for i in range(r)]
        c8 = compose_thm8(ins8)
        if len(c8.modulator) != 3 + bipartite_shape(ins8[0])[1]:
            bad.append(f"thm8 seed {seed}: |X*|={len(c8.modulator)}")
        ok, why = domino_chain_template(c8.instance.graph, c8.modulator, r, nA)
        if not ok:
            bad.append(f"thm8 seed {seed}: {why}")
        n = rng.randint(2, 5)
        ins11 = []
        for _ in range(rng.randint(1, 3)):
            g = Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5))
            ins11.append(Instance("fp-st-path", g, pairs=(), s=0, t=n - 1))
        c11 = compose_thm11(ins11)
        if len(c11.modulator) != 1 + n + 2 * n * comb(n, 2):
            bad.append(f"thm11 seed {seed}: |X*|={len(c11.modulator)}")
        checked += 3
    proof = prove_domino()
    if not proof.holds:
        bad.append(f"domino: {proof.reason}")
    return not bad, f"{checked} constructions; domino: all {2 ** len(DOMINO_EDGES)} edge subsets, {proof.subsets_checked} feasible", bad


# --- 9 ------------------------------------------------------------------------


def criterion_9():
    t0 = time.perf_counter()
    bad, reduced, total = [], 0, 0
    for problem in MAXLEAF_PROBLEMS:
        for seed in range(500):
            inst = corpus_instance("maxleaf", problem, 10_000 + seed, max_n=18)
            res = kernelize(inst, "maxleaf")
            total += 1
            reduced += res.status is Status.REDUCED
            v = maxleaf_bounds(inst, res)
            if v:
                bad.append(f"{problem}:{seed}: {'; '.join(v)}")
    secs = time.perf_counter() - t0
    return not bad, f"{total - len(bad)}/{total} outputs within bounds ({reduced} reduced), {secs:.1f}s", bad


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, detail, bad = CRITERIA[number]()
    with capsys.disabled():
        print("\n" + _line(number, ok, detail))
        for b in bad[:5]:
            print(f"    {b}")
    assert ok, "\n".join(bad[:20]) or detail


if __name__ == "__main__":
    failed = 0
    for number, fn in sorted(CRITERIA.items()):
        ok, detail, bad = fn()
        print(_line(number, ok, detail), flush=True)
        for b in bad[:5]:
            print(f"    {b}")
        failed += not ok
    sys.exit(1 if failed else 0)
