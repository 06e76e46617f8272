"""Seeded verification suites shared by the CLI and the acceptance tests.

Every case is a pure function of its id, so suites can be spread over
processes and still produce the same table.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Any, Callable

from .config import ResourceLimitExceeded
from .formats import serialize
from .generators import (
    bipartite_shape,
    certificate_ok,
    compose_thm7,
    compose_thm8,
    compose_thm11,
    domino_chain_template,
    gen_prop1,
    gen_random_planted,
    gen_thm9,
    has_multicolored_clique,
    planted_bipartite_path,
    prove_domino,
)
from .graph import Graph, Instance, KernelResult, LabeledMultigraph, Status, Witness, check_structure
from .matching import BipartiteGraph, theorem2_holds
from .oracles import decide, hamiltonian_path, is_fp_path
from .routing import kernelize, supported_cells

SUITES = ("equivalence", "sizes", "theorem2", "generators")
EQUIV_MAX_N = 14


@dataclass
class CaseResult:
    case: str
    suite: str
    verdict: str
    millis: int
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


class CheckFailed(AssertionError):
    pass


def _expect(cond: bool, what: str) -> None:
    if not cond:
        raise CheckFailed(what)


# --- corpus ------------------------------------------------------------------


def _bounded(kind: str, params: Callable[[random.Random], dict], seed: str, max_n: int) -> Instance:
    """First planted instance (over sub-seeds) with at most ``max_n`` vertices."""
    rng = random.Random(seed)
    for attempt in range(200):
        inst = gen_random_planted(kind, params(rng), f"{seed}/{attempt}")
        if 3 <= inst.graph.n <= max_n:
            return inst
    raise RuntimeError(f"could not draw a {kind} instance with n <= {max_n}")


def corpus_instance(param: str, problem: str, seed: int, max_n: int = EQUIV_MAX_N) -> Instance:
    tag = f"{param}:{problem}:{seed}"
    st = {"st": (seed % 2 == 1)}
    if param == "vc":
        def params(rng):
            n = rng.randint(4, max_n)
            return {"n": n, "ell": rng.randint(1, min(6, n)), "p": rng.choice((0.3, 0.5, 0.7)),
                    "problem": problem, **st}
        return _bounded("vc", params, tag, max_n)
    if param == "maxleaf":
        def params(rng):
            return {"core": rng.randint(2, 6), "extra": rng.randint(0, 4), "subdiv": rng.randint(0, 3),
                    "problem": problem, **st}
        return _bounded("maxleaf", params, tag, max_n)
    if param == "cluster":
        def params(rng):
            return {"ell": rng.randint(0, 3), "cliques": rng.randint(1, 4), "max_clique": rng.randint(1, 5),
                    "p": rng.choice((0.3, 0.5, 0.8)), "problem": problem, **st}
        return _bounded("cluster", params, tag, max_n)
    raise ValueError(param)


def _answer(res: KernelResult) -> bool | None:
    if res.status is Status.SOLVED_YES:
        return True
    if res.status is Status.SOLVED_NO:
        return False
    if res.status is Status.REDUCED:
        return decide(res.instance).yes
    return None


def idempotent(res: KernelResult, param: str) -> bool:
    """Kernelizing the output again leaves it unchanged."""
    again = kernelize(res.instance, param)
    if serialize(again.instance) != serialize(res.instance):
        return False
    if res.status is Status.REDUCED:
        return again.status is Status.REDUCED or _answer(again) == decide(res.instance).yes
    return again.status in (res.status, Status.REDUCED)


def _equivalence_case(param: str, problem: str, seed: int) -> dict:
    inst = corpus_instance(param, problem, seed)
    want = decide(inst).yes
    res = kernelize(inst, param)
    _expect(res.status is not Status.PROMISE_VIOLATED, "promise reported violated on a valid witness")
    got = _answer(res)
    detail = {"n": inst.graph.n, "status": res.status.value, "after": res.instance.graph.n,
              "oracle": want, "kernel": got}
    _expect(got == want, f"answer changed: oracle {want}, kernel {got}")
    _expect(idempotent(res, param), "second pass changed the kernel")
    return detail


# --- sizes -------------------------------------------------------------------


def rule1_instance(seed: int) -> Instance:
    rng = random.Random(f"rule1:{seed}")
    n = rng.randint(2, 60)
    ell = rng.randint(1, min(8, n))
    return gen_random_planted("vc", {"n": n, "ell": ell, "p": rng.uniform(0.1, 0.9),
                                     "problem": "long-cycle", "k": rng.randint(3, max(3, n))}, seed)


def _rule1_case(seed: int) -> dict:
    inst = rule1_instance(seed)
    ell = inst.witness.ell
    res = kernelize(inst, "vc")
    after = res.instance.graph.n
    bound = ell + comb(ell, 2)
    if res.status is Status.REDUCED:
        _expect(after <= bound, f"{after} vertices > {bound}")
    return {"n": inst.graph.n, "ell": ell, "after": after, "bound": bound, "status": res.status.value}


def maxleaf_bounds(inst: Instance, res: KernelResult) -> list[str]:
    """Violated maxleaf size bounds for one kernel run (empty when all hold)."""
    if res.status is not Status.REDUCED:
        return []
    ell = inst.witness.ell
    out = res.instance
    g = out.graph
    base = g.base if isinstance(g, LabeledMultigraph) else g
    bad = []
    n0 = inst.graph.expanded_order() if isinstance(inst.graph, LabeledMultigraph) else inst.graph.n
    if inst.problem == "disjoint-paths":
        deg = [len(inst.graph.neighbors(v)) for v in range(inst.graph.n)]
        L = sum(d == 1 for d in deg)
        B = sum(d >= 3 for d in deg)
        if base.n > L + B + 4 * ell * B:
            bad.append(f"|V|={base.n} > |L|+|B|+4l|B|={L + B + 4 * ell * B}")
    elif base.n > 4 * ell:
        bad.append(f"|V|={base.n} > 4l={4 * ell}")
    mult: dict[tuple[int, int], int] = {}
    for u, v in base.edges:
        key = (min(u, v), max(u, v))
        mult[key] = mult.get(key, 0) + 1
    if mult and max(mult.values()) > ell:
        bad.append(f"{max(mult.values())} parallel edges > l={ell}")
    if isinstance(g, LabeledMultigraph):
        cap = math.ceil(math.log2(n0 + 1))
        worst = max((lab.bit_length() for lab in g.labels), default=0)
        if worst > cap:
            bad.append(f"label needs {worst} bits > {cap}")
    return bad


MAXLEAF_PROBLEMS = ("long-cycle", "hamiltonian-path", "disjoint-cycles", "disjoint-paths")


def _maxleaf_case(problem: str, seed: int) -> dict:
    inst = corpus_instance("maxleaf", problem, 10_000 + seed, max_n=18)
    res = kernelize(inst, "maxleaf")
    bad = maxleaf_bounds(inst, res)
    _expect(not bad, "; ".join(bad))
    return {"n": inst.graph.n, "ell": inst.witness.ell, "after": res.instance.graph.n, "status": res.status.value}


# --- matching restriction property ------------------------------------------


def random_bipartite(seed: int) -> BipartiteGraph:
    rng = random.Random(f"bip:{seed}")
    nr = rng.randint(1, 12)
    nl = rng.randint(1, 16)
    p = rng.uniform(0.05, 0.8)
    return BipartiteGraph(nl, nr, tuple((a, b) for a in range(nl) for b in range(nr) if rng.random() < p))


def _theorem2_case(seed: int) -> dict:
    h = random_bipartite(seed)
    _expect(theorem2_holds(h), "restriction property failed")
    return {"left": h.n_left, "right": h.n_right, "edges": len(h.edges)}


# --- generators --------------------------------------------------------------


def _gen_domino(_seed: int) -> dict:
    p = prove_domino()
    _expect(p.holds, p.reason)
    return {"subsets": p.subsets_checked}


def _gen_prop1(seed: int) -> dict:
    rng = random.Random(f"prop1:{seed}")
    n = rng.randint(2, 5)
    p = rng.choice((0.3, 0.5, 0.8))
    g = Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))
    s, t = rng.sample(range(n), 2)
    want = hamiltonian_path(g, s, t).yes
    for mode in ("directed", "undirected"):
        inst = gen_prop1(g, s, t, mode)
        bipartite_shape(inst)
        _expect(decide(inst).yes == want, f"{mode} encoding disagrees")
    return {"n": n, "answer": want}


def _bip_inputs(rng: random.Random, r: int, nA: int, directed: bool, seed_tag: str):
    ins = []
    for i in range(r):
        yes = rng.random() < 0.3
        inst, _ = planted_bipartite_path(nA, directed, f"{seed_tag}/{i}", yes=yes,
                                         density=rng.choice((0.2, 0.4, 0.6)))
        ins.append(inst)
    return ins


def _check_or(ins, comp_fn, expected_mod: Callable[[Instance], int]) -> dict:
    answers = [decide(x) for x in ins]
    comp = comp_fn(ins)
    mod = comp.modulator
    _expect(len(mod) == expected_mod(ins[0]), f"|X*|={len(mod)} != {expected_mod(ins[0])}")
    got = decide(comp.instance).yes
    want = any(a.yes for a in answers)
    _expect(got == want, f"composed {got}, OR of inputs {want}")
    certs = 0
    for i, a in enumerate(answers):
        if a.yes:
            c = comp_fn(ins, (i, a.certificate))
            _expect(certificate_ok(c), f"certificate for input {i} rejected")
            certs += 1
    return {"n": comp.instance.graph.n, "answer": got, "certificates": certs}


def _gen_thm7(seed: int) -> dict:
    rng = random.Random(f"thm7:{seed}")
    r = rng.randint(1, 3)
    nA = rng.randint(1, 4 if r < 3 else 2)
    ins = _bip_inputs(rng, r, nA, True, f"thm7:{seed}")
    comp = compose_thm7(ins)
    w = Witness.of("bipaths-modulator", comp.modulator)
    _expect(check_structure(comp.instance.graph, w).status == "holds", "D*-X* is not a union of bi-paths")
    return _check_or(ins, compose_thm7, lambda x: 1 + bipartite_shape(x)[1])


def _gen_thm8(seed: int) -> dict:
    rng = random.Random(f"thm8:{seed}")
    nA = rng.randint(1, 2)
    ins = _bip_inputs(rng, 2, nA, False, f"thm8:{seed}")
    comp = compose_thm8(ins)
    ok, why = domino_chain_template(comp.instance.graph, comp.modulator, 2, nA)
    _expect(ok, why)
    return _check_or(ins, compose_thm8, lambda x: 3 + bipartite_shape(x)[1])


def _gen_thm9(seed: int) -> dict:
    rng = random.Random(f"thm9:{seed}")
    n = rng.randint(2, 10)
    k = rng.randint(1, 3)
    col = [rng.randint(1, k) for _ in range(n)]
    g = Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5))
    inst = gen_thm9(g, k, col)
    want = has_multicolored_clique(g, k, col)
    a = decide(inst)
    _expect(a.yes == want, f"fp path {a.yes}, clique {want}")
    if a.yes:
        _expect(is_fp_path(inst.graph, a.certificate, inst.s, inst.t, inst.pairs), "bad fp certificate")
    _expect(inst.witness.ell == k + 1, "witness size")
    return {"n": n, "k": k, "answer": want}


def _rand_fp(rng: random.Random, n: int) -> Instance:
    g = Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5))
    H = tuple((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.25 and {u, v} != {0, n - 1})
    return Instance("fp-st-path", g, pairs=H, s=0, t=n - 1)


def _gen_thm11(seed: int) -> dict:
    rng = random.Random(f"thm11:{seed}")
    r = rng.randint(1, 2)
    n = rng.randint(2, 4)
    ins = [_rand_fp(rng, n) for _ in range(r)]
    answers = [decide(x) for x in ins]
    comp = compose_thm11(ins)
    _expect(len(comp.modulator) == 1 + n + 2 * n * comb(n, 2), "|X*| formula")
    _expect(check_structure(comp.instance.graph, comp.instance.witness, comp.instance.pairs).status == "holds",
            "modulator does not cover H")
    got = decide(comp.instance).yes
    want = any(a.yes for a in answers)
    _expect(got == want, f"composed {got}, OR of inputs {want}")
    for i, a in enumerate(answers):
        if a.yes:
            c = compose_thm11(ins, (i, a.certificate))
            I = c.instance
            _expect(is_fp_path(I.graph, c.certificate, I.s, I.t, I.pairs), "bad certificate")
    return {"n": comp.instance.graph.n, "answer": got}


def _smoke(kind: str, seed: int) -> dict:
    """Certificates at r = 10, n_A = 10, where no oracle could run."""
    rng = random.Random(f"smoke-{kind}:{seed}")
    directed = kind == "thm7"
    ins, witness = [], None
    star = rng.randrange(10)
    for i in range(10):
        inst, order = planted_bipartite_path(10, directed, f"smoke-{kind}:{seed}/{i}", yes=(i == star))
        ins.append(inst)
        if i == star:
            witness = (i, order)
    t0 = time.perf_counter()
    comp = (compose_thm7 if directed else compose_thm8)(ins, witness)
    ok = certificate_ok(comp)
    secs = time.perf_counter() - t0
    _expect(ok, "certificate rejected")
    _expect(secs < 1.0, f"took {secs:.2f}s")
    nB = 11
    _expect(len(comp.modulator) == (1 if directed else 3) + nB, "|X*| formula")
    return {"n": comp.instance.graph.n, "seconds": round(secs, 4)}


# --- registry ----------------------------------------------------------------

_GEN_CASES = {
    "domino": (_gen_domino, 1),
    "prop1": (_gen_prop1, 1),
    "thm7": (_gen_thm7, 1),
    "thm8": (_gen_thm8, 1),
    "thm9": (_gen_thm9, 1),
    "thm11": (_gen_thm11, 1),
    "smoke-thm7": (lambda s: _smoke("thm7", s), 10),
    "smoke-thm8": (lambda s: _smoke("thm8", s), 10),
}


def case_ids(suite: str, seeds: range) -> list[str]:
    if suite == "equivalence":
        return [f"{p}:{q}:{s:05d}" for p, q in supported_cells() for s in seeds]
    if suite == "sizes":
        ids = [f"rule1:{s:05d}" for s in seeds]
        ids += [f"maxleaf-{q}:{s:05d}" for q in MAXLEAF_PROBLEMS for s in seeds]
        return sorted(ids)
    if suite == "theorem2":
        return [f"theorem2:{s:05d}" for s in seeds]
    if suite == "generators":
        ids = ["domino:00000"]
        for name, (_, every) in _GEN_CASES.items():
            if name != "domino":
                ids += [f"{name}:{s:05d}" for s in seeds if s % every == 0]
        return sorted(ids)
    raise ValueError(f"unknown suite {suite!r}")


def _dispatch(suite: str, case: str) -> dict:
    head, _, seed_s = case.rpartition(":")
    seed = int(seed_s)
    if suite == "equivalence":
        param, problem = head.split(":", 1)
        return _equivalence_case(param, problem, seed)
    if suite == "sizes":
        if head == "rule1":
            return _rule1_case(seed)
        return _maxleaf_case(head[len("maxleaf-"):], seed)
    if suite == "theorem2":
        return _theorem2_case(seed)
    if suite == "generators":
        return _GEN_CASES[head][0](seed)
    raise ValueError(suite)


def run_case(suite: str, case: str) -> CaseResult:
    t0 = time.perf_counter()
    try:
        detail = _dispatch(suite, case)
        verdict = "PASS"
    except ResourceLimitExceeded as e:
        verdict, detail = "FAIL-UNKNOWN", {"error": str(e)}
    except CheckFailed as e:
        verdict, detail = "FAIL", {"error": str(e)}
    except Exception as e:  # a crash is a failed case, not a crashed run
        verdict, detail = "FAIL", {"error": f"{type(e).__name__}: {e}"}
    return CaseResult(case, suite, verdict, int((time.perf_counter() - t0) * 1000), detail)


def _run_packed(args: tuple[str, str]) -> CaseResult:
    return run_case(*args)


def run_suite(suite: str, seeds: range, jobs: int = 1) -> list[CaseResult]:
    ids = case_ids(suite, seeds)
    work = [(suite, c) for c in ids]
    if jobs <= 1:
        out = [run_case(s, c) for s, c in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            out = list(ex.map(_run_packed, work, chunksize=max(1, len(work) // (8 * jobs))))
    return sorted(out, key=lambda r: r.case)
