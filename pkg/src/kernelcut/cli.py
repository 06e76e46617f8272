"""kernelcut command line: kernelize, verify, solve, generate.

Exit codes: 0 success, 1 input error, 2 resource cap hit, 3 promise or
witness violation.  Verification exits 1 when any case fails.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import asdict
from pathlib import Path

from .config import ResourceLimitExceeded
from .formats import FormatError, instance_to_dict, parse_instance, serialize
from .generators import (
    compose_thm7,
    compose_thm8,
    compose_thm11,
    gen_prop1,
    gen_random_planted,
    gen_thm9,
    planted_bipartite_path,
)
from .graph import Graph, GraphError, Instance, LabeledMultigraph, Status
from .kernel_common import KernelError, WitnessError
from .oracles import (
    decide,
    disjoint_cycles,
    disjoint_paths,
    forbidden_pairs_path,
    fpt_shortest_fp_path,
    hamiltonian,
    longest_cycle_or_path,
    max_leaf_number,
)
from .routing import PARAMS, kernelize
from .suites import SUITES, run_suite

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_PROMISE = 0, 1, 2, 3

DEFAULT_SEEDS = {"equivalence": (0, 199), "sizes": (0, 499), "theorem2": (1, 1000), "generators": (0, 39)}
ORACLES = ("auto", "hamiltonian", "longest", "disjoint", "fp", "max-leaf")
ALGOS = ("maxleaf", "cluster-fpt", "fpt-fp")
CONSTRUCTIONS = ("prop1", "thm7", "thm8", "thm9", "thm11",
                 "random-vc", "random-cluster", "random-maxleaf", "random-fp")


class InputError(Exception):
    pass


def _read_instance(path: str) -> Instance:
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    return parse_instance(data)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _seq(xs) -> str:
    return " ".join(str(v) for v in xs)


# --- kernelize ---------------------------------------------------------------


def cmd_kernelize(args) -> int:
    inst = _read_instance(args.input)
    t0 = time.perf_counter()
    res = kernelize(inst, args.param)
    millis = int((time.perf_counter() - t0) * 1000)
    doc = {
        "status": res.status.value,
        "instance": instance_to_dict(res.instance),
        "trace": res.trace,
        "stats": {"before": asdict(res.before) if res.before else None,
                  "after": asdict(res.after) if res.after else None},
    }
    _write(args.output, json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")
    if args.report:
        rep = {"case": args.input, "suite": f"kernelize-{args.param}", "verdict": res.status.value,
               "millis": millis, "detail": doc["stats"]}
        Path(args.report).write_text(json.dumps(rep, sort_keys=True, indent=1) + "\n", encoding="utf-8")
    print(f"{res.status.value}: {doc['stats']['before']['vertices']} -> "
          f"{doc['stats']['after']['vertices']} vertices", file=sys.stderr)
    return EXIT_PROMISE if res.status is Status.PROMISE_VIOLATED else EXIT_OK


# --- verify ------------------------------------------------------------------


def _parse_seeds(text: str) -> range:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return range(int(a), int(b) + 1)
        return range(int(text), int(text) + 1)
    except ValueError as e:
        raise InputError(f"bad --seeds {text!r}; expected a..b") from e


def cmd_verify(args) -> int:
    seeds = _parse_seeds(args.seeds) if args.seeds else range(DEFAULT_SEEDS[args.suite][0],
                                                             DEFAULT_SEEDS[args.suite][1] + 1)
    results = run_suite(args.suite, seeds, args.jobs)
    width = max((len(r.case) for r in results), default=4)
    for r in results:
        extra = r.detail.get("error", "") if r.verdict != "PASS" else ""
        print(f"{r.case:<{width}}  {r.verdict:<12} {extra}".rstrip())
    tally: dict[str, int] = {}
    for r in results:
        tally[r.verdict] = tally.get(r.verdict, 0) + 1
    print("summary " + " ".join(f"{k}={v}" for k, v in sorted(tally.items())) + f" total={len(results)}")
    if args.report:
        Path(args.report).write_text(json.dumps([r.to_dict() for r in results], sort_keys=True, indent=1) + "\n",
                                     encoding="utf-8")
    return EXIT_OK if all(r.verdict == "PASS" for r in results) else EXIT_INPUT


# --- solve -------------------------------------------------------------------


def _plain(inst: Instance) -> Graph:
    g = inst.graph
    return g.expansion() if isinstance(g, LabeledMultigraph) else g


def _solve_oracle(inst: Instance, name: str) -> str:
    p = inst.problem
    if name == "auto":
        a = decide(inst)
        if not a.yes:
            return "NO"
        cert = a.certificate
        if cert and isinstance(cert[0], (list, tuple)):
            return "YES " + " | ".join(_seq(c) for c in cert)
        return "YES " + _seq(cert or [])
    g = _plain(inst)
    if name == "hamiltonian":
        mode = "path" if p == "hamiltonian-path" else "cycle"
        r = hamiltonian(g, mode, inst.s, inst.t)
        return "YES " + _seq(r.order) if r.yes else "NO"
    if name == "longest":
        mode = "path" if p in ("long-path", "hamiltonian-path") else "cycle"
        best, seq = longest_cycle_or_path(inst.graph, mode, weights=inst.vertex_weights(), with_certificate=True)
        return f"OPT {best} " + _seq(seq or [])
    if name == "disjoint":
        if p == "disjoint-paths":
            r = disjoint_paths(g, inst.pairs)
        elif p == "disjoint-cycles":
            r = disjoint_cycles(g, inst.k)
        else:
            raise InputError("the disjoint oracle needs a disjoint-paths or disjoint-cycles instance")
        return "YES " + " | ".join(_seq(c) for c in r.routes) if r.yes else "NO"
    if name == "fp":
        if not p.startswith("fp-"):
            raise InputError("the fp oracle needs a forbidden-pairs instance")
        mode = {"fp-st-path": "exists", "fp-st-path-shortest": "shortest",
                "fp-st-path-longest": "longest", "fp-longest-path": "longest-anywhere"}[p]
        r = forbidden_pairs_path(g, inst.s, inst.t, inst.pairs, mode)
        if not r.yes:
            return "NO"
        if mode == "exists":
            return "YES " + _seq(r.path)
        return f"OPT {r.length} " + _seq(r.path)
    if name == "max-leaf":
        return f"OPT {max_leaf_number(g)}"
    raise InputError(f"unknown oracle {name!r}")


def _solve_algo(inst: Instance, name: str) -> str:
    if name == "maxleaf":
        from .maxleaf import solve_long_cycle_maxleaf
        return "YES" if solve_long_cycle_maxleaf(inst) is Status.SOLVED_YES else "NO"
    if name == "cluster-fpt":
        from .cluster import fpt_long_cycle_cluster
        if inst.problem != "long-cycle" or inst.witness is None or inst.witness.kind != "cluster-modulator":
            raise InputError("cluster-fpt needs a long-cycle instance with a cluster-modulator witness")
        return "YES" if fpt_long_cycle_cluster(_plain(inst), inst.k, inst.witness.vertices,
                                               weights=inst.vertex_weights()) else "NO"
    if name == "fpt-fp":
        if inst.s is None or inst.witness is None or inst.witness.kind not in ("vc-of-H", "vertex-cover"):
            raise InputError("fpt-fp needs an fp s-t instance with a vc-of-H witness")
        r = fpt_shortest_fp_path(_plain(inst), inst.s, inst.t, inst.pairs, inst.witness.vertices)
        if not r.yes:
            return "NO"
        return f"OPT {r.length} " + _seq(r.path)
    raise InputError(f"unknown algorithm {name!r}")


def cmd_solve(args) -> int:
    inst = _read_instance(args.input)
    try:
        out = _solve_algo(inst, args.algo) if args.algo else _solve_oracle(inst, args.oracle or "auto")
    except ValueError as e:
        raise InputError(str(e)) from e
    print(out)
    return EXIT_OK


# --- generate ----------------------------------------------------------------


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def _bip_family(args, directed: bool, r_default: int, na_default: int):
    r = args.r or r_default
    nA = args.na or na_default
    rng = random.Random(f"gen-{'thm7' if directed else 'thm8'}:{args.seed}")
    star = None if args.all_no else rng.randrange(r)
    ins, witness = [], None
    for i in range(r):
        inst, order = planted_bipartite_path(nA, directed, f"{args.seed}/{i}", yes=(i == star))
        ins.append(inst)
        if i == star:
            witness = (i, order)
    return ins, witness


def generate(args) -> tuple[Instance, object]:
    c = args.construction
    seed = args.seed
    if c.startswith("random-"):
        params = {k: v for k, v in (("n", args.n), ("ell", args.ell), ("k", args.k), ("problem", args.problem))
                  if v is not None}
        return gen_random_planted(c[len("random-"):], params, seed), None
    rng = random.Random(f"gen-{c}:{seed}")
    if c == "prop1":
        n = args.n or 4
        g = _random_graph(rng, n, 0.5)
        s, t = rng.sample(range(n), 2)
        return gen_prop1(g, s, t, args.mode), None
    if c == "thm7":
        ins, witness = _bip_family(args, True, 3, 3)
        comp = compose_thm7(ins, witness)
        return comp.instance, comp.certificate
    if c == "thm8":
        ins, witness = _bip_family(args, False, 2, 2)
        comp = compose_thm8(ins, witness)
        return comp.instance, comp.certificate
    if c == "thm9":
        n = args.n or 8
        k = args.k or 3
        g = _random_graph(rng, n, 0.5)
        col = [rng.randint(1, k) for _ in range(n)]
        return gen_thm9(g, k, col), None
    if c == "thm11":
        n = args.n or 4
        r = args.r or 2
        ins = []
        for _ in range(r):
            g = _random_graph(rng, n, 0.5)
            H = tuple((u, v) for u in range(n) for v in range(u + 1, n)
                      if rng.random() < 0.25 and {u, v} != {0, n - 1})
            ins.append(Instance("fp-st-path", g, pairs=H, s=0, t=n - 1))
        witness = None
        for i, x in enumerate(ins):
            a = decide(x)
            if a.yes:
                witness = (i, a.certificate)
                break
        comp = compose_thm11(ins, witness, pendant=args.pendant)
        return comp.instance, comp.certificate
    raise InputError(f"unknown construction {c!r}")


def cmd_generate(args) -> int:
    inst, cert = generate(args)
    _write(args.output, serialize(inst, cert))
    return EXIT_OK


# --- entry -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kernelcut", description="Kernels and exact oracles for path and cycle problems.")
    sub = ap.add_subparsers(dest="command", required=True)

    k = sub.add_parser("kernelize", help="reduce an instance")
    k.add_argument("--param", required=True, choices=PARAMS)
    k.add_argument("-i", "--input", required=True)
    k.add_argument("-o", "--output")
    k.add_argument("--report")
    k.set_defaults(func=cmd_kernelize)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=SUITES)
    v.add_argument("--seeds", help="inclusive range a..b")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--report")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="answer an instance exactly")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--oracle", choices=ORACLES)
    g.add_argument("--algo", choices=ALGOS)
    s.add_argument("-i", "--input", required=True)
    s.set_defaults(func=cmd_solve)

    gen = sub.add_parser("generate", help="emit a constructed instance")
    gen.add_argument("--construction", required=True, choices=CONSTRUCTIONS)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output")
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--ell", type=int)
    gen.add_argument("--r", type=int)
    gen.add_argument("--na", type=int)
    gen.add_argument("--problem")
    gen.add_argument("--mode", choices=("directed", "undirected"), default="directed")
    gen.add_argument("--all-no", action="store_true", help="plant no YES input")
    gen.add_argument("--pendant", action="store_true", help="thm11: long-path variant with tails")
    gen.set_defaults(func=cmd_generate)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitExceeded as e:
        print(f"UNKNOWN: {e}", file=sys.stderr)
        print("UNKNOWN")
        return EXIT_CAP
    except WitnessError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PROMISE
    except (FormatError, GraphError, KernelError, InputError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
