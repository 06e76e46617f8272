"""JSON instance format and the plain edge-list text format."""

from __future__ import annotations

import json
from typing import Any

from .graph import Graph, GraphError, Instance, LabeledMultigraph, StandIn, Witness

_KNOWN_KEYS = {
    "problem", "directed", "multigraph", "n", "edges", "labels", "k", "pairs",
    "s", "t", "witness", "stand_ins", "certificate",
}


class FormatError(ValueError):
    pass


def _int(obj: Any, what: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise FormatError(f"{what} must be an integer, got {obj!r}")
    return obj


def _pairs(obj: Any, what: str) -> tuple[tuple[int, int], ...]:
    if not isinstance(obj, list):
        raise FormatError(f"{what} must be an array")
    out = []
    for item in obj:
        if not isinstance(item, list) or len(item) != 2:
            raise FormatError(f"{what} entries must be [u, v]")
        out.append((_int(item[0], what), _int(item[1], what)))
    return tuple(out)


def instance_from_dict(d: dict) -> Instance:
    if not isinstance(d, dict):
        raise FormatError("top level must be an object")
    unknown = set(d) - _KNOWN_KEYS
    if unknown:
        raise FormatError(f"unknown keys: {sorted(unknown)}")
    for key in ("problem", "n", "edges"):
        if key not in d:
            raise FormatError(f"missing field {key!r}")
    try:
        directed = bool(d.get("directed", False))
        multigraph = bool(d.get("multigraph", False))
        g = Graph(_int(d["n"], "n"), _pairs(d["edges"], "edges"), directed, multigraph)
        graph: Graph | LabeledMultigraph = g
        if d.get("labels") is not None:
            labels = tuple(_int(x, "labels") for x in d["labels"])
            graph = LabeledMultigraph(g, labels)
        witness = None
        if d.get("witness") is not None:
            w = d["witness"]
            if not isinstance(w, dict) or "kind" not in w:
                raise FormatError("witness must be an object with a kind")
            vs = tuple(_int(v, "witness vertex") for v in w.get("vertices", []))
            ell = _int(w["ell"], "ell") if "ell" in w else len(vs)
            witness = Witness(w["kind"], vs, ell)
        stand_ins = tuple(
            StandIn(_int(x["clique_id"], "clique_id"), _int(x["vertex_id"], "vertex_id"),
                    _int(x["label"], "label"))
            for x in d.get("stand_ins") or []
        )
        return Instance(
            problem=d["problem"],
            graph=graph,
            k=None if d.get("k") is None else _int(d["k"], "k"),
            pairs=None if d.get("pairs") is None else _pairs(d["pairs"], "pairs"),
            s=None if d.get("s") is None else _int(d["s"], "s"),
            t=None if d.get("t") is None else _int(d["t"], "t"),
            witness=witness,
            stand_ins=stand_ins,
        )
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def parse_instance(text: bytes | str) -> Instance:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"input is not UTF-8: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from exc
    return instance_from_dict(obj)


def instance_to_dict(inst: Instance) -> dict:
    g = inst.graph
    base = g.base if isinstance(g, LabeledMultigraph) else g
    d: dict[str, Any] = {
        "problem": inst.problem,
        "directed": base.directed,
        "multigraph": base.multigraph,
        "n": base.n,
        "edges": [list(e) for e in base.edges],
    }
    if isinstance(g, LabeledMultigraph):
        d["labels"] = list(g.labels)
    for key in ("k", "s", "t"):
        val = getattr(inst, key)
        if val is not None:
            d[key] = val
    if inst.pairs is not None:
        d["pairs"] = [list(p) for p in inst.pairs]
    if inst.witness is not None:
        w = inst.witness
        d["witness"] = {"kind": w.kind, "vertices": list(w.vertices), "ell": w.ell}
    if inst.stand_ins:
        d["stand_ins"] = [
            {"clique_id": si.clique_id, "vertex_id": si.vertex_id, "label": si.label}
            for si in inst.stand_ins
        ]
    return d


def serialize(inst: Instance, certificate: Any = None) -> str:
    """Canonical JSON: sorted keys, compact separators, trailing newline."""
    d = instance_to_dict(inst)
    if certificate is not None:
        d["certificate"] = certificate
    return json.dumps(d, sort_keys=True, separators=(",", ":")) + "\n"


def parse_edge_list(text: str, directed: bool = False) -> Graph:
    """``n m`` header followed by ``m`` lines ``u v``.  ``#`` starts a comment."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows or len(rows[0]) != 2:
        raise FormatError("edge list needs an 'n m' header")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise FormatError(f"bad edge list line: {exc}") from exc
    if len(edges) != m:
        raise FormatError(f"header says {m} edges, found {len(edges)}")
    try:
        return Graph(n, tuple(edges), directed)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc
