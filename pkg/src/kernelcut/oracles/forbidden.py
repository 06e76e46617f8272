"""Paths avoiding forbidden pairs: a brute-force searcher and the subset FPT algorithm."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..config import Deadline, ResourceLimitExceeded
from ..graph import Graph

FP_CAP = 64
FPT_X_CAP = 24


@dataclass
class FPResult:
    yes: bool
    length: int | None = None
    path: list[int] | None = None
    subsets: int = 0


def _conflicts(n: int, H: Iterable[tuple[int, int]]) -> list[int]:
    conf = [0] * n
    for u, v in H:
        conf[u] |= 1 << v
        conf[v] |= 1 << u
    return conf


def forbidden_pairs_path(
    g: Graph,
    s: int | None,
    t: int | None,
    H: Sequence[tuple[int, int]],
    objective: str = "exists",
    deadline: Deadline | None = None,
) -> FPResult:
    """Exact search over simple paths that contain at most one vertex of every pair in H.

    ``objective`` is one of exists, shortest, longest (all s-t) or
    longest-anywhere (s and t ignored).
    """
    if objective not in ("exists", "shortest", "longest", "longest-anywhere"):
        raise ValueError(f"unknown objective {objective!r}")
    if g.n > FP_CAP:
        raise ResourceLimitExceeded(f"{g.n} vertices exceed the forbidden-pairs cap")
    deadline = deadline or Deadline()
    n = g.n
    conf = _conflicts(n, H)
    out = [sorted(g.out_neighbors(v)) for v in range(n)]
    best: list = [None, None]
    anywhere = objective == "longest-anywhere"

    # vertices that can still reach t in G minus the current path are checked lazily
    def reaches_t(v: int, banned: int) -> bool:
        seen = banned | 1 << v
        q = deque([v])
        while q:
            x = q.popleft()
            if x == t:
                return True
            for y in out[x]:
                if not seen >> y & 1:
                    seen |= 1 << y
                    q.append(y)
        return False

    class Done(Exception):
        pass

    def dfs(path: list[int], used: int, banned: int) -> None:
        deadline.check()
        v = path[-1]
        length = len(path)
        if anywhere or v == t:
            if best[0] is None or (
                length < best[0] if objective == "shortest" else length > best[0]
            ):
                best[0], best[1] = length, list(path)
                if objective == "exists":
                    raise Done
            if not anywhere:
                return
        if objective == "shortest" and best[0] is not None and length + 1 >= best[0]:
            return
        if not anywhere and not reaches_t(v, used | banned):
            return
        for w in out[v]:
            if used >> w & 1 or banned >> w & 1:
                continue
            path.append(w)
            dfs(path, used | 1 << w, banned | conf[w])
            path.pop()

    try:
        starts = range(n) if anywhere else [s]
        for r in starts:
            if r is None:
                raise ValueError("s and t are required")
            dfs([r], 1 << r, conf[r])
    except Done:
        pass
    if best[0] is None:
        return FPResult(False)
    return FPResult(True, best[0], best[1])


def fpt_shortest_fp_path(
    g: Graph, s: int, t: int, H: Sequence[tuple[int, int]], X: Iterable[int]
) -> FPResult:
    """Shortest s-t path avoiding forbidden pairs, by enumerating all subsets of a cover X of H.

    For each conflict-free X' of X, delete X minus X' and every partner of X',
    then run BFS.  ``subsets`` in the result counts every subset examined.
    """
    X = sorted(set(X))
    Xs = set(X)
    for u, v in H:
        if u not in Xs and v not in Xs:
            raise ValueError(f"X does not cover forbidden pair ({u}, {v})")
    if len(X) > FPT_X_CAP:
        raise ResourceLimitExceeded(f"|X|={len(X)} exceeds {FPT_X_CAP}")
    n = g.n
    conf = _conflicts(n, H)
    xmask = 0
    for x in X:
        xmask |= 1 << x
    out = [sorted(g.out_neighbors(v)) for v in range(n)]
    best: tuple[int, list[int]] | None = None
    count = 0
    for bits in range(1 << len(X)):
        count += 1
        chosen = 0
        for i, x in enumerate(X):
            if bits >> i & 1:
                chosen |= 1 << x
        if any(conf[x] & chosen for x in X if chosen >> x & 1):
            continue
        partners = 0
        for x in X:
            if chosen >> x & 1:
                partners |= conf[x]
        removed = (xmask & ~chosen) | partners
        if removed >> s & 1 or removed >> t & 1:
            continue
        parent = {s: -1}
        q = deque([s])
        while q:
            v = q.popleft()
            if v == t:
                break
            for w in out[v]:
                if w not in parent and not removed >> w & 1:
                    parent[w] = v
                    q.append(w)
        if t not in parent:
            continue
        path = [t]
        while parent[path[-1]] != -1:
            path.append(parent[path[-1]])
        path.reverse()
        if best is None or len(path) < best[0]:
            best = (len(path), path)
    if best is None:
        return FPResult(False, subsets=count)
    return FPResult(True, best[0], best[1], subsets=count)
