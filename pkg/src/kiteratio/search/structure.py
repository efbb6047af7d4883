"""Kite recognition and the structural audit of a candidate extremal graph."""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import asdict, dataclass, field

import numpy as np

from ..graph import Graph, KiteParams
from ..spectral import SpectralData

EXHAUSTIVE_SUBSETS_MAX = 15
SAMPLED_SUBSETS = 1000
SUBSET_SLACK = 1e-9


class StaleSpectrumError(ValueError):
    """The supplied eigenpair does not satisfy A v = lambda v for this graph."""


def is_kite(g: Graph) -> KiteParams | None:
    """(r, s) with g isomorphic to P_r . K_s, or None.

    Paths come back with s = 2 (P_n = P_{n-1} . K_2); the edge count fixes s
    because (r - 1) + s(s - 1)/2 is strictly increasing in s at fixed n.
    """
    n, m = g.n, g.edge_count
    s = next((s for s in range(2, n + 1) if (n - s) + s * (s - 1) // 2 == m), None)
    if s is None:
        return None
    r = n - s + 1
    deg = g.degrees()
    if r == 1:
        return KiteParams(1, s) if all(d == n - 1 for d in deg) else None
    for start in (v for v in range(n) if deg[v] == 1):
        path = [start]
        prev, cur = -1, start
        ok = True
        while len(path) < r:
            nxt = [u for u in g.neighbors(cur) if u != prev]
            if len(path) > 1 and deg[cur] != 2 or len(nxt) != 1:
                ok = False
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
        if not ok:
            continue
        attach = path[-1]
        clique = [v for v in range(n) if v not in path[:-1]]
        if len(clique) != s:
            continue
        if all(g.has_edge(a, b) for a, b in itertools.combinations(clique, 2)):
            # edge count match rules out any further edges
            return KiteParams(r, s)
    return None


def shortest_path(g: Graph, src: int, dst: int) -> list[int]:
    """BFS path from src to dst, neighbours expanded in index order."""
    parent = {src: src}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        for u in g.neighbors(v):
            if u not in parent:
                parent[u] = v
                queue.append(u)
    if dst not in parent:
        raise ValueError(f"no path between {src} and {dst}")
    path = [dst]
    while path[-1] != src:
        path.append(parent[path[-1]])
    return path[::-1]


@dataclass
class StructureReport:
    n: int
    k: int
    c_size: int
    path: list[int]
    lambda_gt_nk: bool
    pendant_prefix_len: int
    xk_dominates: bool
    deg_xk2: int | None
    deg_xk1: int | None
    nbhd_sum_ok: bool
    nbhd_subsets_checked: int
    nbhd_worst_margin: float
    attach_degree_bound: float | None
    attach_degree_ok: bool | None
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return asdict(self)


def _residual(g: Graph, spec: SpectralData) -> float:
    a = g.adjacency_matrix()
    return float(np.max(np.abs(a @ spec.v - spec.lambda1 * spec.v)))


def neighbourhood_sums(values: np.ndarray, rng: np.random.Generator | None = None) -> tuple[bool, int, float]:
    """Check |U| - 1 < sum(U) <= |U| over subsets U of ``values``.

    Exhaustive up to 15 values, otherwise 1000 random subsets. Returns
    (ok, subsets checked, smallest sum(U) - |U| + 1).
    """
    d = len(values)
    if d <= EXHAUSTIVE_SUBSETS_MAX:
        masks = np.arange(1 << d, dtype=np.int64)
    else:
        rng = rng if rng is not None else np.random.default_rng(0)
        masks = rng.integers(0, 2, size=(SAMPLED_SUBSETS, d)).astype(bool)
    if masks.ndim == 1:
        member = (masks[:, None] >> np.arange(d)) & 1
    else:
        member = masks.astype(np.int64)
    sizes = member.sum(axis=1)
    sums = member @ values
    lower = sums - (sizes - 1)
    upper = sizes - sums
    ok = bool(np.all(lower > -SUBSET_SLACK) and np.all(upper >= -SUBSET_SLACK))
    # the upper side is automatic for entries <= 1; report the strict side
    return ok, len(sizes), float(lower.min())


def structure_check(g: Graph, spec: SpectralData, tol: float = 1e-12, *, seed: int = 0) -> StructureReport:
    """Audit the path/neighbourhood structure that an extremal graph must have.

    x_1 is the min-entry vertex, x_k the max-entry vertex (lowest index on
    ties) and x_1..x_k a BFS shortest path between them. When the extremes
    tie the graph is regular, k = 1 and the path flags (including
    lambda_gt_nk) hold vacuously.
    """
    res = _residual(g, spec)
    if res > 10 * tol:
        raise StaleSpectrumError(f"eigenpair residual {res:.3e} exceeds tolerance {tol:.1e}")
    n = g.n
    deg = g.degrees()
    x1, xk = spec.min_vertex, spec.max_vertex
    notes = []
    if spec.gamma - 1.0 <= 1e-9 or x1 == xk:
        path = [xk]
        notes.append("extremes tie (regular graph): path flags vacuous")
    else:
        path = shortest_path(g, x1, xk)
    k = len(path)
    on_path = set(path)
    off_path = [v for v in range(n) if v not in on_path]

    if k == 1:
        prefix = 1 if deg[path[0]] == 1 else 0
    elif deg[path[0]] != 1:
        prefix = 0
    else:
        prefix = 2
        while prefix < k and deg[path[prefix - 1]] == 2:
            prefix += 1

    if k == 1:
        dominates = True
    else:
        dominates = all(g.has_edge(path[-1], v) for v in off_path)

    nb = g.neighbors(path[-1])
    ok, checked, worst = neighbourhood_sums(spec.v[nb], np.random.default_rng(seed))

    c_size = n - k
    if n >= 3 and k >= 2:
        bound = 11 * c_size / math.sqrt(math.log(n))
        holds = deg[path[-2]] < bound
    else:
        bound = holds = None

    return StructureReport(
        n=n,
        k=k,
        c_size=c_size,
        path=list(path),
        lambda_gt_nk=True if k == 1 else bool(spec.lambda1 > n - k),
        pendant_prefix_len=prefix,
        xk_dominates=dominates,
        deg_xk2=deg[path[-3]] if k >= 3 else None,
        deg_xk1=deg[path[-2]] if k >= 2 else None,
        nbhd_sum_ok=ok,
        nbhd_subsets_checked=checked,
        nbhd_worst_margin=worst,
        attach_degree_bound=bound,
        attach_degree_ok=holds,
        notes=notes,
    )
