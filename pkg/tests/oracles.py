"""Independent reference computations used only by the tests."""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from kiteratio.graph import Graph

# largest real root of x^3 - x^2 - 3x + 1, the paw's spectral radius,
# from 200 bisection steps on [2, 3]
PAW_LAMBDA = 2.1700864866260337
# lambda1(P_3 . K_3), cyclic Jacobi and numpy.linalg.eigvalsh agree to 1e-15
KITE_3_3_LAMBDA = 2.2143197433775343
KITE_2_4_LAMBDA = 3.086130197651495

CONNECTED_LABELED = {3: 4, 4: 38, 5: 728, 6: 26704, 7: 1866256}


def bisect_root(f, lo: float, hi: float, steps: int = 200) -> float:
    flo = f(lo)
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        if (f(mid) < 0) == (flo < 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def connected_labeled_count(n: int) -> int:
    """Standard recurrence: subtract graphs whose vertex 1 lies in a smaller component."""
    c = {1: 1}
    for m in range(2, n + 1):
        c[m] = 2 ** comb(m, 2) - sum(comb(m - 1, k - 1) * c[k] * 2 ** comb(m - k, 2) for k in range(1, m))
    return c[n]


def brute_connected_count(n: int) -> int:
    """Count connected labeled graphs by union-find over every edge subset."""
    pairs = list(itertools.combinations(range(n), 2))
    count = 0
    for mask in range(1 << len(pairs)):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = n
        for b, (u, v) in enumerate(pairs):
            if mask >> b & 1:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
        count += comps == 1
    return count


def random_connected_graph(rng: np.random.Generator, n: int, p: float = 0.4) -> Graph:
    """Random spanning tree plus independent extra edges."""
    order = rng.permutation(n)
    edges = set()
    for i in range(1, n):
        u, v = int(order[i]), int(order[rng.integers(0, i)])
        edges.add((min(u, v), max(u, v)))
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return Graph.from_edges(n, edges)


def numpy_lambda1(g: Graph) -> float:
    return float(np.linalg.eigvalsh(g.adjacency_matrix())[-1])
