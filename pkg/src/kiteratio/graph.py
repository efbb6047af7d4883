"""Simple undirected graphs on at most 64 vertices, stored as adjacency bitsets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or parameters."""


@dataclass(frozen=True)
class KiteParams:
    """P_r . K_s: a path on ``r`` vertices glued at one end to a clique on ``s``."""

    r: int
    s: int

    @property
    def n(self) -> int:
        return self.r + self.s - 1

    @property
    def edge_count(self) -> int:
        return (self.r - 1) + self.s * (self.s - 1) // 2


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``adj[v]`` is an int whose bit ``u`` is set iff uv is an edge."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            bits = row
            while bits:
                low = bits & -bits
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                bits ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, a) -> Graph:
        a = np.asarray(a)
        n = a.shape[0]
        return cls.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]))

    def neighbors(self, v: int) -> list[int]:
        row = self.adj[v]
        return [u for u in range(self.n) if row >> u & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.adj[u] >> v & 1]

    def with_edge(self, u: int, v: int) -> Graph:
        if u == v or self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) already present or a loop")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) not present")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def permute(self, perm: Sequence[int]) -> Graph:
        """Relabel vertex ``v`` as ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("not a permutation of the vertex set")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Neighbour lists as (indptr, indices) int64 arrays."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indices = []
        for v in range(self.n):
            nb = self.neighbors(v)
            indices.extend(nb)
            indptr[v + 1] = indptr[v] + len(nb)
        return indptr, np.asarray(indices, dtype=np.int64)


def reachable_from(g: Graph, start: int = 0) -> int:
    """Bitset of vertices reachable from ``start``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        bits = frontier
        while bits:
            low = bits & -bits
            nxt |= g.adj[low.bit_length() - 1]
            bits ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return reachable_from(g, 0) == (1 << g.n) - 1


def separated_pair(g: Graph) -> tuple[int, int] | None:
    """A pair (0, v) with v unreachable from 0, or None when connected."""
    seen = reachable_from(g, 0)
    for v in range(g.n):
        if not seen >> v & 1:
            return (0, v)
    return None


def _check_n(n: int, low: int = 1) -> None:
    if not isinstance(n, (int, np.integer)) or not low <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside {low}..{MAX_VERTICES}")


def make_path(n: int) -> Graph:
    _check_n(n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    _check_n(n, 3)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(n: int) -> Graph:
    _check_n(n)
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def make_star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at index 0."""
    _check_n(leaves + 1, 2)
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def make_kite(p: KiteParams | int, s: int | None = None) -> Graph:
    """P_r . K_s.

    Vertices 0..r-1 form the path with vertex 0 pendant; vertex r-1 is the
    attachment vertex and r-1..r+s-2 the clique.
    """
    if s is None:
        r, s = p.r, p.s
    else:
        r = p
    if r < 1 or s < 2 or r + s - 1 > MAX_VERTICES:
        raise GraphError(f"kite parameters r={r}, s={s} out of range")
    n = r + s - 1
    edges = [(i, i + 1) for i in range(r - 1)]
    edges += itertools.combinations(range(r - 1, n), 2)
    return Graph.from_edges(n, edges)


def make_pineapple(clique: int, pendants: int) -> Graph:
    """K_clique with ``pendants`` leaves hung on clique vertex 0."""
    if clique < 2 or pendants < 0 or clique + pendants > MAX_VERTICES:
        raise GraphError(f"pineapple parameters clique={clique}, pendants={pendants} out of range")
    n = clique + pendants
    edges = list(itertools.combinations(range(clique), 2))
    edges += [(0, clique + i) for i in range(pendants)]
    return Graph.from_edges(n, edges)


def upper_triangle_bits(g: Graph, perm: Sequence[int] | None = None) -> list[int]:
    """Upper-triangle bits in graph6 order: column j = 1..n-1, row i < j."""
    if perm is None:
        return [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    inv = [0] * g.n
    for v, p in enumerate(perm):
        inv[p] = v
    return [g.adj[inv[i]] >> inv[j] & 1 for j in range(1, g.n) for i in range(j)]


CANONICAL_MAX_N = 10


def canonical_code(g: Graph) -> bytes:
    """Lexicographically least upper-triangle bit string over all relabelings.

    Returned as ``bytes([n])`` followed by the bit string packed MSB first,
    so equal codes mean isomorphic graphs. Factorial cost; n <= 10.
    """
    n = g.n
    if n > CANONICAL_MAX_N:
        raise GraphError(f"canonical_code supports n <= {CANONICAL_MAX_N}, got {n}")
    nbits = n * (n - 1) // 2
    if nbits == 0:
        return bytes([n])
    a = g.adjacency_matrix().astype(bool)
    iu_j, iu_i = zip(*[(j, i) for j in range(1, n) for i in range(j)])
    rows, cols = np.asarray(iu_i), np.asarray(iu_j)
    weights = np.array([1 << (nbits - 1 - b) for b in range(nbits)], dtype=np.int64)
    best = None
    # inv[p] is the original vertex placed at position p
    chunk = []
    for inv in itertools.permutations(range(n)):
        chunk.append(inv)
        if len(chunk) == 50_000:
            best = _min_code(a, chunk, rows, cols, weights, best)
            chunk = []
    if chunk:
        best = _min_code(a, chunk, rows, cols, weights, best)
    return bytes([n]) + int(best).to_bytes((nbits + 7) // 8, "big")


def _min_code(a, chunk, rows, cols, weights, best):
    inv = np.asarray(chunk, dtype=np.int64)
    bits = a[inv[:, rows], inv[:, cols]]
    codes = bits.astype(np.int64) @ weights
    m = int(codes.min())
    return m if best is None else min(best, m)
