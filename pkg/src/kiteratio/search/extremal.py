"""Exhaustive search for the connected graph of largest principal ratio."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

import networkx as nx

from ..formats import graph6_encode, read_graph6_lines
from ..graph import Graph, KiteParams, canonical_code, is_connected
from ..spectral import DEFAULT_TOL, MAX_ITER, principal_eigenpair
from . import kernels
from .structure import StructureReport, is_kite, structure_check

log = logging.getLogger(__name__)

SCAN_MIN_N, SCAN_MAX_N = 3, 8
# two graphs whose log-ratios differ by less than this are reported as tied;
# at tol = 1e-12 and n <= 8 the residual-induced error is below 1e-10
NEAR_TIE_WINDOW = 1e-9
CHUNK_BITS = 20


class SearchError(ValueError):
    pass


@dataclass
class ScanStats:
    n: int
    masks: int = 0
    connected: int = 0
    solved: int = 0


@dataclass
class IngestStats:
    lines: int = 0
    consumed: int = 0
    disconnected: int = 0
    diagnostics: list[str] = field(default_factory=list)


def graph_from_mask(n: int, mask: int) -> Graph:
    ei, ej = kernels.edge_tables(n)
    return Graph.from_edges(n, ((int(ei[b]), int(ej[b])) for b in range(len(ei)) if mask >> b & 1))


def _check_scan_n(n: int) -> int:
    if not SCAN_MIN_N <= n <= SCAN_MAX_N:
        raise SearchError(f"labeled scan supports {SCAN_MIN_N} <= n <= {SCAN_MAX_N}, got {n}")
    return n * (n - 1) // 2


def _chunks(total: int, bits: int = CHUNK_BITS) -> list[tuple[int, int]]:
    step = 1 << bits
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def scan_labeled(n: int, consumer: Callable[[Graph], None]) -> ScanStats:
    """Feed every connected labeled graph on n vertices to ``consumer``, once each."""
    nbits = _check_scan_n(n)
    ei, ej = kernels.edge_tables(n)
    stats = ScanStats(n)
    for lo, hi in _chunks(1 << nbits):
        masks = kernels.connected_masks(n, lo, hi, ei, ej)
        stats.masks += hi - lo
        stats.connected += len(masks)
        for mask in masks:
            consumer(graph_from_mask(n, int(mask)))
    return stats


def ingest_graph6(stream: Iterable[str], consumer: Callable[[Graph], None]) -> IngestStats:
    """Decode graph6 lines and feed the connected ones to ``consumer``.

    Malformed or disconnected lines are recorded with their line numbers and
    skipped.
    """
    stats = IngestStats()
    for lineno, item in read_graph6_lines(stream):
        stats.lines += 1
        if isinstance(item, Exception):
            stats.diagnostics.append(f"line {lineno}: {item}")
            continue
        if not is_connected(item):
            stats.disconnected += 1
            stats.diagnostics.append(f"line {lineno}: disconnected graph skipped")
            continue
        consumer(item)
        stats.consumed += 1
    return stats


@dataclass
class Candidates:
    """Graphs within the near-tie window of the best log-ratio seen.

    ``merge`` is associative and commutative, so chunk results can be
    combined in any grouping or order.
    """

    best: float = -math.inf
    items: list[tuple[int, float]] = field(default_factory=list)
    window: float = NEAR_TIE_WINDOW

    def add(self, key: int, log_gamma: float) -> None:
        self.merge(Candidates(log_gamma, [(key, log_gamma)], self.window))

    def merge(self, other: Candidates) -> Candidates:
        best = max(self.best, other.best)
        items = [it for it in self.items + other.items if it[1] >= best - self.window]
        self.best, self.items = best, sorted(items)
        return self


@dataclass
class SearchResult:
    n: int
    best: Graph
    log_gamma: float
    kite: KiteParams | None
    audit: StructureReport
    graphs_scanned: int
    graphs_solved: int
    lambda1: float
    residual: float
    near_tie: bool = False
    tied: list[str] = field(default_factory=list)
    source: str = "scan"
    # largest certified residual over every graph solved during the search
    max_residual: float = 0.0

    @property
    def gamma(self) -> float:
        return math.exp(self.log_gamma)


def _scan_chunk(args):
    n, lo, hi, ei, ej, tol, degree_sorted, window = args
    return kernels.extremal_chunk(n, lo, hi, ei, ej, tol, MAX_ITER, degree_sorted, window)


def _scan_candidates(n, tol, threads, degree_sorted, window):
    nbits = _check_scan_n(n)
    ei, ej = kernels.edge_tables(n)
    jobs = [(n, lo, hi, ei, ej, tol, degree_sorted, window) for lo, hi in _chunks(1 << nbits)]
    cands = Candidates(window=window)
    connected = solved = 0
    max_residual = 0.0
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        for conn, sol, fails, max_res, masks, logs in pool.map(_scan_chunk, jobs):
            if fails:
                raise SearchError(f"{fails} eigensolves failed to converge at tol {tol}")
            connected += conn
            solved += sol
            max_residual = max(max_residual, float(max_res))
            cands.merge(Candidates(float(logs.max()) if len(logs) else -math.inf,
                                   [(int(m), float(lg)) for m, lg in zip(masks, logs)], window))
    graphs = {m: graph_from_mask(n, m) for m, _ in cands.items}
    return cands, graphs, connected, solved, max_residual


def _stream_candidates(graphs: Iterable[Graph], tol, window):
    cands = Candidates(window=window)
    store = {}
    count = 0
    max_residual = 0.0
    for i, g in enumerate(graphs):
        count += 1
        spec = principal_eigenpair(g, tol)
        max_residual = max(max_residual, spec.residual)
        lg = spec.log_gamma
        if lg >= cands.best - window:
            store[i] = g
            cands.add(i, lg)
    graphs = {i: store[i] for i, _ in cands.items}
    return cands, graphs, count, max_residual


def _iso_classes(cands: Candidates, graphs: dict) -> list[tuple[float, list[int]]]:
    classes: list[tuple[nx.Graph, float, list[int]]] = []
    for key, lg in cands.items:
        h = nx.Graph(graphs[key].edges())
        h.add_nodes_from(range(graphs[key].n))
        for i, (rep, best, keys) in enumerate(classes):
            if nx.is_isomorphic(rep, h):
                keys.append(key)
                classes[i] = (rep, max(best, lg), keys)
                break
        else:
            classes.append((h, lg, [key]))
    return [(lg, keys) for _, lg, keys in classes]


def find_extremal(
    n: int | None = None,
    source: str | Iterable[Graph] = "scan",
    *,
    tol: float = DEFAULT_TOL,
    threads: int = 1,
    degree_sorted: bool = True,
    window: float = NEAR_TIE_WINDOW,
    seed: int = 0,
) -> SearchResult:
    """The connected graph on n vertices with the largest principal ratio.

    ``source`` is ``"scan"`` (all labeled graphs, 3 <= n <= 8) or an iterable
    of graphs, e.g. from :func:`ingest_graph6`. Graphs whose log-ratios fall
    within ``window`` of the maximum are treated as tied; among tied
    isomorphism classes the one with the smaller canonical code wins and the
    tie is flagged.
    """
    if isinstance(source, str):
        if source != "scan":
            raise SearchError(f"unknown source {source!r}")
        if n is None:
            raise SearchError("labeled scan needs n")
        cands, graphs, scanned, solved, max_res = _scan_candidates(n, tol, threads, degree_sorted, window)
    else:
        cands, graphs, scanned, max_res = _stream_candidates(source, tol, window)
        solved = scanned
    if not cands.items:
        raise SearchError("empty source: no connected graphs to maximize over")

    classes = _iso_classes(cands, graphs)
    top = max(lg for lg, _ in classes)
    tied = [(lg, keys) for lg, keys in classes if lg >= top - window]
    if len(tied) > 1:
        coded = sorted((canonical_code(graphs[min(keys)]), min(keys)) for _, keys in tied)
        winner_key = coded[0][1]
        tied_g6 = [graph6_encode(graphs[k]) for _, k in coded]
        log.warning("near tie between %d isomorphism classes: %s", len(tied), tied_g6)
    else:
        winner_key = min(tied[0][1])
        tied_g6 = []
    best = graphs[winner_key]
    if n is not None and best.n != n:
        raise SearchError(f"source produced a graph on {best.n} vertices, expected {n}")

    spec = principal_eigenpair(best, tol)
    return SearchResult(
        n=best.n,
        best=best,
        log_gamma=spec.log_gamma,
        kite=is_kite(best),
        audit=structure_check(best, spec, tol, seed=seed),
        graphs_scanned=scanned,
        graphs_solved=solved,
        lambda1=spec.lambda1,
        residual=spec.residual,
        near_tie=len(tied) > 1,
        tied=tied_g6,
        source="scan" if isinstance(source, str) else "stream",
        max_residual=max(max_res, spec.residual),
    )
