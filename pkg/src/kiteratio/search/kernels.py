"""Compiled inner loops for the labeled-graph scan.

A labeled graph on n vertices is an edge mask over C(n, 2) bits, bit ``b``
being the b-th upper-triangle entry in graph6 order (column-major).
"""

from __future__ import annotations

import numba
import numpy as np

from ..spectral import perron_csr


def edge_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    ei, ej = [], []
    for j in range(1, n):
        for i in range(j):
            ei.append(i)
            ej.append(j)
    return np.asarray(ei, dtype=np.int64), np.asarray(ej, dtype=np.int64)


@numba.njit(cache=True, nogil=True)
def _fill_rows(mask, ei, ej, rows):
    rows[:] = 0
    b = 0
    m = mask
    while m:
        if m & 1:
            rows[ei[b]] |= 1 << ej[b]
            rows[ej[b]] |= 1 << ei[b]
        m >>= 1
        b += 1


@numba.njit(cache=True, nogil=True)
def _connected(rows, n):
    for v in range(n):
        if rows[v] == 0 and n > 1:
            return False
    full = (1 << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in range(n):
            if frontier >> v & 1:
                nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


@numba.njit(cache=True, nogil=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@numba.njit(cache=True, nogil=True)
def connected_masks(n, lo, hi, ei, ej):
    """Edge masks in [lo, hi) whose graph is connected."""
    rows = np.zeros(n, dtype=np.int64)
    out = np.empty(hi - lo, dtype=np.int64)
    k = 0
    for mask in range(lo, hi):
        _fill_rows(mask, ei, ej, rows)
        if _connected(rows, n):
            out[k] = mask
            k += 1
    return out[:k]


@numba.njit(cache=True, nogil=True)
def extremal_chunk(n, lo, hi, ei, ej, tol, max_iter, degree_sorted, window):
    """Scan masks [lo, hi), keeping every connected graph whose log-ratio is
    within ``window`` of the chunk maximum.

    With ``degree_sorted`` only labelings with non-increasing degrees are
    solved; every isomorphism class has such a labeling, so the maximum is
    unchanged. A solve that does not converge or yields a non-positive
    vector counts as a failure. Returns (connected, solved, failures, max_residual,
    cand_masks, cand_logs).
    """
    rows = np.zeros(n, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    indices = np.zeros(n * (n - 1), dtype=np.int64)
    cap = 64
    cand_m = np.empty(cap, dtype=np.int64)
    cand_l = np.empty(cap, dtype=np.float64)
    ncand = 0
    best = -1.0
    connected = 0
    solved = 0
    failures = 0
    max_res = 0.0
    for mask in range(lo, hi):
        _fill_rows(mask, ei, ej, rows)
        if not _connected(rows, n):
            continue
        connected += 1
        for v in range(n):
            deg[v] = _popcount(rows[v])
        if degree_sorted:
            ok = True
            for v in range(1, n):
                if deg[v] > deg[v - 1]:
                    ok = False
                    break
            if not ok:
                continue
        p = 0
        for v in range(n):
            indptr[v] = p
            for u in range(n):
                if rows[v] >> u & 1:
                    indices[p] = u
                    p += 1
        indptr[n] = p
        lam, x, res, its = perron_csr(indptr, indices[:p], tol, max_iter)
        solved += 1
        if its < 0:
            failures += 1
            continue
        xmax = x.max()
        xmin = x.min()
        if xmin <= 0.0:
            failures += 1
            continue
        if res > max_res:
            max_res = res
        lg = np.log(xmax) - np.log(xmin)
        if lg < best - window:
            continue
        if lg > best:
            best = lg
            k = 0
            for c in range(ncand):
                if cand_l[c] >= best - window:
                    cand_m[k] = cand_m[c]
                    cand_l[k] = cand_l[c]
                    k += 1
            ncand = k
        if ncand == cap:
            cap *= 2
            nm = np.empty(cap, dtype=np.int64)
            nl = np.empty(cap, dtype=np.float64)
            nm[:ncand] = cand_m[:ncand]
            nl[:ncand] = cand_l[:ncand]
            cand_m = nm
            cand_l = nl
        cand_m[ncand] = mask
        cand_l[ncand] = lg
        ncand += 1
    return connected, solved, failures, max_res, cand_m[:ncand].copy(), cand_l[:ncand].copy()
