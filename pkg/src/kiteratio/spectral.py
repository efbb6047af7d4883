"""Certified Perron eigenpairs and the principal ratio."""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .graph import Graph, separated_pair

DEFAULT_TOL = 1e-12
MAX_ITER = 1_000_000
# entries this close to the extreme value count as tied; lowest index wins
TIE_TOL = 1e-9


class DisconnectedGraphError(ValueError):
    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"graph is disconnected: no path between vertices {pair[0]} and {pair[1]}")


class ConvergenceError(RuntimeError):
    pass


@numba.njit(cache=True, nogil=True)
def perron_csr(indptr, indices, tol, max_iter):
    """Power iteration on A + I from the all-ones vector.

    Stops once the max-norm residual of A x - lambda x is <= tol and every
    entry's residual is also <= tol relative to lambda times that entry:
    gamma divides by the smallest entry, which can be many orders below 1.
    The residual tested is the one returned. Returns (lambda1, v, residual,
    iterations); ``iterations`` is -1 if the test never passed.
    """
    n = indptr.shape[0] - 1
    x = np.ones(n)
    ax = np.empty(n)
    lam = 0.0
    res = np.inf
    converged = False
    it = 0
    while it < max_iter:
        it += 1
        xax = 0.0
        xx = 0.0
        for i in range(n):
            acc = 0.0
            for p in range(indptr[i], indptr[i + 1]):
                acc += x[indices[p]]
            ax[i] = acc
            xax += x[i] * acc
            xx += x[i] * x[i]
        lam = xax / xx
        res = 0.0
        rel = 0.0
        for i in range(n):
            d = abs(ax[i] - lam * x[i])
            if d > res:
                res = d
            d = d / ((lam + 1.0) * x[i])
            if d > rel:
                rel = d
        if res <= tol and rel <= tol:
            converged = True
            break
        # step with the shifted matrix A + I, which keeps the iteration away
        # from -lambda1 on bipartite graphs
        ymax = 0.0
        for i in range(n):
            ax[i] += x[i]
            if ax[i] > ymax:
                ymax = ax[i]
        for i in range(n):
            x[i] = ax[i] / ymax
    return lam, x, res, (it if converged else -1)


@dataclass(frozen=True)
class SpectralData:
    lambda1: float
    v: np.ndarray
    residual: float
    gamma: float
    iterations: int = 0

    @property
    def min_vertex(self) -> int:
        """Lowest-index vertex whose entry is within TIE_TOL of the minimum."""
        return int(np.flatnonzero(self.v <= self.v.min() + TIE_TOL)[0])

    @property
    def max_vertex(self) -> int:
        return int(np.flatnonzero(self.v >= self.v.max() - TIE_TOL)[0])

    @property
    def log_gamma(self) -> float:
        return float(np.log(self.v.max()) - np.log(self.v.min()))


def principal_eigenpair(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> SpectralData:
    """Perron eigenpair of a connected graph, scaled so the largest entry is 1.

    Raises DisconnectedGraphError for disconnected input and ConvergenceError
    if the residual does not reach ``tol`` within ``max_iter`` iterations.
    """
    pair = separated_pair(g)
    if pair is not None:
        raise DisconnectedGraphError(pair)
    indptr, indices = g.csr()
    lam, v, res, its = perron_csr(indptr, indices, float(tol), int(max_iter))
    if its < 0 or res > tol:
        raise ConvergenceError(f"residual {res:.3e} above tol {tol:.1e} after {max_iter} iterations")
    v = v / v.max()
    if v.min() <= 0.0:
        raise ConvergenceError("Perron vector has a non-positive entry")
    return SpectralData(float(lam), v, float(res), float(v.max() / v.min()), int(its))


def principal_ratio(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return principal_eigenpair(g, tol).gamma


def rayleigh_quotient(g: Graph, x) -> float:
    x = np.asarray(x, dtype=np.float64)
    xx = float(x @ x)
    if xx == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    return float(x @ (g.adjacency_matrix() @ x)) / xx
