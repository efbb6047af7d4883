"""Best path/clique split for kites on n vertices."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..closedform import kite_gamma
from ..spectral import DEFAULT_TOL


@dataclass(frozen=True)
class KiteOptimum:
    n: int
    best_r: int
    best_s: int
    log_gamma: float
    table: list[tuple[int, int, float]]  # (s, r, log gamma)

    @property
    def law_ratio(self) -> float:
        """s* / (n / log n)."""
        return self.best_s * math.log(self.n) / self.n


def kite_optimize(n: int, tol: float = DEFAULT_TOL) -> KiteOptimum:
    """Maximize log gamma(P_r . K_s) over r + s - 1 = n, r >= 2, s >= 3.

    The table holds one row per clique size s = 3..n-1. Ties go to the
    smaller s.
    """
    if n < 5:
        raise ValueError(f"kite optimization needs n >= 5, got {n}")
    table = []
    best = None
    for s in range(3, n):
        r = n - s + 1
        lg = kite_gamma(r, s, tol)
        table.append((s, r, lg))
        if best is None or lg > best[2]:
            best = (s, r, lg)
    s, r, lg = best
    return KiteOptimum(n, r, s, lg, table)
