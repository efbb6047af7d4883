"""Measured effect of a single edge edit on lambda1, a tracked entry, and gamma."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from ..graph import Graph
from ..spectral import DEFAULT_TOL, DisconnectedGraphError, principal_eigenpair


class PerturbationError(ValueError):
    pass


@dataclass(frozen=True)
class PerturbationReport:
    edge: tuple[int, int]
    added: bool
    tracked: int
    n_for_condition: int
    lambda_before: float
    lambda_after: float
    delta1: float
    delta2: float
    gamma_before: float  # log gamma
    gamma_after: float
    increase_condition: bool
    decrease_condition: bool
    observed_increase: bool

    def as_dict(self) -> dict:
        d = asdict(self)
        d["edge"] = list(self.edge)
        return d


def perturb_analysis(
    g: Graph,
    edge: tuple[int, int],
    tracked: int,
    n_for_condition: int | None = None,
    *,
    remove: bool = False,
    tol: float = DEFAULT_TOL,
) -> PerturbationReport:
    """Solve before and after adding (or removing) ``edge``.

    delta1 and delta2 are the relative changes of lambda1 and of the tracked
    vertex's entry, both eigenvectors scaled to maximum entry 1. The two
    flags evaluate ``delta1 > 4 delta2 / n`` (predicts an increase of gamma)
    and ``delta1 exp(2 delta1 lambda1 log n) < delta2 / (3n)`` (predicts a
    decrease); they are reported next to the observed change, not enforced.
    """
    u, v = edge
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise PerturbationError(f"invalid edge {edge} for n={g.n}")
    if not 0 <= tracked < g.n:
        raise PerturbationError(f"tracked vertex {tracked} out of range")
    if remove:
        if not g.has_edge(u, v):
            raise PerturbationError(f"edge {edge} is not present")
        h = g.without_edge(u, v)
    else:
        if g.has_edge(u, v):
            raise PerturbationError(f"edge {edge} is already present")
        h = g.with_edge(u, v)
    before = principal_eigenpair(g, tol)
    try:
        after = principal_eigenpair(h, tol)
    except DisconnectedGraphError as exc:
        raise PerturbationError(f"removing {edge} disconnects the graph") from exc
    n = n_for_condition if n_for_condition is not None else g.n
    lam = before.lambda1
    d1 = after.lambda1 / lam - 1.0
    d2 = after.v[tracked] / before.v[tracked] - 1.0
    increase = d1 > 4.0 * d2 / n
    logn = math.log(n)
    # exp overflow means the left side is infinite, so the condition fails
    expo = 2.0 * d1 * lam * logn
    decrease = expo < 700.0 and d1 * math.exp(expo) < d2 / (3.0 * n)
    return PerturbationReport(
        edge=(u, v),
        added=not remove,
        tracked=tracked,
        n_for_condition=n,
        lambda_before=lam,
        lambda_after=after.lambda1,
        delta1=d1,
        delta2=d2,
        gamma_before=before.log_gamma,
        gamma_after=after.log_gamma,
        increase_condition=bool(increase),
        decrease_condition=bool(decrease),
        observed_increase=bool(after.log_gamma > before.log_gamma),
    )
