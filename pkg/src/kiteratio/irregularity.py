"""Degree- and spectrum-based irregularity measures."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

from .graph import Graph
from .spectral import DEFAULT_TOL, SpectralData, principal_eigenpair


@dataclass(frozen=True)
class IrregularityReport:
    gamma: float
    epsilon: float
    variance: float
    albertson: int
    s_measure: float

    def as_tuple(self) -> tuple:
        return (self.gamma, self.epsilon, self.variance, self.albertson, self.s_measure)

    def as_dict(self) -> dict:
        return asdict(self)


def average_degree(g: Graph) -> Fraction:
    return Fraction(2 * g.edge_count, g.n)


def epsilon_irregularity(g: Graph, tol: float = DEFAULT_TOL, spec: SpectralData | None = None) -> float:
    """lambda1 - average degree, clamped at 0 against rounding on regular graphs."""
    if spec is None:
        spec = principal_eigenpair(g, tol)
    return max(0.0, spec.lambda1 - float(average_degree(g)))


def variance(g: Graph) -> float:
    """Population variance of the degree sequence, computed exactly."""
    n, two_m = g.n, 2 * g.edge_count
    # sum (d - 2m/n)^2 = sum (n d - 2m)^2 / n^2
    return float(Fraction(sum((n * d - two_m) ** 2 for d in g.degrees()), n ** 3))


def albertson(g: Graph) -> int:
    deg = g.degrees()
    return sum(abs(deg[u] - deg[v]) for u, v in g.edges())


def s_irregularity(g: Graph) -> float:
    """Sum over vertices of |d(v) - average degree|."""
    n, two_m = g.n, 2 * g.edge_count
    return float(Fraction(sum(abs(n * d - two_m) for d in g.degrees()), n))


def report_all(g: Graph, tol: float = DEFAULT_TOL, spec: SpectralData | None = None) -> IrregularityReport:
    if spec is None:
        spec = principal_eigenpair(g, tol)
    return IrregularityReport(
        gamma=spec.gamma,
        epsilon=epsilon_irregularity(g, tol, spec),
        variance=variance(g),
        albertson=albertson(g),
        s_measure=s_irregularity(g),
    )
