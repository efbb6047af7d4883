"""Invariant suites, run from the command line via ``verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .closedform import (
    kite_lambda_bounds,
    pendant_path_gamma,
    sigma_of_lambda,
    sigma_series,
)
from .graph import Graph, make_kite
from .search.extremal import scan_labeled
from .search.structure import neighbourhood_sums, shortest_path
from .spectral import DEFAULT_TOL, principal_eigenpair

SUITES = ("lemma1", "lemma2", "lemma7", "sigma-series")
PATH_BOUND_SLACK = 1e-8
INTERVAL_MARGIN = 1e-9
# Catalan numbers: coefficients of lam^-(2k+1) in lam - sigma
CATALAN = (1, 1, 2, 5, 14, 42)


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    margin: float
    cases: int = 1
    detail: str = ""


def path_factor(j: int, lambda1: float) -> float:
    """u_{j-1}(lambda1): the bound factor for a path prefix of j vertices.

    Equal to f(sigma, j) when lambda1 >= 2; below 2 the same recurrence is
    run directly (it stays positive along any path prefix of a graph whose
    spectral radius is lambda1).
    """
    if lambda1 >= 2.0:
        return math.exp(pendant_path_gamma(j, lambda1))
    prev, cur = 1.0, lambda1
    if j == 1:
        return 1.0
    for _ in range(j - 2):
        prev, cur = cur, lambda1 * cur - prev
    return cur


def is_pendant_prefix(g: Graph, path: list[int], j: int) -> bool:
    """Whether path[0..j-1] is a pendant path (the path itself is induced)."""
    if j < 2 or g.degree(path[0]) != 1:
        return False
    return all(g.degree(v) == 2 for v in path[1:j - 1])


def path_bound_check(g: Graph, tol: float = DEFAULT_TOL) -> tuple[float, float, int]:
    """(worst bound margin, worst equality gap on pendant prefixes, prefixes checked)."""
    spec = principal_eigenpair(g, tol)
    # exact extremes: a near-tied stand-in for x_1 would shift the j=1 bound
    x1, xk = int(np.argmin(spec.v)), int(np.argmax(spec.v))
    path = shortest_path(g, x1, xk) if x1 != xk else [x1]
    gamma = spec.gamma
    worst, gap = math.inf, 0.0
    for j in range(1, len(path) + 1):
        bound = path_factor(j, spec.lambda1) / spec.v[path[j - 1]]
        worst = min(worst, bound - gamma)
        if is_pendant_prefix(g, path, j):
            gap = max(gap, abs(bound - gamma))
    return worst, gap, len(path)


def suite_path_bound(max_n: int = 6, tol: float = DEFAULT_TOL) -> list[CheckResult]:
    out = []
    for n in range(3, max_n + 1):
        acc = {"worst": math.inf, "gap": 0.0, "graphs": 0}

        def consume(g, acc=acc):
            w, gp, _ = path_bound_check(g, tol)
            acc["worst"] = min(acc["worst"], w)
            acc["gap"] = max(acc["gap"], gp)
            acc["graphs"] += 1

        scan_labeled(n, consume)
        out.append(CheckResult("lemma1", f"bound n={n}", bool(acc["worst"] >= -PATH_BOUND_SLACK),
                               float(acc["worst"]), acc["graphs"]))
        out.append(CheckResult("lemma1", f"pendant equality n={n}", bool(acc["gap"] <= PATH_BOUND_SLACK),
                               float(PATH_BOUND_SLACK - acc["gap"]), acc["graphs"]))
    return out


def suite_kite_interval(tol: float = DEFAULT_TOL, r_max: int = 10, s_max: int = 30) -> list[CheckResult]:
    worst, cases, where = math.inf, 0, ""
    for s in range(3, s_max + 1):
        lo, hi = kite_lambda_bounds(s)
        for r in range(2, r_max + 1):
            if r + s - 1 > 64:
                continue
            lam = principal_eigenpair(make_kite(r, s), tol).lambda1
            margin = min(lam - lo, hi - lam)
            cases += 1
            if margin < worst:
                worst, where = margin, f"r={r} s={s}"
    return [CheckResult("lemma2", "kite interval", worst > INTERVAL_MARGIN, worst, cases, where)]


def suite_neighbourhood_sums(tol: float = DEFAULT_TOL, r_max: int = 10, s_max: int = 15) -> list[CheckResult]:
    worst, cases, subsets, ok_all = math.inf, 0, 0, True
    for r in range(2, r_max + 1):
        for s in range(3, s_max + 1):
            g = make_kite(r, s)
            spec = principal_eigenpair(g, tol)
            nb = g.neighbors(spec.max_vertex)
            ok, checked, margin = neighbourhood_sums(spec.v[nb])
            ok_all &= ok
            worst = min(worst, margin)
            subsets += checked
            cases += 1
    return [CheckResult("lemma7", "neighbourhood subset sums", ok_all, worst, cases,
                        f"{subsets} subsets")]


def sigma_tail_bound(lambda1: float, order: int) -> float:
    """Bound on the truncation error of sigma_series: first omitted term
    times 1/(1 - 4/lam^2), since consecutive Catalan numbers grow by < 4."""
    return CATALAN[order] * lambda1 ** (-(2 * order + 1)) / (1.0 - 4.0 / lambda1 ** 2)


def suite_sigma_series(lambdas=(3.0, 5.0, 10.0, 100.0, 1000.0)) -> list[CheckResult]:
    out = []
    for order in (1, 2, 3):
        for lam in lambdas:
            err = abs(sigma_series(lam, order) - sigma_of_lambda(lam).sigma)
            # rounding floor: both sides are O(lam) floats
            bound = sigma_tail_bound(lam, order) + 4 * np.finfo(float).eps * lam
            out.append(CheckResult("sigma-series", f"order={order} lambda={lam:g}", bool(err <= bound),
                                   float(bound - err), 1,
                                   f"err={err:.3e} scaled={err * lam ** (2 * order + 1):.4g}"))
    return out


def run_suite(name: str, tol: float = DEFAULT_TOL) -> list[CheckResult]:
    if name == "all":
        return [c for s in SUITES for c in run_suite(s, tol)]
    if name == "lemma1":
        return suite_path_bound(tol=tol)
    if name == "lemma2":
        return suite_kite_interval(tol)
    if name == "lemma7":
        return suite_neighbourhood_sums(tol)
    if name == "sigma-series":
        return suite_sigma_series()
    raise KeyError(name)
