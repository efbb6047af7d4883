"""Pendant-path algebra: sigma, the u_i recurrence, and log-space kite ratios.

Along a pendant path the Perron entries satisfy ``u_{i+1} = lam*u_i - u_{i-1}``
with ``u_0 = 1, u_1 = lam``. Writing ``lam = sigma + 1/sigma`` (``sigma >= 1``)
gives ``u_i = (sigma^{i+1} - sigma^{-i-1}) / (sigma - 1/sigma)``, and the ratio
between the two ends of a pendant path on ``j`` vertices is
``f(sigma, j) = u_{j-1}``. These grow like ``sigma^j`` so every comparison of
kite ratios is done on logarithms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import MAX_VERTICES, KiteParams, make_kite
from .spectral import DEFAULT_TOL, principal_eigenpair

LOG2 = math.log(2.0)
DEGENERATE_SIGMA = 1e-9


class KiteBoundsError(ArithmeticError):
    """A kite spectral radius landed outside its known bracketing interval."""


def _check_lambda(lambda1: float) -> None:
    if not lambda1 >= 2.0:
        raise ValueError(f"lambda1 must be >= 2, got {lambda1!r}")


@dataclass(frozen=True)
class SigmaValue:
    lambda1: float
    sigma: float


def sigma_of_lambda(lambda1: float) -> SigmaValue:
    """Larger root of ``x^2 - lambda1*x + 1``."""
    _check_lambda(lambda1)
    disc = (lambda1 - 2.0) * (lambda1 + 2.0)
    return SigmaValue(lambda1, 0.5 * (lambda1 + math.sqrt(disc)))


def _theta(lambda1: float) -> float:
    """log(sigma), accurate near lambda1 = 2."""
    e = 0.5 * lambda1 - 1.0
    return math.log1p(e + math.sqrt(e * (2.0 + e)))


def _logsinh(x: float) -> float:
    if x > 20.0:
        return x - LOG2 + math.log1p(-math.exp(-2.0 * x))
    return math.log(math.sinh(x))


def cheb_u(i: int, lambda1: float) -> float:
    """u_i by forward recurrence. Raises OverflowError past float range."""
    _check_lambda(lambda1)
    if i < 0:
        raise ValueError("index must be non-negative")
    prev, cur = 1.0, lambda1
    if i == 0:
        return prev
    for _ in range(i - 1):
        prev, cur = cur, lambda1 * cur - prev
        if math.isinf(cur):
            raise OverflowError(f"u_{i}({lambda1}) exceeds float range; use log_cheb_u")
    return cur


def cheb_u_closed(i: int, lambda1: float) -> float:
    """u_i from the sigma closed form; ``i + 1`` in the lambda1 -> 2 limit."""
    sigma = sigma_of_lambda(lambda1).sigma
    if abs(sigma - 1.0) < DEGENERATE_SIGMA:
        return float(i + 1)
    return (sigma ** (i + 1) - sigma ** (-i - 1)) / (sigma - 1.0 / sigma)


def log_cheb_u(i: int, lambda1: float) -> float:
    return pendant_path_gamma(i + 1, lambda1)


def pendant_path_gamma(j: int, lambda1: float) -> float:
    """log f(sigma, j) = log of (sigma^j - sigma^-j)/(sigma - 1/sigma).

    This is the exact end-to-end ratio along a pendant path on ``j`` vertices.
    """
    _check_lambda(lambda1)
    if j < 1:
        raise ValueError("path length must be >= 1")
    if j == 1:
        return 0.0
    theta = _theta(lambda1)
    if theta == 0.0:
        return math.log(j)
    return _logsinh(j * theta) - _logsinh(theta)


def kite_lambda_bounds(s: int) -> tuple[float, float]:
    """Open interval containing lambda1(P_r . K_s) for every r >= 2."""
    if s < 3:
        raise ValueError(f"clique size must be >= 3, got {s}")
    return s - 1 + 1.0 / (s * (s - 1)), s - 1 + 1.0 / (s - 1) ** 2


SIGMA_SERIES_COEFFS = (1.0, 1.0, 2.0)


def sigma_series(lambda1: float, order: int) -> float:
    """Truncated large-lambda expansion ``lam - lam^-1 - lam^-3 - 2 lam^-5``.

    ``order`` counts the correction terms kept (1..3).
    """
    if order not in (1, 2, 3):
        raise ValueError(f"unsupported order {order}; expected 1, 2 or 3")
    if lambda1 < 3.0:
        raise ValueError("sigma_series needs lambda1 >= 3")
    out = lambda1
    for k in range(order):
        out -= SIGMA_SERIES_COEFFS[k] * lambda1 ** (-(2 * k + 1))
    return out


def kite_excess_bounds(s: int) -> tuple[float, float]:
    """The same interval as kite_lambda_bounds, shifted by s - 1."""
    kite_lambda_bounds(s)
    return 1.0 / (s * (s - 1)), 1.0 / (s - 1) ** 2


def _kite_secular(eps: float, r: int, s: int) -> float:
    # attachment-vertex equation divided by its entry, with lam = s - 1 + eps;
    # clique twins carry a/(1 + eps), the path neighbour u_{r-2}/u_{r-1}
    lam = s - 1 + eps
    ratio = math.exp(pendant_path_gamma(r - 1, lam) - pendant_path_gamma(r, lam))
    return eps + (s - 1) * eps / (1.0 + eps) - ratio


def kite_excess_scalar(r: int, s: int) -> float:
    """lambda1(P_r . K_s) - (s - 1) by bisection of the reduced scalar equation.

    Working with the excess keeps full relative precision at large s, where
    lambda1 sits within an ulp of its lower bound.
    """
    if r < 2 or s < 3:
        raise ValueError(f"kite parameters r={r}, s={s} out of range (r >= 2, s >= 3)")
    lo, hi = kite_excess_bounds(s)
    f_lo, f_hi = _kite_secular(lo, r, s), _kite_secular(hi, r, s)
    if not (f_lo < 0.0 < f_hi):
        raise KiteBoundsError(f"no sign change for r={r}, s={s}: F(lo)={f_lo}, F(hi)={f_hi}")
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _kite_secular(mid, r, s) < 0.0:
            lo = mid
        else:
            hi = mid
    return lo if abs(_kite_secular(lo, r, s)) <= abs(_kite_secular(hi, r, s)) else hi


def kite_lambda_scalar(r: int, s: int) -> float:
    return s - 1 + kite_excess_scalar(r, s)


def kite_lambda(r: int, s: int, tol: float = DEFAULT_TOL) -> float:
    """lambda1(P_r . K_s), checked against the bracketing interval.

    Uses the eigensolver when the kite fits in a Graph, else the scalar
    reduction.
    """
    if r < 2 or s < 3:
        raise ValueError(f"kite parameters r={r}, s={s} out of range (r >= 2, s >= 3)")
    if r + s - 1 <= MAX_VERTICES:
        lam = principal_eigenpair(make_kite(KiteParams(r, s)), tol).lambda1
        eps = lam - (s - 1)
    else:
        eps = kite_excess_scalar(r, s)
        lam = s - 1 + eps
    lo, hi = kite_excess_bounds(s)
    if not lo < eps < hi:
        raise KiteBoundsError(f"lambda1(P_{r}.K_{s}) = {s - 1} + {eps!r} outside (+{lo!r}, +{hi!r})")
    return lam


def kite_gamma(r: int, s: int, tol: float = DEFAULT_TOL) -> float:
    """log of the principal ratio of P_r . K_s."""
    return pendant_path_gamma(r, kite_lambda(r, s, tol))
