"""Dense cyclic Jacobi eigensolver, kept independent of the power iteration.

Used only to cross-check ``spectral.principal_eigenpair``.
"""

from __future__ import annotations

import math

import numpy as np


def jacobi_eigh(a, tol: float = 1e-15, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and eigenvectors (columns) of a real symmetric matrix."""
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    vecs = np.eye(n)
    scale = max(np.abs(a).max(), 1.0)
    for _ in range(max_sweeps):
        off = math.sqrt(float(np.sum(np.triu(a, 1) ** 2)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap = a[p, :].copy()
                aq = a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                vp = vecs[:, p].copy()
                vq = vecs[:, q].copy()
                vecs[:, p] = c * vp - s * vq
                vecs[:, q] = s * vp + c * vq
    else:
        raise RuntimeError("Jacobi sweeps did not converge")
    w = np.diag(a).copy()
    order = np.argsort(w)
    return w[order], vecs[:, order]


def dense_perron(a) -> tuple[float, np.ndarray, float]:
    """(lambda1, Perron vector scaled to max 1, gamma) from the Jacobi solver."""
    w, vecs = jacobi_eigh(a)
    v = vecs[:, -1]
    v = v * np.sign(v[np.argmax(np.abs(v))])
    v = v / v.max()
    return float(w[-1]), v, float(v.max() / v.min())
