"""Finite difference weights on arbitrary node sets."""

from __future__ import annotations

import numpy as np


def fd_weights(x0: float, x: np.ndarray, m: int) -> np.ndarray:
    """Weights w with sum w_j f(x_j) ~ f^(m)(x0) for nodes ``x``.

    Fornberg's recursive algorithm; exact for polynomials of degree
    ``len(x) - 1``, so the stencil order is ``len(x) - m`` on smooth data.
    """
    x = np.asarray(x, dtype=float)
    n = len(x)
    if m >= n:
        raise ValueError(f"need more than {m} nodes for derivative order {m}")
    c = np.zeros((n, m + 1))
    c[0, 0] = 1.0
    c1 = 1.0
    c4 = x[0] - x0
    for i in range(1, n):
        mn = min(i, m)
        c2 = 1.0
        c5 = c4
        c4 = x[i] - x0
        for j in range(i):
            c3 = x[i] - x[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i, k] = c1 * (k * c[i - 1, k - 1] - c5 * c[i - 1, k]) / c2
                c[i, 0] = -c1 * c5 * c[i - 1, 0] / c2
            for k in range(mn, 0, -1):
                c[j, k] = (c4 * c[j, k] - k * c[j, k - 1]) / c3
            c[j, 0] = c4 * c[j, 0] / c3
        c1 = c2
    return c[:, m]


def derivative_matrix(x: np.ndarray, m: int, width: int) -> np.ndarray:
    """Dense differentiation matrix for f^(m) using ``width``-node stencils.

    Stencils are centred away from the ends and shifted one-sidedly near
    them, so rows stay full width everywhere.
    """
    x = np.asarray(x, dtype=float)
    n = len(x)
    if width > n:
        raise ValueError("stencil wider than the grid")
    d = np.zeros((n, n))
    half = width // 2
    for i in range(n):
        lo = min(max(i - half, 0), n - width)
        idx = np.arange(lo, lo + width)
        d[i, idx] = fd_weights(x[i], x[idx], m)
    return d
