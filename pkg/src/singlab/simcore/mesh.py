"""Moving-mesh support for collapsing profiles.

Near a pinch the solution develops structure on the scale of its own
minimum, so a fixed grid loses the neck long before the interesting
regime.  The remesh rule here equidistributes a target spacing
proportional to the local solution height, clipped between a floor tied
to the current minimum and an outer cap, which keeps the node count
logarithmic in the collapse depth.
"""

from __future__ import annotations

import numpy as np


def equidistribute(
    x: np.ndarray,
    h: np.ndarray,
    delta: float,
    floor: float,
    cap: float,
) -> np.ndarray:
    """New node positions with local spacing ~ delta * clip(h, floor, cap).

    Integrates the density 1/spacing on the current mesh and places nodes
    at equal increments of its cumulative integral.  Endpoints are kept.
    """
    x = np.asarray(x, dtype=float)
    h = np.asarray(h, dtype=float)
    target = delta * np.clip(h, floor, cap)
    rho = 1.0 / target
    cum = np.concatenate(([0.0], np.cumsum(0.5 * (rho[1:] + rho[:-1]) * np.diff(x))))
    total = cum[-1]
    n_new = max(int(np.ceil(total)) + 1, 8)
    s = np.linspace(0.0, total, n_new)
    x_new = np.interp(s, cum, x)
    x_new[0], x_new[-1] = x[0], x[-1]
    return x_new


def resample(x_old: np.ndarray, u_old: np.ndarray, x_new: np.ndarray) -> np.ndarray:
    """Cubic-accurate transfer of u to a new mesh by local polynomials.

    Each new node is evaluated from the 4-point Lagrange interpolant of
    the bracketing old nodes (quadratic at the ends), which keeps the
    remesh error below the spatial truncation error of the solver.
    """
    x_old = np.asarray(x_old, dtype=float)
    u_old = np.asarray(u_old, dtype=float)
    n = len(x_old)
    idx = np.searchsorted(x_old, x_new, side="right") - 1
    idx = np.clip(idx, 0, n - 2)
    out = np.empty_like(np.asarray(x_new, dtype=float))
    for k, (xi, i) in enumerate(zip(x_new, idx)):
        lo = min(max(i - 1, 0), n - 4)
        xs = x_old[lo : lo + 4]
        us = u_old[lo : lo + 4]
        val = 0.0
        for a in range(4):
            w = 1.0
            for b in range(4):
                if a != b:
                    w *= (xi - xs[b]) / (xs[a] - xs[b])
            val += w * us[a]
        out[k] = val
    return out
