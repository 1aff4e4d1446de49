"""Implicit time stepping on banded spatial operators.

Residual callables passed here must be complex-safe: evaluating them on a
complex state must propagate imaginary parts linearly (no abs/comparisons
on the state), so the Jacobian can be formed by complex-step columns to
machine accuracy.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np
from scipy.linalg import solve_banded

GAMMA = 2.0 - math.sqrt(2.0)


class ConvergenceError(ArithmeticError):
    """Newton iteration failed to reach tolerance."""


def banded_jacobian_cs(
    res: Callable[[np.ndarray], np.ndarray],
    u: np.ndarray,
    hb: int,
    eps: float = 1e-30,
) -> np.ndarray:
    """Banded Jacobian of ``res`` at ``u`` in LAPACK band storage.

    ``hb`` is the half bandwidth: res_i depends only on u_j with
    |i - j| <= hb.  Columns a stride 2*hb+1 apart touch disjoint rows, so
    one complex evaluation resolves a whole colour group.
    """
    u = np.asarray(u, dtype=float)
    n = len(u)
    width = 2 * hb + 1
    jac = np.zeros((width, n))
    base = u.astype(complex)
    for colour in range(min(width, n)):
        cols = np.arange(colour, n, width)
        pert = base.copy()
        pert[cols] += 1j * eps
        im = np.imag(np.asarray(res(pert))) / eps
        for j in cols:
            lo, hi = max(0, j - hb), min(n, j + hb + 1)
            jac[hb + np.arange(lo, hi) - j, j] = im[lo:hi]
    return jac


def newton_banded(
    res: Callable[[np.ndarray], np.ndarray],
    u0: np.ndarray,
    hb: int,
    tol: float = 1e-11,
    maxiter: int = 30,
) -> np.ndarray:
    """Solve res(u) = 0 by damped Newton with a banded complex-step Jacobian."""
    u = np.asarray(u0, dtype=float).copy()
    norm0 = None
    for _ in range(maxiter):
        r = np.asarray(res(u), dtype=float)
        nr = np.max(np.abs(r))
        if norm0 is None:
            norm0 = max(nr, 1.0)
        if nr <= tol:
            return u
        jac = banded_jacobian_cs(res, u, hb)
        du = solve_banded((hb, hb), jac, -r)
        lam = 1.0
        for _ in range(10):
            trial = np.asarray(res(u + lam * du), dtype=float)
            if np.max(np.abs(trial)) < nr:
                break
            lam *= 0.5
        u = u + lam * du
    r = np.asarray(res(u), dtype=float)
    nr = np.max(np.abs(r))
    if nr <= tol * 100 and nr <= 1e-9 * norm0:
        return u
    raise ConvergenceError(f"newton stalled at residual {nr:.3e} (tol {tol:.1e})")


def step_bdf1(
    rhs: Callable[[np.ndarray], np.ndarray],
    u: np.ndarray,
    dt: float,
    hb: int,
    tol: float = 1e-11,
) -> np.ndarray:
    """One backward Euler step for u' = rhs(u)."""

    def res(w):
        return w - u - dt * rhs(w)

    guess = u + dt * np.asarray(rhs(u + 0j)).real
    return newton_banded(res, guess, hb, tol)


def step_trbdf2(
    rhs: Callable[[np.ndarray], np.ndarray],
    u: np.ndarray,
    dt: float,
    hb: int,
    tol: float = 1e-11,
) -> np.ndarray:
    """One TR-BDF2 step for u' = rhs(u): second order and L-stable.

    Trapezoidal half to t + GAMMA*dt, then two-point BDF2 to t + dt.  With
    GAMMA = 2 - sqrt(2) both stages share the implicit coefficient
    1 - 1/sqrt(2).
    """
    u = np.asarray(u, dtype=float)
    f0 = np.asarray(rhs(u.astype(complex))).real
    c = 0.5 * GAMMA

    def res_tr(w):
        return w - u - c * dt * (rhs(w) + f0)

    ug = newton_banded(res_tr, u + GAMMA * dt * f0, hb, tol)

    a1 = 1.0 / (GAMMA * (2.0 - GAMMA))
    a0 = (1.0 - GAMMA) ** 2 / (GAMMA * (2.0 - GAMMA))
    cb = (1.0 - GAMMA) / (2.0 - GAMMA)

    def res_bdf(w):
        return w - a1 * ug + a0 * u - cb * dt * rhs(w)

    return newton_banded(res_bdf, ug, hb, tol)
