"""Bracketed scalar root finding."""

from __future__ import annotations

import math
from typing import Callable

from scipy.optimize import brentq


class BracketError(ValueError):
    """The supplied interval does not bracket a sign change."""


def find_root(
    f: Callable[[float], float],
    bracket: tuple[float, float],
    tol: float = 1e-12,
) -> float:
    """Root of ``f`` inside ``bracket`` by a bracket-preserving hybrid.

    The bracket must produce a sign change; the returned root satisfies
    ``|f(r)| <= tol`` or lies in a sub-bracket of width ``<= tol``.

    Raises
    ------
    BracketError
        If ``f(a) * f(b) > 0``.
    ValueError
        If an endpoint evaluation is not finite.
    """
    a, b = map(float, bracket)
    if not a < b:
        raise ValueError(f"invalid bracket [{a}, {b}]")
    fa, fb = f(a), f(b)
    for x, fx in ((a, fa), (b, fb)):
        if not math.isfinite(fx):
            raise ValueError(f"f({x}) is not finite")
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0.0:
        raise BracketError(f"no sign change on [{a}, {b}]: f(a)={fa:.3g}, f(b)={fb:.3g}")
    r = brentq(f, a, b, xtol=tol, rtol=8.0 * 2.3e-16, maxiter=200)
    return float(min(max(r, a), b))
