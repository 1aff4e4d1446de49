"""Physicists' Hermite polynomials by three-term recurrence."""

from __future__ import annotations

import numpy as np


def hermite_eval(n: int, x):
    """H_n(x) for the physicists' family: H_{n+1} = 2x H_n - 2n H_{n-1}.

    Accepts scalar or array ``x``; returns the same shape.  The recurrence
    is evaluated forward, which is stable for this family on the real line.
    """
    if n < 0 or n != int(n):
        raise ValueError(f"degree must be a nonnegative integer, got {n}")
    n = int(n)
    x = np.asarray(x, dtype=float)
    h_prev = np.ones_like(x)
    if n == 0:
        return h_prev if h_prev.ndim else float(h_prev)
    h = 2.0 * x
    for k in range(1, n):
        h, h_prev = 2.0 * x * h - 2.0 * k * h_prev, h
    return h if h.ndim else float(h)
