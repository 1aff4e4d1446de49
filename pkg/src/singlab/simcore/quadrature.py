"""Adaptive quadrature with endpoint singularity weakening."""

from __future__ import annotations

import warnings
from typing import Callable

from scipy.integrate import IntegrationWarning, quad


def _half_integral(
    f: Callable[[float], float],
    a: float,
    b: float,
    p: float,
    tol: float,
) -> float:
    """Integrate f on [a, b] where f ~ (x - a)^p near a (p > -1).

    The substitution x = a + s^q with q = 1/(1 + p) maps the endpoint
    behaviour to s^(q(1+p)-1) = s^0, so the transformed integrand is
    bounded and the panel quadrature converges at its nominal rate.
    """
    if p <= -1.0:
        raise ValueError(f"endpoint order {p} is not integrable")
    if p == 0.0:
        return _quad_checked(f, a, b, tol)
    q = 1.0 / (1.0 + p)
    smax = (b - a) ** (1.0 / q)

    def g(s: float) -> float:
        x = a + s**q
        if x <= a:
            return 0.0
        return q * s ** (q - 1.0) * f(x)

    return _quad_checked(g, 0.0, smax, tol)


def _quad_checked(f, a: float, b: float, tol: float) -> float:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        val, err = quad(f, a, b, epsabs=tol, epsrel=tol, limit=200)
    if err > 100.0 * tol and err > 1e-10 * abs(val):
        raise ArithmeticError(f"quadrature error estimate {err:.2e} exceeds tol {tol:.1e}")
    return val


def integrate_adaptive(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-10,
    endpoint_orders: tuple[float, float] = (0.0, 0.0),
) -> float:
    """Definite integral of ``f`` on [a, b] to absolute tolerance ``tol``.

    ``endpoint_orders = (p_a, p_b)`` states the power-law behaviour of the
    integrand at each endpoint: f ~ (x-a)^p_a near a and f ~ (b-x)^p_b
    near b.  Orders are weakened analytically before the adaptive pass so
    integrable singularities (p > -1) cost no accuracy.  Defaults assume a
    smooth integrand.

    The integrand is still evaluated at raw coordinates, so a strongly
    singular factor (p below about -1/2) whose distance to the endpoint
    the integrand recomputes by subtraction will hit round-off there;
    substitute such a factor out analytically before calling this.
    """
    a, b = float(a), float(b)
    if not a < b:
        raise ValueError(f"invalid interval [{a}, {b}]")
    p_a, p_b = endpoint_orders
    m = 0.5 * (a + b)
    left = _half_integral(f, a, m, p_a, 0.5 * tol)
    # reflect the right half so the singular endpoint sits at the origin
    right = _half_integral(lambda u: f(b - u), 0.0, b - m, p_b, 0.5 * tol)
    return left + right
