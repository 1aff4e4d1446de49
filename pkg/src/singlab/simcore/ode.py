"""Initial value problem driver with blow-up detection."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import solve_ivp


@dataclass
class Trajectory:
    """Result of an IVP solve.

    ``t`` and ``y`` hold the accepted steps (``y`` has shape
    ``(n_states, n_steps)``).  ``blown_up`` is set when integration stopped
    before the end of the span because the solution escaped: either the
    integrator gave up on step-size control or a blow-up event fired.
    ``t_events``/``y_events`` mirror the event layout of the solver.
    """

    t: np.ndarray
    y: np.ndarray
    blown_up: bool
    message: str
    t_events: list = field(default_factory=list)
    y_events: list = field(default_factory=list)
    sol: object = None

    @property
    def y_final(self) -> np.ndarray:
        return self.y[:, -1]

    def __call__(self, t):
        if self.sol is None:
            raise ValueError("dense output was not requested")
        return self.sol(t)


def integrate_ode(
    rhs: Callable,
    y0: Sequence[float],
    span: tuple[float, float],
    tol: float = 1e-10,
    events: Sequence[Callable] | None = None,
    stiff: bool = False,
    dense: bool = False,
    max_step: float = np.inf,
) -> Trajectory:
    """Integrate ``y' = rhs(t, y)`` over ``span``.

    High-order explicit stepping by default; pass ``stiff=True`` for an
    L-stable implicit method.  An event callable with a true ``blow_up``
    attribute marks escape to infinity; making it ``terminal`` stops the
    run there.  Integration that dies on step-size collapse is also
    reported as blow-up, with whatever steps were accepted.
    """
    y0 = np.atleast_1d(np.asarray(y0, dtype=float))
    method = "Radau" if stiff else "DOP853"
    res = solve_ivp(
        rhs,
        span,
        y0,
        method=method,
        rtol=tol,
        atol=tol,
        events=events,
        dense_output=dense,
        max_step=max_step,
    )
    blown_up = res.status == -1
    if events is not None and res.t_events is not None:
        for ev, t_ev in zip(events, res.t_events):
            if getattr(ev, "blow_up", False) and len(t_ev):
                blown_up = True
    return Trajectory(
        t=res.t,
        y=res.y,
        blown_up=blown_up,
        message=res.message,
        t_events=list(res.t_events) if res.t_events is not None else [],
        y_events=list(res.y_events) if res.y_events is not None else [],
        sol=res.sol,
    )
