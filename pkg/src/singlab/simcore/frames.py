"""Similarity-variable transforms.

A blow-up at ``(x0, t0)`` is analysed in the frame

    t' = t0 - t,   tau = -ln t',   xi = (x - x0) / t'**beta,
    h(x, t) = t'**alpha * H(xi, tau).

``to_similarity`` maps a physical profile into ``(xi, H)`` and stores
``tau`` in the returned profile's time slot; ``from_similarity`` is the
exact inverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from singlab.simcore.grid import Grid1D, Profile


class PreSingularityError(ValueError):
    """Raised when a profile is not strictly before the frame's blow-up time."""


@dataclass(frozen=True)
class SimilarityFrame:
    x0: float
    t0: float
    alpha: float
    beta: float

    def __post_init__(self):
        for name in ("x0", "t0", "alpha", "beta"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"frame field {name} must be finite")

    def t_prime(self, t: float) -> float:
        tp = self.t0 - t
        if tp <= 0.0:
            raise PreSingularityError(f"time {t} is not before blow-up at t0={self.t0}")
        return tp


def to_similarity(p: Profile, frame: SimilarityFrame) -> Profile:
    """Rescale a physical profile into similarity variables.

    Returns a profile whose grid holds ``xi``, whose values hold ``H``,
    and whose time slot holds ``tau = -ln t'``.
    """
    tp = frame.t_prime(p.time)
    xi = (p.grid.nodes - frame.x0) / tp**frame.beta
    H = p.values * tp ** (-frame.alpha)
    return Profile(Grid1D(xi), H, time=-math.log(tp))


def from_similarity(q: Profile, frame: SimilarityFrame) -> Profile:
    """Invert :func:`to_similarity`; ``q.time`` is interpreted as ``tau``."""
    tp = math.exp(-q.time)
    x = frame.x0 + q.grid.nodes * tp**frame.beta
    h = q.values * tp**frame.alpha
    return Profile(Grid1D(x), h, time=frame.t0 - tp)
