"""Numerical laboratory for finite-time singularities of one-dimensional PDEs.

The package collects several model problems whose solutions blow up (or
pinch off) in finite time, together with the similarity-variable machinery
needed to analyse them: self-similar profiles of the first and second kind,
traveling-wave singularities driven by nonlocal interactions, centre-manifold
dynamics with logarithmic corrections, and discretely self-similar blow-up
up to and including chaotic phase dynamics.

Subpackages
-----------
simcore
    Grids, profiles, similarity frames, and shared numerics (root finding,
    quadrature with endpoint singularities, ODE integration, eigensolves).
surface_diffusion
    Axisymmetric surface diffusion: pinching PDE runs, the similarity
    boundary-value problem, and the linearized stability spectrum.
viscous_thread
    Second-kind similarity exponents of a viscous thread retracting inside
    another fluid, via a nonlinear eigenvalue condition.
stokes_pinch
    Traveling-wave pinch-off of a thread in an outer Stokes flow with a
    nonlocal (slender-body) velocity functional.
mcf_centre
    Neckpinch of mean curvature flow: centre-manifold expansion in Hermite
    modes and the resulting log-corrected minimum-radius law.
bubble_pinch
    Bubble collapse with logarithmically slaved exponents and the reduced
    exponent flow on the centre manifold.
wave_chaos
    Hyperbolic systems along blow-up characteristics: limit cycles,
    discretely self-similar waves, and Lorenz-driven chaotic blow-up.
cli
    Command-line entry points, presets, manifests, and report rendering.
"""

from singlab.simcore import (
    Grid1D,
    Profile,
    RunManifest,
    SimilarityFrame,
    find_root,
    from_similarity,
    hermite_eval,
    integrate_adaptive,
    integrate_ode,
    to_similarity,
)

__version__ = "0.1.0"

__all__ = [
    "Grid1D",
    "Profile",
    "RunManifest",
    "SimilarityFrame",
    "find_root",
    "from_similarity",
    "hermite_eval",
    "integrate_adaptive",
    "integrate_ode",
    "to_similarity",
    "__version__",
]
