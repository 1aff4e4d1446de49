"""Shared numerical infrastructure for the singularity engines."""

from singlab.simcore.grid import Grid1D, Profile
from singlab.simcore.frames import SimilarityFrame, from_similarity, to_similarity
from singlab.simcore.rootfind import BracketError, find_root
from singlab.simcore.quadrature import integrate_adaptive
from singlab.simcore.hermite import hermite_eval
from singlab.simcore.ode import Trajectory, integrate_ode
from singlab.simcore.eig import Banded, EigResult, eig_banded
from singlab.simcore.manifest import ENGINES, RunManifest

__all__ = [
    "Banded",
    "BracketError",
    "ENGINES",
    "EigResult",
    "Grid1D",
    "Profile",
    "RunManifest",
    "SimilarityFrame",
    "Trajectory",
    "eig_banded",
    "find_root",
    "from_similarity",
    "hermite_eval",
    "integrate_adaptive",
    "integrate_ode",
    "to_similarity",
]
