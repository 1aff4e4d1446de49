"""One-dimensional grids and sampled surface profiles."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MIN_NODES = 8


@dataclass(frozen=True, eq=False)
class Grid1D:
    """Strictly increasing set of node coordinates.

    Parameters
    ----------
    nodes : array_like
        Node coordinates, strictly increasing, at least ``MIN_NODES`` long.
    """

    nodes: np.ndarray

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        if nodes.ndim != 1 or nodes.size < MIN_NODES:
            raise ValueError(f"grid needs >= {MIN_NODES} nodes, got shape {nodes.shape}")
        if not np.all(np.isfinite(nodes)):
            raise ValueError("grid nodes must be finite")
        if np.any(np.diff(nodes) <= 0.0):
            raise ValueError("grid nodes must be strictly increasing")
        object.__setattr__(self, "nodes", nodes)

    @classmethod
    def regular(cls, a: float, b: float, n: int) -> "Grid1D":
        return cls(np.linspace(a, b, n))

    @property
    def n(self) -> int:
        return self.nodes.size

    @property
    def spacing(self) -> np.ndarray:
        return np.diff(self.nodes)

    @property
    def uniform_flag(self) -> bool:
        dx = self.spacing
        return bool(np.max(dx) - np.min(dx) <= 1e-12 * np.max(dx))

    @property
    def extent(self) -> tuple[float, float]:
        return float(self.nodes[0]), float(self.nodes[-1])


@dataclass(eq=False)
class Profile:
    """A field sampled on a grid at one instant.

    ``values`` may be a radius-like surface field (positive until the
    singularity is declared) or any other nodal quantity; engines enforce
    their own positivity rules on top of the finiteness check here.
    """

    grid: Grid1D
    values: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != self.grid.nodes.shape:
            raise ValueError("values and grid node counts differ")
        if not np.all(np.isfinite(values)):
            raise ValueError("profile values must be finite")
        self.values = values
        self.time = float(self.time)

    @property
    def x(self) -> np.ndarray:
        return self.grid.nodes

    def copy(self) -> "Profile":
        return Profile(self.grid, self.values.copy(), self.time)

    def interp(self, x: np.ndarray) -> np.ndarray:
        return np.interp(x, self.grid.nodes, self.values)

    def min_parabolic(self) -> tuple[float, float]:
        """Sub-grid minimum (location, value) by a parabola through the
        three nodes around the discrete minimum."""
        v = self.values
        j = int(np.argmin(v))
        j = min(max(j, 1), v.size - 2)
        x0, x1, x2 = self.grid.nodes[j - 1 : j + 2]
        f0, f1, f2 = v[j - 1 : j + 2]
        # Lagrange derivative of the interpolating parabola set to zero
        d01, d02, d12 = x0 - x1, x0 - x2, x1 - x2
        a = f0 / (d01 * d02) - f1 / (d01 * d12) + f2 / (d02 * d12)
        b = -f0 * (x1 + x2) / (d01 * d02) + f1 * (x0 + x2) / (d01 * d12) - f2 * (x0 + x1) / (d02 * d12)
        if a <= 0.0:  # degenerate, fall back to the nodal minimum
            return float(self.grid.nodes[j]), float(v[j])
        xm = -b / (2.0 * a)
        lo, hi = x0, x2
        xm = min(max(xm, lo), hi)
        c = f1 - a * x1 * x1 - b * x1
        return float(xm), float(a * xm * xm + b * xm + c)
