"""Shared mesh and run-configuration value types.

Everything here is an immutable value object; instances can be shared or
copied freely across threads.
"""

from dataclasses import dataclass

import numpy as np

PERIODIC = "periodic"

_BOUNDARIES = (PERIODIC,)


@dataclass(frozen=True)
class Grid1D:
    """Uniform mesh of cell-centred finite volumes on [x_min, x_max].

    Cell centres sit at x_i = x_min + (i + 1/2) dx, so the cells tile the
    domain exactly.  Only periodic boundaries are supported; the update
    stencils use modular indexing instead of ghost cells.
    """

    n_cells: int
    x_min: float
    x_max: float
    boundary: str = PERIODIC

    def __post_init__(self):
        if self.n_cells < 1:
            raise ValueError(f"n_cells must be >= 1, got {self.n_cells}")
        if not self.x_max > self.x_min:
            raise ValueError(f"need x_max > x_min, got [{self.x_min}, {self.x_max}]")
        if self.boundary not in _BOUNDARIES:
            raise ValueError(f"unsupported boundary {self.boundary!r}")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    @property
    def length(self) -> float:
        return self.x_max - self.x_min

    def cell_centers(self) -> np.ndarray:
        return self.x_min + (np.arange(self.n_cells) + 0.5) * self.dx


def build_grid(n_cells: int, x_min: float, x_max: float) -> Grid1D:
    """Build a uniform periodic grid with dx = (x_max - x_min) / n_cells."""
    return Grid1D(n_cells=int(n_cells), x_min=float(x_min), x_max=float(x_max))


@dataclass(frozen=True)
class CourantPair:
    """Non-negative Courant numbers (c_x, c_y) = (lam_x dt/dx, lam_y dt/dy)."""

    cx: float
    cy: float

    def __post_init__(self):
        if self.cx < 0 or self.cy < 0:
            raise ValueError(f"Courant numbers must be >= 0, got ({self.cx}, {self.cy})")


@dataclass(frozen=True)
class RunConfig:
    """Time-marching parameters: CFL safety coefficient, output time, Courant number."""

    cfl_coefficient: float = 1.0
    output_time: float = 1.0
    courant_number: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.cfl_coefficient <= 1.0:
            raise ValueError(f"cfl_coefficient must lie in (0, 1], got {self.cfl_coefficient}")
        if self.output_time < 0.0:
            raise ValueError(f"output_time must be >= 0, got {self.output_time}")
        if self.courant_number <= 0.0:
            raise ValueError(f"courant_number must be > 0, got {self.courant_number}")
