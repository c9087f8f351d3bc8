from __future__ import annotations

from dataclasses import dataclass

import numpy as np

GHOST_WIDTH = 3

EDGE_KINDS = ("periodic", "reflective", "extrapolation", "inflow", "dmr_bottom", "dmr_top")


@dataclass(frozen=True)
class Grid2D:
    """Uniform cell-centred grid on ``[x_min, x_max] x [y_min, y_max]``.

    Field arrays are stored ``(component, y, x)`` so that a row is a
    contiguous x-line.
    """

    nx: int
    ny: int
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    ghost_width: int = GHOST_WIDTH

    def __post_init__(self) -> None:
        if self.nx < 1 or self.ny < 1:
            raise ValueError(f"grid needs positive sizes, got {self.nx} x {self.ny}")
        if self.x_max <= self.x_min or self.y_max <= self.y_min:
            raise ValueError("empty domain")
        if self.ghost_width != GHOST_WIDTH:
            raise ValueError("the five-point stencil needs exactly 3 ghost cells")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.nx

    @property
    def dy(self) -> float:
        return (self.y_max - self.y_min) / self.ny

    @property
    def x(self) -> np.ndarray:
        return self.x_min + (np.arange(self.nx) + 0.5) * self.dx

    @property
    def y(self) -> np.ndarray:
        return self.y_min + (np.arange(self.ny) + 0.5) * self.dy

    def x_padded(self) -> np.ndarray:
        g = self.ghost_width
        return self.x_min + (np.arange(-g, self.nx + g) + 0.5) * self.dx

    def y_padded(self) -> np.ndarray:
        g = self.ghost_width
        return self.y_min + (np.arange(-g, self.ny + g) + 0.5) * self.dy

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        """``(X, Y)`` node coordinates with shape ``(ny, nx)``."""
        return np.meshgrid(self.x, self.y)

    def transposed(self) -> Grid2D:
        return Grid2D(self.ny, self.nx, self.y_min, self.y_max, self.x_min, self.x_max)


@dataclass(frozen=True)
class BoundarySet:
    """Edge conditions for the four sides of a :class:`Grid2D`.

    ``inflow`` holds ghost cells at ``inflow_state`` (conservative), the
    ``dmr_*`` kinds implement the double-Mach wall and moving-shock edges.
    """

    left: str
    right: str
    bottom: str
    top: str
    inflow_state: tuple[float, float, float, float] | None = None

    def __post_init__(self) -> None:
        for side in ("left", "right", "bottom", "top"):
            kind = getattr(self, side)
            if kind not in EDGE_KINDS:
                raise ValueError(f"unknown boundary kind {kind!r} on {side} edge")
        if (self.left == "periodic") != (self.right == "periodic"):
            raise ValueError("periodic edges must come in opposing pairs (left/right)")
        if (self.bottom == "periodic") != (self.top == "periodic"):
            raise ValueError("periodic edges must come in opposing pairs (bottom/top)")
        if "inflow" in (self.left, self.right, self.bottom, self.top) and self.inflow_state is None:
            raise ValueError("inflow edges need an inflow_state")

    @classmethod
    def uniform(cls, kind: str) -> BoundarySet:
        return cls(kind, kind, kind, kind)
