from __future__ import annotations

from dataclasses import dataclass

import numpy as np

GHOST_WIDTH = 3


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid of ``n_cells`` points on ``[x_min, x_max]``.

    Nodes sit at ``x_min + (j + node_offset) dx``. The default ``0.5`` puts
    them at cell centres, so no node lands exactly on a jump of the tabulated
    initial data and walls sit half a cell from the first node; ``0`` gives
    the vertex layout ``x_j = x_min + j dx``.
    """

    n_cells: int
    x_min: float
    x_max: float
    node_offset: float = 0.5
    ghost_width: int = GHOST_WIDTH

    def __post_init__(self) -> None:
        if self.x_max <= self.x_min:
            raise ValueError(f"empty domain [{self.x_min}, {self.x_max}]")
        if self.n_cells < 10:
            raise ValueError(f"need at least 10 cells, got {self.n_cells}")
        if self.ghost_width != GHOST_WIDTH:
            raise ValueError("the five-point stencil needs exactly 3 ghost cells")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    @property
    def x(self) -> np.ndarray:
        return self.x_min + (np.arange(self.n_cells) + self.node_offset) * self.dx


def pad(u: np.ndarray, bc: str, g: int = GHOST_WIDTH) -> np.ndarray:
    """Add ``g`` ghost points along the last axis.

    ``periodic`` wraps around, ``transmissive`` copies the edge value
    (zero-order extrapolation).
    """
    width = [(0, 0)] * (u.ndim - 1) + [(g, g)]
    if bc == "periodic":
        return np.pad(u, width, mode="wrap")
    if bc == "transmissive":
        return np.pad(u, width, mode="edge")
    raise ValueError(f"unknown boundary kind {bc!r}")
