"""Dimension-by-dimension WENO solver for the 2D Euler equations."""

from mappedweno.euler2d.boundaries import apply_boundaries, dmr_shock_x, padded
from mappedweno.euler2d.flux import (
    conservative_2d,
    euler2d_rhs_padded,
    primitive_2d,
    swap_xy,
    timestep_2d,
)
from mappedweno.euler2d.grid import BoundarySet, Grid2D
from mappedweno.euler2d.problems import PROBLEMS_2D, ProblemSpec2D, boundary_set, init_2d
from mappedweno.euler2d.run import RunResult2D, euler2d_rhs, run_problem_2d

__all__ = [
    "PROBLEMS_2D", "BoundarySet", "Grid2D", "ProblemSpec2D", "RunResult2D",
    "apply_boundaries", "boundary_set", "conservative_2d", "dmr_shock_x",
    "euler2d_rhs", "euler2d_rhs_padded", "init_2d", "padded", "primitive_2d",
    "run_problem_2d", "swap_xy", "timestep_2d",
]
