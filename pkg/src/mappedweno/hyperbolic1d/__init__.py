"""Finite-difference WENO solvers for 1D advection and the 1D Euler system."""

from mappedweno.hyperbolic1d.advection import advection_rhs
from mappedweno.hyperbolic1d.euler import (
    GAMMA,
    conservative,
    euler1d_rhs,
    euler_timestep,
    primitive,
    roe_eigenvectors,
    sound_speed,
)
from mappedweno.hyperbolic1d.grid import Grid1D, pad
from mappedweno.hyperbolic1d.problems import (
    ADVECTION_CASES,
    EULER_PROBLEMS,
    ProblemSpec1D,
    advection_exact,
    advection_profile,
    init_1d,
)
from mappedweno.hyperbolic1d.rk3 import rk3_step
from mappedweno.hyperbolic1d.run import RunResult1D, run_problem_1d

__all__ = [
    "ADVECTION_CASES", "EULER_PROBLEMS", "GAMMA", "Grid1D", "ProblemSpec1D",
    "RunResult1D", "advection_exact", "advection_profile", "advection_rhs",
    "conservative", "euler1d_rhs", "euler_timestep", "init_1d", "pad",
    "primitive", "rk3_step", "roe_eigenvectors", "run_problem_1d", "sound_speed",
]
