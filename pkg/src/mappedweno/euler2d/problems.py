"""Initial data and boundary sets for the 2D benchmarks."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from mappedweno.euler2d.boundaries import DMR_POST, DMR_PRE, conservative_state, dmr_shock_x
from mappedweno.euler2d.flux import conservative_2d
from mappedweno.euler2d.grid import BoundarySet, Grid2D
from mappedweno.hyperbolic1d.euler import GAMMA
from mappedweno.mapping import MappingSpec

PROBLEMS_2D = ("vortex", "riemann2d", "implosion", "dmr")

DOMAINS_2D = {
    "vortex": (0.0, 10.0, 0.0, 10.0),
    "riemann2d": (0.0, 1.0, 0.0, 1.0),
    "implosion": (-0.3, 0.3, -0.3, 0.3),
    "dmr": (0.0, 4.0, 0.0, 1.0),
}

DEFAULT_GRIDS_2D = {
    "vortex": (100, 100),
    "riemann2d": (400, 400),
    "implosion": (400, 400),
    "dmr": (960, 240),
}

DEFAULT_END_TIMES_2D = {"vortex": 100.0, "riemann2d": 0.8, "implosion": 2.5, "dmr": 0.2}

VORTEX_STRENGTH = 5.0

# quadrant states (rho, u, v, p): upper right, upper left, lower left, lower right
RIEMANN_QUADRANTS = {
    "printed": ((1.0, 0.1, 1.0, 0.1), (0.5313, 0.8276, 0.0, 0.4),
              (0.8, 0.1, 0.0, 0.4), (0.5313, 0.1, 0.7276, 0.4)),
    "conventional": ((1.0, 0.1, 0.1, 1.0), (0.5313, 0.8276, 0.0, 0.4),
                     (0.8, 0.1, 0.0, 0.4), (0.5313, 0.1, 0.7276, 0.4)),
}


@dataclass(frozen=True)
class ProblemSpec2D:
    """One 2D run: problem tag, grid size, scheme, end time and CFL number.

    ``riemann_variant`` selects the printed quadrant data (``"printed"``) or the
    variant with upper-right state ``(1, 0.1, 0.1, 1)`` (``"conventional"``).
    """

    problem: str
    nx: int
    ny: int
    scheme: MappingSpec
    t_end: float
    cfl: float = 0.5
    gamma: float = GAMMA
    riemann_variant: str = "printed"

    def __post_init__(self) -> None:
        if self.problem not in PROBLEMS_2D:
            raise KeyError(f"unknown 2D problem {self.problem!r}")
        if self.t_end < 0.0:
            raise ValueError(f"end time must be nonnegative, got {self.t_end}")
        if not 0.0 < self.cfl <= 1.0:
            raise ValueError(f"CFL number must lie in (0, 1], got {self.cfl}")
        if self.riemann_variant not in RIEMANN_QUADRANTS:
            raise ValueError(f"unknown Riemann variant {self.riemann_variant!r}")

    def grid(self) -> Grid2D:
        return Grid2D(self.nx, self.ny, *DOMAINS_2D[self.problem])

    def boundaries(self) -> BoundarySet:
        return boundary_set(self.problem, self.gamma)


def boundary_set(problem: str, gamma: float = GAMMA) -> BoundarySet:
    if problem == "vortex":
        return BoundarySet.uniform("periodic")
    if problem == "riemann2d":
        return BoundarySet.uniform("extrapolation")
    if problem == "implosion":
        return BoundarySet.uniform("reflective")
    if problem == "dmr":
        post = tuple(float(a) for a in conservative_state(*DMR_POST, gamma=gamma))
        return BoundarySet("inflow", "extrapolation", "dmr_bottom", "dmr_top", inflow_state=post)
    raise KeyError(f"unknown 2D problem {problem!r}")


def vortex_primitive(x, y, gamma: float = GAMMA, beta: float = VORTEX_STRENGTH):
    """Isentropic vortex centred at (5, 5) on a unit diagonal mean flow."""
    xb = np.asarray(x) - 5.0
    yb = np.asarray(y) - 5.0
    r2 = xb * xb + yb * yb
    rho = (1.0 - (gamma - 1.0) * beta**2 / (8.0 * gamma * math.pi**2)
           * np.exp(1.0 - r2)) ** (1.0 / (gamma - 1.0))
    amp = beta / (2.0 * math.pi) * np.exp(0.5 * (1.0 - r2))
    return rho, 1.0 - amp * yb, 1.0 + amp * xb, rho**gamma


def riemann2d_primitive(x, y, variant: str = "printed"):
    ur, ul, ll, lr = RIEMANN_QUADRANTS[variant]
    x, y = np.broadcast_arrays(np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64))
    out = [np.empty_like(x) for _ in range(4)]
    upper = y >= 0.6
    right = x >= 0.6
    for state, mask in ((ur, upper & right), (ul, upper & ~right),
                        (ll, ~upper & ~right), (lr, ~upper & right)):
        for k in range(4):
            out[k][mask] = state[k]
    return tuple(out)


def implosion_primitive(x, y):
    x, y = np.broadcast_arrays(np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64))
    inner = np.abs(x) + np.abs(y) < 0.15
    rho = np.where(inner, 0.125, 1.0)
    p = np.where(inner, 0.14, 1.0)
    return rho, np.zeros_like(x), np.zeros_like(x), p


def dmr_behind_shock(x, y, t: float = 0.0) -> np.ndarray:
    """True where ``(x, y)`` lies behind (left of) the moving Mach-10 shock."""
    return np.asarray(x) < dmr_shock_x(t, np.asarray(y))


def dmr_primitive(x, y):
    x, y = np.broadcast_arrays(np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64))
    behind = dmr_behind_shock(x, y)
    return tuple(np.where(behind, post, pre) for post, pre in zip(DMR_POST, DMR_PRE))


def init_2d(spec: ProblemSpec2D, grid: Grid2D | None = None) -> np.ndarray:
    """Conservative state ``(4, ny, nx)`` sampled at the cell centres."""
    grid = grid or spec.grid()
    X, Y = grid.mesh()
    if spec.problem == "vortex":
        prim = vortex_primitive(X, Y, spec.gamma)
    elif spec.problem == "riemann2d":
        prim = riemann2d_primitive(X, Y, spec.riemann_variant)
    elif spec.problem == "implosion":
        prim = implosion_primitive(X, Y)
    elif spec.problem == "dmr":
        prim = dmr_primitive(X, Y)
    else:
        raise KeyError(f"unknown 2D problem {spec.problem!r}")
    return conservative_2d(*prim, gamma=spec.gamma)
