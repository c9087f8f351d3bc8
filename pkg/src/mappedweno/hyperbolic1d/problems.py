"""Initial data for the one-dimensional benchmarks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from mappedweno.hyperbolic1d.euler import GAMMA, conservative
from mappedweno.hyperbolic1d.grid import Grid1D
from mappedweno.mapping import MappingSpec

ADVECTION_CASES = ("case1", "case2", "case3", "case4", "case5")
EULER_PROBLEMS = ("sod", "shu-osher")

# composite profile constants (Gaussian, square, triangle, ellipse)
_Z = -0.7
_DELTA = 0.0005
_BETA = np.log(2.0) / (36.0 * _DELTA**2)
_ALPHA = 10.0
_A = 0.5


def _gauss(x, z):
    return np.exp(-_BETA * (x - z) ** 2)


def _ellipse(x, a):
    return np.sqrt(np.maximum(1.0 - _ALPHA**2 * (x - a) ** 2, 0.0))


def composite_profile(x: np.ndarray) -> np.ndarray:
    """Gaussian, square pulse, triangle and half-ellipse on ``[-1, 1]``."""
    x = np.asarray(x, dtype=np.float64)
    u = np.zeros_like(x)

    m = (x >= -0.8) & (x < -0.6)
    u[m] = (_gauss(x[m], _Z - _DELTA) + _gauss(x[m], _Z + _DELTA)
            + 4.0 * _gauss(x[m], _Z)) / 6.0
    u[(x >= -0.4) & (x < -0.2)] = 1.0
    m = (x >= 0.0) & (x < 0.2)
    u[m] = 1.0 - np.abs(10.0 * (x[m] - 0.1))
    m = (x >= 0.4) & (x < 0.6)
    u[m] = (_ellipse(x[m], _A - _DELTA) + _ellipse(x[m], _A + _DELTA)
            + 4.0 * _ellipse(x[m], _A)) / 6.0
    return u


def advection_profile(case: str, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if case == "case1":
        return np.sin(np.pi * x)
    if case == "case2":
        return np.sin(np.pi * x - np.sin(np.pi * x) / np.pi)
    if case == "case3":
        return np.where(x < 0.0, 1.0, 0.0)
    if case == "case4":
        base = -np.sin(np.pi * x) - 0.5 * x**3
        return np.where(x <= 0.0, base, base + 1.0)
    if case == "case5":
        return composite_profile(x)
    raise KeyError(f"unknown advection case {case!r}")


def advection_exact(case: str, x: np.ndarray, t: float, period: float = 2.0) -> np.ndarray:
    """Initial profile translated by ``t`` on the periodic domain ``[-1, 1)``.

    Whole periods are removed first so that nodes lying on a discontinuity
    are not pushed across it by rounding.
    """
    shift = math.fmod(t, period)
    if min(abs(shift), abs(period - shift)) < 1.0e-12 * max(1.0, t):
        return advection_profile(case, x)
    xs = np.mod(np.asarray(x) - shift + 1.0, period) - 1.0
    return advection_profile(case, xs)


@dataclass(frozen=True)
class ProblemSpec1D:
    """Everything needed to reproduce one 1D run.

    ``dt_rule`` is one of ``"accuracy"`` (``cfl * dx^(5/3)``),
    ``"accuracy-literal"`` (``dx^(5/4)``), ``"fixed"`` (``cfl * dx``) or
    ``"euler"`` (CFL rule re-evaluated every step).
    """

    problem: str
    n_cells: int
    scheme: MappingSpec
    t_end: float
    dt_rule: str = "fixed"
    cfl: float = 0.5
    gamma: float = GAMMA
    constant_right_state: bool = False
    snapshot_times: tuple[float, ...] = field(default=())
    domain: tuple[float, float] | None = None
    bc: str | None = None

    def __post_init__(self) -> None:
        if self.problem not in ADVECTION_CASES + EULER_PROBLEMS:
            raise KeyError(f"unknown 1D problem {self.problem!r}")
        if self.t_end < 0.0:
            raise ValueError(f"end time must be nonnegative, got {self.t_end}")
        if not 0.0 < self.cfl <= 1.0:
            raise ValueError(f"CFL number must lie in (0, 1], got {self.cfl}")
        if self.dt_rule not in ("accuracy", "accuracy-literal", "fixed", "euler"):
            raise ValueError(f"unknown time-step rule {self.dt_rule!r}")

    @property
    def is_euler(self) -> bool:
        return self.problem in EULER_PROBLEMS

    @property
    def boundary(self) -> str:
        if self.bc is not None:
            return self.bc
        return "transmissive" if self.is_euler else "periodic"

    def grid(self) -> Grid1D:
        lo, hi = self.domain or default_domain(self.problem)
        return Grid1D(self.n_cells, lo, hi, node_offset=0.5)


def default_domain(problem: str) -> tuple[float, float]:
    if problem in ADVECTION_CASES:
        return (-1.0, 1.0)
    if problem == "sod":
        return (0.0, 1.0)
    if problem == "shu-osher":
        return (-5.0, 5.0)
    raise KeyError(problem)


def sod_primitive(x: np.ndarray):
    """Low-pressure gas on the left half, high-pressure gas on the right."""
    x = np.asarray(x, dtype=np.float64)
    left = x <= 0.5
    rho = np.where(left, 0.125, 1.0)
    p = np.where(left, 0.1, 1.0)
    return rho, np.zeros_like(x), p


def shu_osher_primitive(x: np.ndarray, constant_right_state: bool = False):
    """Mach-3 shock running into a sinusoidal density field.

    ``constant_right_state`` replaces the entropy wave ahead of the shock with the
    constant state ``(0.125, 0, 0.1)``.
    """
    x = np.asarray(x, dtype=np.float64)
    post = x < -4.0
    if constant_right_state:
        rho_r, p_r = 0.125, 0.1
    else:
        rho_r, p_r = 1.0 + 0.2 * np.sin(5.0 * x), 1.0
    rho = np.where(post, 3.857143, rho_r)
    u = np.where(post, 2.629369, 0.0)
    p = np.where(post, 10.33333, p_r)
    return rho, u, p


def init_1d(spec: ProblemSpec1D, grid: Grid1D | None = None) -> np.ndarray:
    """Point values of the initial state at the grid nodes."""
    grid = grid or spec.grid()
    x = grid.x
    if spec.problem in ADVECTION_CASES:
        return advection_profile(spec.problem, x)
    if spec.problem == "sod":
        return conservative(*sod_primitive(x), gamma=spec.gamma)
    if spec.problem == "shu-osher":
        return conservative(*shu_osher_primitive(x, spec.constant_right_state), gamma=spec.gamma)
    raise KeyError(f"unknown 1D problem {spec.problem!r}")
