from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from mappedweno.errors import SolverAbort
from mappedweno.hyperbolic1d.advection import advect_rk3, advection_rhs
from mappedweno.hyperbolic1d.euler import euler1d_rhs, euler_timestep
from mappedweno.hyperbolic1d.grid import Grid1D
from mappedweno.hyperbolic1d.problems import ProblemSpec1D, init_1d
from mappedweno.hyperbolic1d.rk3 import rk3_step
from mappedweno.schemes import CompiledScheme


@dataclass
class RunResult1D:
    spec: ProblemSpec1D
    grid: Grid1D
    u: np.ndarray
    t: float
    steps: int
    wall_time: float
    snapshots: dict[float, np.ndarray] = field(default_factory=dict)

    @property
    def x(self) -> np.ndarray:
        return self.grid.x


def _fixed_dt(spec: ProblemSpec1D, dx: float) -> float:
    if spec.dt_rule == "accuracy":
        return spec.cfl * dx ** (5.0 / 3.0)
    if spec.dt_rule == "accuracy-literal":
        return dx ** 1.25
    return spec.cfl * dx


def segment_steps(span: float, dt: float) -> np.ndarray:
    """Step sizes covering ``span``: whole steps of ``dt`` and a clipped last one.

    The last step ends exactly on ``span`` (it is at most ``dt`` up to a
    relative ``1e-9``), so end times never drift with the step count.
    """
    if span <= 0.0:
        return np.empty(0)
    m = max(1, math.ceil(span / dt - 1.0e-9))
    steps = np.full(m, dt)
    steps[-1] = span - (m - 1) * dt
    return steps


def run_problem_1d(
    spec: ProblemSpec1D, u0: np.ndarray | None = None, compiled: bool = True
) -> RunResult1D:
    """March ``spec`` from ``t = 0`` to ``spec.t_end`` with RK3.

    The last step before each snapshot and before the end time is shortened
    to land on it exactly. ``u0`` overrides the tabulated initial condition.
    Fixed-step advection runs go through a compiled loop unless
    ``compiled=False``; both paths give identical results.
    """
    grid = spec.grid()
    cs = CompiledScheme.from_spec(spec.scheme)
    u = init_1d(spec, grid) if u0 is None else np.array(u0, dtype=np.float64)
    bc = spec.boundary

    if spec.is_euler:
        def rhs(v, t):
            return euler1d_rhs(v, grid, cs, spec.gamma, bc)
    else:
        def rhs(v, t):
            return advection_rhs(v, grid, cs, bc)

    targets = sorted({ts for ts in spec.snapshot_times if 0.0 <= ts < spec.t_end})
    targets.append(spec.t_end)
    snapshots: dict[float, np.ndarray] = {}
    requested = set(spec.snapshot_times)

    t = 0.0
    steps = 0
    tic = time.perf_counter()
    for target in targets:
        if spec.dt_rule == "euler":
            while t < target * (1.0 - 1.0e-14):
                dt = min(euler_timestep(u, grid, spec.cfl, spec.gamma), target - t)
                u = _guarded_step(u, rhs, dt, t, steps)
                steps += 1
                t = target if t + dt >= target else t + dt
        else:
            dts = segment_steps(target - t, _fixed_dt(spec, grid.dx))
            if compiled and not spec.is_euler:
                u, bad = advect_rk3(u, dts, bc == "periodic", grid.dx,
                                    cs.kind, cs.par, cs.coeffs)
                if bad >= 0:
                    raise SolverAbort("non-finite value after RK3 step", step=steps + bad)
            else:
                for k, dt in enumerate(dts):
                    u = _guarded_step(u, rhs, dt, t + k * float(dts[0]), steps + k)
            steps += dts.size
            t = target
        if target in requested:
            snapshots[target] = u.copy()

    return RunResult1D(spec, grid, u, t, steps, time.perf_counter() - tic, snapshots)


def _guarded_step(u, rhs, dt, t, step):
    try:
        return rk3_step(u, rhs, dt, t)
    except SolverAbort as exc:
        raise SolverAbort(exc.message, step=step, where=exc.where) from exc
