"""Linear advection ``u_t + u_x = 0`` with unit wind speed."""

from __future__ import annotations

import numpy as np
from numba import njit

from mappedweno.errors import SolverAbort
from mappedweno.hyperbolic1d.grid import GHOST_WIDTH, Grid1D, pad
from mappedweno.mapping import MappingSpec
from mappedweno.schemes import CompiledScheme, weno5_flux


@njit(cache=True)
def scalar_fluxes(up, dx, kind, par, coeffs):
    """Upwind WENO fluxes at the ``n + 1`` faces of a padded scalar field.

    ``h[i]`` is the value at the face left of interior point ``i``.
    """
    g = 3
    n = up.size - 2 * g
    h = np.empty(n + 1)
    for i in range(n + 1):
        c = g + i - 1
        h[i] = weno5_flux(up[c - 2], up[c - 1], up[c], up[c + 1], up[c + 2],
                          dx, kind, par, coeffs)
    return h


@njit(cache=True)
def _wrap(u, up):
    g = 3
    n = u.size
    for j in range(n):
        up[g + j] = u[j]
    for j in range(g):
        up[j] = u[n - g + j]
        up[g + n + j] = u[j]


@njit(cache=True)
def _edge(u, up):
    g = 3
    n = u.size
    for j in range(n):
        up[g + j] = u[j]
    for j in range(g):
        up[j] = u[0]
        up[g + n + j] = u[n - 1]


@njit(cache=True)
def _scalar_rhs(u, up, periodic, dx, kind, par, coeffs, out):
    if periodic:
        _wrap(u, up)
    else:
        _edge(u, up)
    h = scalar_fluxes(up, dx, kind, par, coeffs)
    for j in range(u.size):
        out[j] = -(h[j + 1] - h[j]) / dx


@njit(cache=True)
def advect_rk3(u, dts, periodic, dx, kind, par, coeffs):
    """March ``u`` through the steps ``dts`` entirely in compiled code.

    Performs the same floating-point operations, in the same order, as
    :func:`rk3_step` applied to :func:`advection_rhs`, so results agree bit
    for bit. Returns the new state and the index of the first step that
    produced a non-finite value (``-1`` if none).
    """
    n = u.size
    up = np.empty(n + 6)
    k = np.empty(n)
    u = u.copy()
    u1 = np.empty(n)
    u2 = np.empty(n)
    for step in range(dts.size):
        dt = dts[step]
        _scalar_rhs(u, up, periodic, dx, kind, par, coeffs, k)
        for j in range(n):
            u1[j] = u[j] + dt * k[j]
        _scalar_rhs(u1, up, periodic, dx, kind, par, coeffs, k)
        for j in range(n):
            u2[j] = 0.75 * u[j] + 0.25 * (u1[j] + dt * k[j])
        _scalar_rhs(u2, up, periodic, dx, kind, par, coeffs, k)
        ok = True
        for j in range(n):
            u[j] = (u[j] + 2.0 * (u2[j] + dt * k[j])) / 3.0
            if not np.isfinite(u[j]):
                ok = False
        if not ok:
            return u, step
    return u, -1


def advection_rhs(
    u: np.ndarray,
    grid: Grid1D,
    scheme: MappingSpec | CompiledScheme,
    bc: str = "periodic",
) -> np.ndarray:
    """``-(h[j+1/2] - h[j-1/2]) / dx`` for the interior values ``u``."""
    cs = CompiledScheme.from_spec(scheme)
    up = pad(np.ascontiguousarray(u, dtype=np.float64), bc, GHOST_WIDTH)
    h = scalar_fluxes(up, grid.dx, cs.kind, cs.par, cs.coeffs)
    out = -(h[1:] - h[:-1]) / grid.dx
    if not np.all(np.isfinite(out)):
        bad = int(np.flatnonzero(~np.isfinite(out))[0])
        raise SolverAbort("non-finite advection flux", where=f"cell {bad}")
    return out
