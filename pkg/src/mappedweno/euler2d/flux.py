"""Dimension-by-dimension flux differences for the 2D Euler equations.

Only an x-sweep kernel exists. The y-sweep runs the same kernel on the
transposed state with the two momentum components swapped, which makes the
scheme commute exactly with the transposition ``(x, y) -> (y, x)``.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from mappedweno.errors import SolverAbort
from mappedweno.euler2d.grid import Grid2D
from mappedweno.hyperbolic1d.euler import GAMMA
from mappedweno.mapping import MappingSpec
from mappedweno.schemes import CompiledScheme, weno5_flux

SWAP_XY = np.array([0, 2, 1, 3])


def primitive_2d(q: np.ndarray, gamma: float = GAMMA):
    rho = q[0]
    u = q[1] / rho
    v = q[2] / rho
    p = (gamma - 1.0) * (q[3] - 0.5 * (q[1] * u + q[2] * v))
    return rho, u, v, p


def conservative_2d(rho, u, v, p, gamma: float = GAMMA) -> np.ndarray:
    rho, u, v, p = np.broadcast_arrays(
        *(np.asarray(a, dtype=np.float64) for a in (rho, u, v, p)))
    return np.stack([rho, rho * u, rho * v,
                     p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v)])


def check_admissible_2d(q: np.ndarray, gamma: float = GAMMA) -> None:
    rho, _, _, p = primitive_2d(q, gamma)
    bad = ~((rho > 0.0) & (p > 0.0) & np.isfinite(p))
    if np.any(bad):
        j, i = (int(k[0]) for k in np.nonzero(bad))
        raise SolverAbort(f"inadmissible state rho={rho[j, i]:.6g}, p={p[j, i]:.6g}",
                          where=f"cell (i={i}, j={j})")


def directional_speeds(q: np.ndarray, gamma: float = GAMMA) -> tuple[float, float]:
    """``(max(|u| + c), max(|v| + c))`` over ``q``."""
    rho, u, v, p = primitive_2d(q, gamma)
    c = np.sqrt(gamma * p / rho)
    return float(np.max(np.abs(u) + c)), float(np.max(np.abs(v) + c))


def timestep_2d(q: np.ndarray, grid: Grid2D, cfl: float, gamma: float = GAMMA) -> float:
    """``cfl / (max(|u|+c)/dx + max(|v|+c)/dy)``."""
    ax, ay = directional_speeds(q, gamma)
    return cfl / (ax / grid.dx + ay / grid.dy)


# {{{ kernels


@njit(cache=True)
def fill_eigensystem_2d(rl, ul, vl, hl, rr, ur, vr, hr, gamma, L, R):
    """Roe-averaged eigenvectors of the x-flux Jacobian.

    Fields are ordered ``u - c``, entropy ``u``, shear ``u``, ``u + c``.
    """
    sl = np.sqrt(rl)
    sr = np.sqrt(rr)
    u = (sl * ul + sr * ur) / (sl + sr)
    v = (sl * vl + sr * vr) / (sl + sr)
    h = (sl * hl + sr * hr) / (sl + sr)
    q2 = 0.5 * (u * u + v * v)
    c2 = (gamma - 1.0) * (h - q2)
    c = np.sqrt(c2)

    R[0, 0] = 1.0
    R[1, 0] = u - c
    R[2, 0] = v
    R[3, 0] = h - u * c
    R[0, 1] = 1.0
    R[1, 1] = u
    R[2, 1] = v
    R[3, 1] = q2
    R[0, 2] = 0.0
    R[1, 2] = 0.0
    R[2, 2] = 1.0
    R[3, 2] = v
    R[0, 3] = 1.0
    R[1, 3] = u + c
    R[2, 3] = v
    R[3, 3] = h + u * c

    b1 = (gamma - 1.0) / c2
    b2 = q2 * b1
    L[0, 0] = 0.5 * (b2 + u / c)
    L[0, 1] = -0.5 * (b1 * u + 1.0 / c)
    L[0, 2] = -0.5 * b1 * v
    L[0, 3] = 0.5 * b1
    L[1, 0] = 1.0 - b2
    L[1, 1] = b1 * u
    L[1, 2] = b1 * v
    L[1, 3] = -b1
    L[2, 0] = -v
    L[2, 1] = 0.0
    L[2, 2] = 1.0
    L[2, 3] = 0.0
    L[3, 0] = 0.5 * (b2 - u / c)
    L[3, 1] = -0.5 * (b1 * u - 1.0 / c)
    L[3, 2] = -0.5 * b1 * v
    L[3, 3] = 0.5 * b1


@njit(cache=True)
def x_sweep(qp, gamma, alpha, dx, kind, par, coeffs):
    """``-(F[i+1/2] - F[i-1/2]) / dx`` on the interior of padded ``qp``.

    ``qp`` has shape ``(4, ny + 6, nx + 6)``; the result has shape
    ``(4, ny, nx)``.
    """
    g = 3
    nyp = qp.shape[1]
    nxp = qp.shape[2]
    ny = nyp - 2 * g
    nx = nxp - 2 * g
    out = np.empty((4, ny, nx))

    rho = np.empty(nxp)
    vel = np.empty(nxp)
    wel = np.empty(nxp)
    enth = np.empty(nxp)
    fp = np.empty((4, nxp))
    fm = np.empty((4, nxp))
    L = np.empty((4, 4))
    R = np.empty((4, 4))
    wp = np.empty(5)
    wm = np.empty(5)
    fc = np.empty(4)
    face = np.empty((4, nx + 1))

    for jr in range(ny):
        row = jr + g
        for j in range(nxp):
            r = qp[0, row, j]
            mu = qp[1, row, j]
            mv = qp[2, row, j]
            e = qp[3, row, j]
            u = mu / r
            v = mv / r
            p = (gamma - 1.0) * (e - 0.5 * (mu * u + mv * v))
            rho[j] = r
            vel[j] = u
            wel[j] = v
            enth[j] = (e + p) / r
            f0 = mu
            f1 = mu * u + p
            f2 = mu * v
            f3 = u * (e + p)
            fp[0, j] = 0.5 * (f0 + alpha * r)
            fp[1, j] = 0.5 * (f1 + alpha * mu)
            fp[2, j] = 0.5 * (f2 + alpha * mv)
            fp[3, j] = 0.5 * (f3 + alpha * e)
            fm[0, j] = 0.5 * (f0 - alpha * r)
            fm[1, j] = 0.5 * (f1 - alpha * mu)
            fm[2, j] = 0.5 * (f2 - alpha * mv)
            fm[3, j] = 0.5 * (f3 - alpha * e)

        for i in range(nx + 1):
            c = g + i - 1
            fill_eigensystem_2d(rho[c], vel[c], wel[c], enth[c],
                                rho[c + 1], vel[c + 1], wel[c + 1], enth[c + 1],
                                gamma, L, R)
            for k in range(4):
                for s in range(5):
                    jp = c - 2 + s
                    jm = c + 3 - s
                    wp[s] = (L[k, 0] * fp[0, jp] + L[k, 1] * fp[1, jp]
                             + L[k, 2] * fp[2, jp] + L[k, 3] * fp[3, jp])
                    wm[s] = (L[k, 0] * fm[0, jm] + L[k, 1] * fm[1, jm]
                             + L[k, 2] * fm[2, jm] + L[k, 3] * fm[3, jm])
                fc[k] = (weno5_flux(wp[0], wp[1], wp[2], wp[3], wp[4], dx, kind, par, coeffs)
                         + weno5_flux(wm[0], wm[1], wm[2], wm[3], wm[4], dx, kind, par, coeffs))
            for m in range(4):
                # acoustic pair first so a reflection x -> -x rounds identically
                face[m, i] = ((R[m, 0] * fc[0] + R[m, 3] * fc[3])
                              + (R[m, 1] * fc[1] + R[m, 2] * fc[2]))
        for m in range(4):
            for i in range(nx):
                out[m, jr, i] = -(face[m, i + 1] - face[m, i]) / dx
    return out


# }}}


def _sweep_alpha(qp: np.ndarray, gamma: float) -> float:
    # |u| + c over the rows that are swept (interior rows, ghost columns included)
    g = 3
    rows = qp[:, g:-g, :]
    rho = rows[0]
    u = rows[1] / rho
    p = (gamma - 1.0) * (rows[3] - 0.5 * (rows[1] * u + rows[2] * rows[2] / rho))
    return float(np.max(np.abs(u) + np.sqrt(gamma * p / rho)))


def swap_xy(qp: np.ndarray) -> np.ndarray:
    """Transpose a ``(4, ny, nx)`` state and exchange the momentum components."""
    return np.ascontiguousarray(qp[SWAP_XY].transpose(0, 2, 1))


def euler2d_rhs_padded(
    qp: np.ndarray,
    grid: Grid2D,
    scheme: MappingSpec | CompiledScheme,
    gamma: float = GAMMA,
) -> np.ndarray:
    """Increment ``-(dF/dx + dG/dy)`` for a padded state with filled ghosts."""
    cs = CompiledScheme.from_spec(scheme)
    g = grid.ghost_width
    check_admissible_2d(qp[:, g:-g, g:-g], gamma)
    qp = np.ascontiguousarray(qp)
    ax = _sweep_alpha(qp, gamma)
    dfx = x_sweep(qp, gamma, ax, grid.dx, cs.kind, cs.par, cs.coeffs)
    qt = swap_xy(qp)
    ay = _sweep_alpha(qt, gamma)
    dgy = x_sweep(qt, gamma, ay, grid.dy, cs.kind, cs.par, cs.coeffs)
    out = dfx + swap_xy(dgy)
    if not np.all(np.isfinite(out)):
        j, i = (int(k[0]) for k in np.nonzero(~np.all(np.isfinite(out), axis=0)))
        raise SolverAbort("non-finite 2D Euler flux", where=f"cell (i={i}, j={j})")
    return out
