"""One-dimensional Euler equations in conservative form ``(rho, rho u, E)``.

Fluxes use global Lax-Friedrichs splitting and characteristic-wise WENO:
at every face the five-point windows of ``f+`` and ``f-`` are projected on
the left eigenvectors of the Roe-averaged Jacobian, reconstructed field by
field (``f-`` through the mirrored window) and projected back.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from mappedweno.errors import SolverAbort
from mappedweno.hyperbolic1d.grid import GHOST_WIDTH, Grid1D, pad
from mappedweno.mapping import MappingSpec
from mappedweno.schemes import CompiledScheme, weno5_flux

GAMMA = 1.4


def primitive(q: np.ndarray, gamma: float = GAMMA) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    rho = q[0]
    u = q[1] / rho
    p = (gamma - 1.0) * (q[2] - 0.5 * q[1] * u)
    return rho, u, p


def conservative(rho, u, p, gamma: float = GAMMA) -> np.ndarray:
    rho, u, p = np.broadcast_arrays(*(np.asarray(v, dtype=np.float64) for v in (rho, u, p)))
    return np.stack([rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u])


def sound_speed(rho, p, gamma: float = GAMMA):
    return np.sqrt(gamma * np.asarray(p) / np.asarray(rho))


def check_admissible(q: np.ndarray, gamma: float = GAMMA, offset: int = 0) -> None:
    rho, _, p = primitive(q, gamma)
    bad = ~((rho > 0.0) & (p > 0.0) & np.isfinite(p))
    if np.any(bad):
        idx = int(np.flatnonzero(bad)[0]) - offset
        raise SolverAbort(
            f"inadmissible state rho={rho.flat[idx + offset]:.6g}, "
            f"p={p.flat[idx + offset]:.6g}", where=f"cell {idx}")


def max_wave_speed(q: np.ndarray, gamma: float = GAMMA) -> float:
    rho, u, p = primitive(q, gamma)
    return float(np.max(np.abs(u) + sound_speed(rho, p, gamma)))


def euler_timestep(q: np.ndarray, grid: Grid1D, cfl: float, gamma: float = GAMMA) -> float:
    """``cfl * dx / max(|u| + c)`` over the given points."""
    return cfl * grid.dx / max_wave_speed(q, gamma)


# {{{ kernels


@njit(cache=True)
def fill_eigensystem(rl, ul, hl, rr, ur, hr, gamma, L, R):
    """Roe-averaged left/right eigenvectors for the waves ``u-c, u, u+c``."""
    sl = np.sqrt(rl)
    sr = np.sqrt(rr)
    u = (sl * ul + sr * ur) / (sl + sr)
    h = (sl * hl + sr * hr) / (sl + sr)
    c2 = (gamma - 1.0) * (h - 0.5 * u * u)
    c = np.sqrt(c2)

    R[0, 0] = 1.0
    R[1, 0] = u - c
    R[2, 0] = h - u * c
    R[0, 1] = 1.0
    R[1, 1] = u
    R[2, 1] = 0.5 * u * u
    R[0, 2] = 1.0
    R[1, 2] = u + c
    R[2, 2] = h + u * c

    b1 = (gamma - 1.0) / c2
    b2 = 0.5 * u * u * b1
    L[0, 0] = 0.5 * (b2 + u / c)
    L[0, 1] = -0.5 * (b1 * u + 1.0 / c)
    L[0, 2] = 0.5 * b1
    L[1, 0] = 1.0 - b2
    L[1, 1] = b1 * u
    L[1, 2] = -b1
    L[2, 0] = 0.5 * (b2 - u / c)
    L[2, 1] = -0.5 * (b1 * u - 1.0 / c)
    L[2, 2] = 0.5 * b1


@njit(cache=True)
def characteristic_fluxes(qp, gamma, alpha, dx, kind, par, coeffs):
    """Numerical fluxes at the ``n + 1`` interior faces of padded ``qp``."""
    g = 3
    npts = qp.shape[1]
    n = npts - 2 * g

    rho = qp[0]
    vel = qp[1] / rho
    pres = (gamma - 1.0) * (qp[2] - 0.5 * qp[1] * vel)
    enth = (qp[2] + pres) / rho

    fp = np.empty((3, npts))
    fm = np.empty((3, npts))
    for j in range(npts):
        f0 = qp[1, j]
        f1 = qp[1, j] * vel[j] + pres[j]
        f2 = vel[j] * (qp[2, j] + pres[j])
        fp[0, j] = 0.5 * (f0 + alpha * qp[0, j])
        fp[1, j] = 0.5 * (f1 + alpha * qp[1, j])
        fp[2, j] = 0.5 * (f2 + alpha * qp[2, j])
        fm[0, j] = 0.5 * (f0 - alpha * qp[0, j])
        fm[1, j] = 0.5 * (f1 - alpha * qp[1, j])
        fm[2, j] = 0.5 * (f2 - alpha * qp[2, j])

    L = np.empty((3, 3))
    R = np.empty((3, 3))
    wp = np.empty(5)
    wm = np.empty(5)
    fc = np.empty(3)
    out = np.empty((3, n + 1))
    for i in range(n + 1):
        c = g + i - 1
        fill_eigensystem(rho[c], vel[c], enth[c], rho[c + 1], vel[c + 1], enth[c + 1],
                         gamma, L, R)
        for k in range(3):
            for s in range(5):
                jp = c - 2 + s
                jm = c + 3 - s
                wp[s] = L[k, 0] * fp[0, jp] + L[k, 1] * fp[1, jp] + L[k, 2] * fp[2, jp]
                wm[s] = L[k, 0] * fm[0, jm] + L[k, 1] * fm[1, jm] + L[k, 2] * fm[2, jm]
            fc[k] = (weno5_flux(wp[0], wp[1], wp[2], wp[3], wp[4], dx, kind, par, coeffs)
                     + weno5_flux(wm[0], wm[1], wm[2], wm[3], wm[4], dx, kind, par, coeffs))
        for m in range(3):
            # acoustic pair first so a reflection x -> -x rounds identically
            out[m, i] = (R[m, 0] * fc[0] + R[m, 2] * fc[2]) + R[m, 1] * fc[1]
    return out


# }}}


def roe_eigenvectors(
    left: np.ndarray, right: np.ndarray, gamma: float = GAMMA
) -> tuple[np.ndarray, np.ndarray]:
    """``(L, R)`` for conservative states ``left`` and ``right``."""
    out = []
    for q in (left, right):
        rho, u, p = primitive(np.asarray(q, dtype=np.float64), gamma)
        out.extend([float(rho), float(u), float((q[2] + p) / rho)])
    L = np.empty((3, 3))
    R = np.empty((3, 3))
    fill_eigensystem(*out, gamma, L, R)
    return L, R


def euler1d_rhs(
    q: np.ndarray,
    grid: Grid1D,
    scheme: MappingSpec | CompiledScheme,
    gamma: float = GAMMA,
    bc: str = "transmissive",
) -> np.ndarray:
    """Semi-discrete increment ``-(F[j+1/2] - F[j-1/2]) / dx`` of shape ``(3, n)``."""
    cs = CompiledScheme.from_spec(scheme)
    qp = np.ascontiguousarray(pad(q, bc, GHOST_WIDTH))
    check_admissible(qp, gamma, offset=GHOST_WIDTH)
    alpha = max_wave_speed(qp, gamma)
    F = characteristic_fluxes(qp, gamma, alpha, grid.dx, cs.kind, cs.par, cs.coeffs)
    out = -(F[:, 1:] - F[:, :-1]) / grid.dx
    if not np.all(np.isfinite(out)):
        bad = int(np.flatnonzero(~np.all(np.isfinite(out), axis=0))[0])
        raise SolverAbort("non-finite Euler flux", where=f"cell {bad}")
    return out
