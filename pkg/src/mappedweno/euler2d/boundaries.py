"""Ghost-cell filling for the 2D solver."""

from __future__ import annotations

import math

import numpy as np

from mappedweno.euler2d.grid import BoundarySet, Grid2D
from mappedweno.hyperbolic1d.euler import GAMMA

# Mach-10 shock into still gas at rest (rho, u, v, p); the post-shock values
# follow from the Rankine-Hugoniot relations with the shock tilted 60 degrees.
DMR_MACH = 10.0
DMR_PRE = (1.4, 0.0, 0.0, 1.0)
DMR_POST = (8.0, 8.25 * math.cos(math.pi / 6.0), -8.25 * math.sin(math.pi / 6.0), 116.5)
DMR_WALL_START = 1.0 / 6.0


def conservative_state(rho, u, v, p, gamma: float = GAMMA) -> np.ndarray:
    return np.array([rho, rho * u, rho * v, p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v)])


def dmr_shock_x(t: float, y: float = 1.0) -> float:
    """x-position of the moving shock at height ``y``: ``1/6 + (y + 20 t)/sqrt(3)``."""
    return DMR_WALL_START + (y + 20.0 * t) / math.sqrt(3.0)


def _mirror(qp: np.ndarray, axis: int, side: str, g: int, flip: int) -> None:
    """Mirror ``g`` layers across a wall and negate component ``flip``."""
    n = qp.shape[axis] - 2 * g
    for k in range(g):
        if side == "low":
            dst, src = g - 1 - k, g + k
        else:
            dst, src = g + n + k, g + n - 1 - k
        sl_dst = [slice(None)] * 3
        sl_src = [slice(None)] * 3
        sl_dst[axis] = dst
        sl_src[axis] = src
        qp[tuple(sl_dst)] = qp[tuple(sl_src)]
        qp[(flip,) + tuple(sl_dst[1:])] *= -1.0


def _copy(qp: np.ndarray, axis: int, side: str, g: int, kind: str) -> None:
    n = qp.shape[axis] - 2 * g
    for k in range(g):
        if side == "low":
            dst = g - 1 - k
            src = n + g - 1 - k if kind == "periodic" else g
        else:
            dst = g + n + k
            src = g + k if kind == "periodic" else g + n - 1
        sl_dst = [slice(None)] * 3
        sl_src = [slice(None)] * 3
        sl_dst[axis] = dst
        sl_src[axis] = src
        qp[tuple(sl_dst)] = qp[tuple(sl_src)]


def _fill_edge(qp, axis, side, kind, bset, grid, t, gamma):
    g = grid.ghost_width
    # momentum normal to the edge: rho u (index 1) across x, rho v (2) across y
    normal = 1 if axis == 2 else 2
    if kind in ("periodic", "extrapolation"):
        _copy(qp, axis, side, g, kind)
    elif kind == "reflective":
        _mirror(qp, axis, side, g, normal)
    elif kind == "inflow":
        state = np.asarray(bset.inflow_state, dtype=np.float64)
        layers = slice(0, g) if side == "low" else slice(qp.shape[axis] - g, None)
        if axis == 2:
            qp[:, :, layers] = state[:, None, None]
        else:
            qp[:, layers, :] = state[:, None, None]
    elif kind == "dmr_bottom":
        if axis != 1 or side != "low":
            raise ValueError("dmr_bottom applies to the bottom edge only")
        _mirror(qp, 1, "low", g, 2)
        post = conservative_state(*DMR_POST, gamma=gamma)
        inflow = grid.x_padded() < DMR_WALL_START
        qp[:, :g, inflow] = post[:, None, None]
    elif kind == "dmr_top":
        if axis != 1 or side != "high":
            raise ValueError("dmr_top applies to the top edge only")
        post = conservative_state(*DMR_POST, gamma=gamma)
        pre = conservative_state(*DMR_PRE, gamma=gamma)
        behind = grid.x_padded() < dmr_shock_x(t)
        top = qp[:, -g:, :]
        top[:] = np.where(behind[None, None, :], post[:, None, None], pre[:, None, None])
    else:
        raise ValueError(f"unknown boundary kind {kind!r}")


def apply_boundaries(
    qp: np.ndarray, bset: BoundarySet, grid: Grid2D, t: float = 0.0, gamma: float = GAMMA
) -> np.ndarray:
    """Fill the ghost layers of the padded state ``qp`` in place and return it.

    Bottom and top are filled first, then left and right over the full
    height, so corner cells end up with the x-direction rule applied to the
    y-ghost rows (two mirrors compose at reflective corners).
    """
    if qp.shape != (4, grid.ny + 2 * grid.ghost_width, grid.nx + 2 * grid.ghost_width):
        raise ValueError(f"padded state has shape {qp.shape}, grid needs "
                         f"(4, {grid.ny + 6}, {grid.nx + 6})")
    _fill_edge(qp, 1, "low", bset.bottom, bset, grid, t, gamma)
    _fill_edge(qp, 1, "high", bset.top, bset, grid, t, gamma)
    _fill_edge(qp, 2, "low", bset.left, bset, grid, t, gamma)
    _fill_edge(qp, 2, "high", bset.right, bset, grid, t, gamma)
    return qp


def padded(q: np.ndarray, grid: Grid2D) -> np.ndarray:
    """Interior state ``(4, ny, nx)`` copied into a zeroed padded array."""
    g = grid.ghost_width
    qp = np.zeros((4, grid.ny + 2 * g, grid.nx + 2 * g))
    qp[:, g:-g, g:-g] = q
    return qp
