from __future__ import annotations

import math

import numpy as np
import pytest

from mappedweno.errors import SolverAbort
from mappedweno.euler2d import (
    BoundarySet,
    Grid2D,
    ProblemSpec2D,
    apply_boundaries,
    conservative_2d,
    dmr_shock_x,
    euler2d_rhs,
    init_2d,
    padded,
    primitive_2d,
    run_problem_2d,
    swap_xy,
    timestep_2d,
)
from mappedweno.euler2d.boundaries import DMR_POST, DMR_PRE
from mappedweno.euler2d.problems import vortex_primitive
from mappedweno.hyperbolic1d import Grid1D, conservative, euler1d_rhs, rk3_step
from mappedweno.schemes import COMPARED_SCHEMES, get_scheme

PERIODIC = BoundarySet.uniform("periodic")


def smooth_state(grid: Grid2D) -> np.ndarray:
    X, Y = grid.mesh()
    a = 2.0 * np.pi * (X - grid.x_min) / (grid.x_max - grid.x_min)
    b = 2.0 * np.pi * (Y - grid.y_min) / (grid.y_max - grid.y_min)
    return conservative_2d(1.0 + 0.3 * np.sin(a) * np.cos(b), 0.4 * np.cos(a + b),
                           -0.2 + 0.3 * np.sin(2 * b), 1.0 + 0.2 * np.cos(a - b))


# {{{ grid, boundaries, initial data


def test_grid_spacing_and_validation():
    g = Grid2D(40, 10, 0.0, 4.0, 0.0, 1.0)
    assert g.dx == pytest.approx(0.1) and g.dy == pytest.approx(0.1)
    assert g.mesh()[0].shape == (10, 40)
    with pytest.raises(ValueError):
        Grid2D(0, 10, 0.0, 1.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        BoundarySet("periodic", "reflective", "periodic", "periodic")
    with pytest.raises(ValueError):
        BoundarySet.uniform("slip")


def test_reflective_wall_flips_normal_momentum():
    g = Grid2D(6, 6, 0.0, 1.0, 0.0, 1.0)
    q = np.empty((4, 6, 6))
    q[:] = np.array([1.0, 2.0, 3.0, 4.0])[:, None, None]
    qp = apply_boundaries(padded(q, g), BoundarySet.uniform("reflective"), g)
    assert list(qp[:, 2, 4]) == [1.0, 2.0, -3.0, 4.0]
    assert list(qp[:, 4, 2]) == [1.0, -2.0, 3.0, 4.0]
    # corners compose both mirrors
    assert list(qp[:, 2, 2]) == [1.0, -2.0, -3.0, 4.0]


def test_periodic_round_trip():
    g = Grid2D(12, 9, 0.0, 1.0, 0.0, 1.0)
    q = np.random.default_rng(3).random((4, 9, 12)) + 1.0
    qp = apply_boundaries(padded(q, g), PERIODIC, g)
    assert np.array_equal(qp[:, 3:-3, 3:-3], q)
    assert np.array_equal(qp[:, 3:-3, :3], q[:, :, -3:])
    assert np.array_equal(qp[:, -3:, 3:-3], q[:, :3, :])


def test_extrapolation_copies_edge():
    g = Grid2D(10, 10, 0.0, 1.0, 0.0, 1.0)
    q = np.random.default_rng(1).random((4, 10, 10)) + 1.0
    qp = apply_boundaries(padded(q, g), BoundarySet.uniform("extrapolation"), g)
    for k in range(3):
        assert np.array_equal(qp[:, 3:-3, k], q[:, :, 0])


def test_dmr_top_edge_follows_initial_shock_line():
    spec = ProblemSpec2D("dmr", 80, 20, get_scheme("js"), 0.2)
    g = spec.grid()
    q = init_2d(spec, g)
    qp = apply_boundaries(padded(q, g), spec.boundaries(), g, 0.0)
    xs = g.x_padded()
    post = conservative_2d(*DMR_POST)
    pre = conservative_2d(*DMR_PRE)
    behind = xs < dmr_shock_x(0.0)
    assert np.allclose(qp[:, -1, behind], np.asarray(post)[:, None])
    assert np.allclose(qp[:, -1, ~behind], np.asarray(pre)[:, None])
    assert dmr_shock_x(0.0) == pytest.approx(1.0 / 6.0 + 1.0 / math.sqrt(3.0))
    # interior: behind the shock exactly when y > sqrt(3) (x - 1/6)
    X, Y = g.mesh()
    rho = primitive_2d(q)[0]
    assert np.array_equal(rho == 8.0, Y > math.sqrt(3.0) * (X - 1.0 / 6.0))


def test_dmr_states_satisfy_conservative_reading():
    post = conservative_2d(*DMR_POST)
    # the printed tuple carries about four significant digits
    assert float(post[1]) == pytest.approx(57.1597, rel=1e-4)
    assert float(post[2]) == pytest.approx(-33.0012, rel=1e-4)
    assert float(post[3]) == pytest.approx(563.544, rel=1e-4)


def test_dmr_bottom_wall_starts_at_one_sixth():
    spec = ProblemSpec2D("dmr", 48, 12, get_scheme("js"), 0.2)
    g = spec.grid()
    qp = apply_boundaries(padded(init_2d(spec, g), g), spec.boundaries(), g, 0.0)
    xs = g.x_padded()
    ghost = qp[:, 2, :]
    post = np.asarray(conservative_2d(*DMR_POST))
    assert np.allclose(ghost[:, xs < 1.0 / 6.0], post[:, None])
    wall = (xs > 1.0 / 6.0) & (xs < 3.0)
    assert np.allclose(ghost[2, wall], -qp[2, 3, wall])


def test_vortex_values():
    rho, u, v, p = vortex_primitive(5.0, 5.0)
    expected = (1.0 - 0.4 * 25.0 * math.e / (8.0 * 1.4 * math.pi**2)) ** 2.5
    assert rho == pytest.approx(expected, rel=1e-14)
    assert rho == pytest.approx(0.49381, abs=1e-5)
    far = vortex_primitive(0.05, 0.05)
    assert np.allclose([float(a) for a in far], 1.0, atol=1e-8)


def test_implosion_centre_state():
    spec = ProblemSpec2D("implosion", 41, 41, get_scheme("js"), 0.1)
    rho, u, v, p = primitive_2d(init_2d(spec))
    assert (rho[20, 20], u[20, 20], v[20, 20], p[20, 20]) == pytest.approx((0.125, 0, 0, 0.14))
    assert (rho[0, 0], p[0, 0]) == pytest.approx((1.0, 1.0))


def test_riemann_variants_differ_only_upper_right():
    a = init_2d(ProblemSpec2D("riemann2d", 20, 20, get_scheme("js"), 0.1))
    b = init_2d(ProblemSpec2D("riemann2d", 20, 20, get_scheme("js"), 0.1,
                              riemann_variant="conventional"))
    differ = np.any(a != b, axis=0)
    g = Grid2D(20, 20, 0.0, 1.0, 0.0, 1.0)
    X, Y = g.mesh()
    assert np.array_equal(differ, (X >= 0.6) & (Y >= 0.6))


# }}}


# {{{ time step


def test_timestep_examples():
    g = Grid2D(100, 100, 0.0, 1.0, 0.0, 1.0)
    q = conservative_2d(np.ones((100, 100)), 0.0, 0.0, 1.0)
    dt = timestep_2d(q, g, 0.5)
    assert dt == pytest.approx(0.5 / (2.0 * 100.0 * math.sqrt(1.4)), rel=1e-14)
    assert dt == pytest.approx(0.0021129, abs=1e-7)
    coarse = Grid2D(50, 50, 0.0, 1.0, 0.0, 1.0)
    qc = conservative_2d(np.ones((50, 50)), 0.0, 0.0, 1.0)
    assert timestep_2d(qc, coarse, 0.5) == pytest.approx(2.0 * dt, rel=1e-14)
    tall = Grid2D(100, 4, 0.0, 1.0, 0.0, 1.0e12)
    qt = conservative_2d(np.ones((4, 100)), 0.0, 0.0, 1.0)
    assert timestep_2d(qt, tall, 0.5) == pytest.approx(0.5 * 0.01 / math.sqrt(1.4), rel=1e-9)


# }}}


# {{{ spatial operator


@pytest.mark.parametrize("name", COMPARED_SCHEMES)
def test_uniform_state_gives_zero(name):
    g = Grid2D(12, 10, 0.0, 1.0, 0.0, 1.0)
    q = conservative_2d(np.full((10, 12), 1.3), 0.4, -0.7, 2.0)
    for bset in (PERIODIC, BoundarySet.uniform("extrapolation")):
        assert np.max(np.abs(euler2d_rhs(q, g, get_scheme(name), bset))) <= 1e-13


@pytest.mark.parametrize("name", ["js", "aims", "arma"])
def test_x_aligned_data_matches_1d(name):
    n = 60
    g = Grid2D(n, 5, 0.0, 1.0, 0.0, 1.0)
    x = g.x
    rho = np.where(x < 0.5, 1.0, 0.125)
    p = np.where(x < 0.5, 1.0, 0.1)
    u = 0.2 * np.sin(2 * np.pi * x)
    q2 = conservative_2d(np.tile(rho, (5, 1)), np.tile(u, (5, 1)), 0.0, np.tile(p, (5, 1)))
    r2 = euler2d_rhs(q2, g, get_scheme(name), BoundarySet.uniform("extrapolation"))
    r1 = euler1d_rhs(conservative(rho, u, p), Grid1D(n, 0.0, 1.0), get_scheme(name))
    assert np.max(np.abs(r2[2])) == 0.0
    for row in range(5):
        assert np.allclose(r2[[0, 1, 3], row], r1, rtol=0.0, atol=1e-12)


def rotate_cw(q: np.ndarray) -> np.ndarray:
    """Field rotated by -90 degrees: ``(x, y) -> (y, -x)``, ``(u, v) -> (v, -u)``."""
    r = np.rot90(q, k=1, axes=(1, 2)).copy()
    r[[1, 2]] = np.stack([r[2], -r[1]])
    return r


@pytest.mark.parametrize("name", COMPARED_SCHEMES)
def test_rotated_data_gives_rotated_rhs(name):
    g = Grid2D(24, 24, 0.0, 1.0, 0.0, 1.0)
    q = smooth_state(g)
    q[0, 5:9, 11:15] *= 1.8
    cs = get_scheme(name)
    a = rotate_cw(euler2d_rhs(q, g, cs, PERIODIC))
    b = euler2d_rhs(rotate_cw(q), g, cs, PERIODIC)
    assert np.max(np.abs(a - b)) <= 1e-11


@pytest.mark.parametrize("name", ["js", "aims", "apma"])
def test_embedded_riemann_along_x_and_y(name):
    n = 80
    x = (np.arange(n) + 0.5) / n
    prim = (np.where(x < 0.5, 1.0, 0.125), np.zeros(n), np.where(x < 0.5, 1.0, 0.1))
    along_x = conservative_2d(np.tile(prim[0], (4, 1)), 0.0, 0.0, np.tile(prim[2], (4, 1)))
    along_y = swap_xy(along_x)
    bset = BoundarySet.uniform("extrapolation")
    sx = ProblemSpec2D("riemann2d", n, 4, get_scheme(name), 0.1)
    sy = ProblemSpec2D("riemann2d", 4, n, get_scheme(name), 0.1)
    rx = run_problem_2d(sx, q0=along_x, bset=bset)
    ry = run_problem_2d(sy, q0=along_y, bset=bset)
    assert rx.steps == ry.steps
    assert np.max(np.abs(rx.q - swap_xy(ry.q))) <= 1e-11


def test_negative_pressure_aborts_with_cell():
    g = Grid2D(10, 10, 0.0, 1.0, 0.0, 1.0)
    q = conservative_2d(np.ones((10, 10)), 0.0, 0.0, 1.0)
    q[3, 4, 7] = -1.0
    with pytest.raises(SolverAbort, match="7"):
        euler2d_rhs(q, g, get_scheme("js"), PERIODIC)


# }}}


# {{{ runs


@pytest.mark.parametrize("name", COMPARED_SCHEMES)
def test_freestream_over_100_steps(name):
    g = Grid2D(12, 12, 0.0, 1.0, 0.0, 1.0)
    q0 = conservative_2d(np.full((12, 12), 1.3), 0.4, -0.7, 2.0)
    cs = get_scheme(name)
    q = q0.copy()
    for k in range(100):
        q = rk3_step(q, lambda v, t: euler2d_rhs(v, g, cs, PERIODIC, t), 1e-3, k * 1e-3)
    assert np.max(np.abs(q - q0)) <= 1e-13


def test_end_time_zero_returns_initial():
    spec = ProblemSpec2D("implosion", 20, 20, get_scheme("aims"), 0.0)
    res = run_problem_2d(spec)
    assert res.steps == 0 and np.array_equal(res.q, init_2d(spec))


@pytest.mark.parametrize("name", ["aims", "rm260"])
def test_vortex_conserves_totals(name):
    spec = ProblemSpec2D("vortex", 32, 32, get_scheme(name), 1.0)
    q0 = init_2d(spec)
    res = run_problem_2d(spec)
    rel = np.abs(res.q.sum(axis=(1, 2)) - q0.sum(axis=(1, 2))) / np.abs(q0.sum(axis=(1, 2)))
    assert np.all(rel <= 1e-10)


@pytest.mark.parametrize("name", COMPARED_SCHEMES)
def test_implosion_is_diagonal_symmetric(name):
    spec = ProblemSpec2D("implosion", 40, 40, get_scheme(name), 0.05)
    rho = run_problem_2d(spec).density
    assert np.max(np.abs(rho - rho.T)) <= 1e-10


@pytest.mark.slow
def test_vortex_error_drops_with_refinement():
    errs = []
    for n in (50, 100):
        spec = ProblemSpec2D("vortex", n, n, get_scheme("aims"), 10.0)
        res = run_problem_2d(spec)
        errs.append(np.mean(np.abs(res.density - init_2d(spec)[0])))
    assert errs[1] < errs[0]
    assert errs[1] < 5e-3


# }}}
