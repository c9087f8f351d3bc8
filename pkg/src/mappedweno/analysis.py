"""Error norms, convergence tables, dispersion spectra and the chi sweep."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from mappedweno.hyperbolic1d.advection import advect_rk3
from mappedweno.hyperbolic1d.problems import ProblemSpec1D, advection_exact
from mappedweno.hyperbolic1d.run import run_problem_1d
from mappedweno.mapping import MappingSpec
from mappedweno.schemes import CompiledScheme, get_scheme

CHI_FAMILIES = ("aims", "aima", "arms", "arma", "apms", "apma")
#: the non-adaptive scheme each adaptive family collapses to at s = 0 / chi = 0
FAMILY_BASELINE = {"aims": "aim", "aima": "aim", "arms": "rm260",
                   "arma": "rm260", "apms": "pm6", "apma": "pm6"}
DEFAULT_CHIS = (1.0, 10.0, 100.0, 1000.0)
DEFAULT_SWEEP_TIMES = (2.0, 20.0, 200.0, 2000.0)
ADR_CFL = 1.0e-3


def l1_error(numeric: Sequence[float], exact: Sequence[float]) -> float:
    """Mean absolute difference ``(1/N) sum |u_j - u_exact,j|``."""
    a = np.asarray(numeric, dtype=np.float64)
    b = np.asarray(exact, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    if a.size == 0:
        raise ValueError("empty fields")
    return float(np.mean(np.abs(a - b)))


def convergence_order(e_coarse: float, e_fine: float, ratio: float = 2.0) -> float:
    """Observed order ``log(e_coarse / e_fine) / log(ratio)``."""
    if e_coarse <= 0.0 or e_fine <= 0.0:
        raise ValueError(f"errors must be positive, got {e_coarse}, {e_fine}")
    return math.log(e_coarse / e_fine) / math.log(ratio)


@dataclass(frozen=True)
class ErrorReport:
    n_cells: int
    error: float
    order: float | None
    cpu_time: float


def convergence_study(
    scheme: MappingSpec,
    case: str = "case1",
    sizes: Iterable[int] = (50, 100, 200, 400, 800),
    t_end: float = 2.0,
    dt_rule: str = "accuracy",
    cfl: float = 0.5,
) -> list[ErrorReport]:
    """L1 errors against the translated exact profile on successively doubled grids."""
    rows: list[ErrorReport] = []
    for n in sizes:
        spec = ProblemSpec1D(case, n, scheme, t_end, dt_rule=dt_rule, cfl=cfl)
        res = run_problem_1d(spec)
        err = l1_error(res.u, advection_exact(case, res.x, t_end))
        order = None
        if rows:
            prev = rows[-1]
            order = convergence_order(prev.error, err, n / prev.n_cells)
        rows.append(ErrorReport(n, err, order, res.wall_time))
    return rows


# {{{ spectral analysis


@dataclass(frozen=True)
class SpectrumCurve:
    """Modified wavenumber samples; ``dissipation`` is ``Im`` and is <= 0 when damping."""

    label: str
    phi: np.ndarray
    dispersion: np.ndarray
    dissipation: np.ndarray

    def __post_init__(self) -> None:
        if not (self.phi.shape == self.dispersion.shape == self.dissipation.shape):
            raise ValueError("spectrum arrays must share one shape")
        if np.any(np.diff(self.phi) <= 0.0):
            raise ValueError("wavenumbers must increase strictly")

    def rows(self):
        return zip(self.phi, self.dispersion, self.dissipation)


def upwind_stencil() -> np.ndarray:
    """Flux weights on ``u[j-2..j+2]`` of the optimal-weight fifth-order scheme."""
    return np.array([2.0, -13.0, 47.0, 27.0, -3.0]) / 60.0


def upwind_modified_wavenumber(phi: np.ndarray | float) -> np.ndarray:
    """Closed-form ``Phi(phi)`` of the linear fifth-order upwind flux difference.

    For ``u_j = exp(i phi j)`` the semi-discrete operator is
    ``-i Phi / dx``; ``Phi = -i (1 - e^{-i phi}) sum_s c_s e^{i s phi}``.
    """
    phi = np.asarray(phi, dtype=np.float64)
    shifts = np.arange(-2, 3)
    sym = np.exp(1j * np.multiply.outer(phi, shifts)) @ upwind_stencil()
    return -1j * (1.0 - np.exp(-1j * phi)) * sym


def adr_spectrum(
    scheme: MappingSpec | str, n_points: int = 128, cfl: float = ADR_CFL
) -> SpectrumCurve:
    """Approximate dispersion relation from one tiny RK3 step per wavenumber.

    Mode ``k`` starts from ``sin(phi j)`` (``cos`` at the Nyquist mode, where
    the sine vanishes on the nodes) on a periodic grid with ``dx = 1/n``;
    ``Phi = (i dx / dt) ln(u_hat^1 / u_hat^0)`` for the k-th DFT coefficient.
    """
    if n_points < 16 or n_points % 2:
        raise ValueError(f"n_points must be even and at least 16, got {n_points}")
    if isinstance(scheme, str):
        scheme = get_scheme(scheme)
    cs = CompiledScheme.from_spec(scheme)
    dx = 1.0 / n_points
    dt = cfl * dx
    j = np.arange(n_points)
    ks = np.arange(1, n_points // 2 + 1)
    phis = 2.0 * math.pi * ks / n_points
    disp = np.empty(ks.size)
    diss = np.empty(ks.size)
    for idx, (k, phi) in enumerate(zip(ks, phis)):
        u0 = np.cos(phi * j) if 2 * k == n_points else np.sin(phi * j)
        u1, bad = advect_rk3(u0, np.array([dt]), True, dx, cs.kind, cs.par, cs.coeffs)
        if bad >= 0:
            raise FloatingPointError(f"non-finite update at wavenumber index {k}")
        h0 = np.fft.fft(u0)[k]
        h1 = np.fft.fft(u1)[k]
        if abs(h0) < 1.0e-12 * n_points:
            raise ValueError(f"degenerate Fourier coefficient at k={k}")
        big_phi = 1j * dx / dt * cmath.log(h1 / h0)
        disp[idx] = big_phi.real
        diss[idx] = big_phi.imag
    return SpectrumCurve(scheme.label, phis, disp, diss)


def upwind_curve(n_points: int = 128) -> SpectrumCurve:
    phis = 2.0 * math.pi * np.arange(1, n_points // 2 + 1) / n_points
    w = upwind_modified_wavenumber(phis)
    return SpectrumCurve("upwind", phis, w.real, w.imag)


def dissipation_distance(
    curve: SpectrumCurve, reference: SpectrumCurve, band: tuple[float, float] = (0.5, 2.5)
) -> float:
    """L2 distance between two dissipation curves on the wavenumber band."""
    if not np.array_equal(curve.phi, reference.phi):
        raise ValueError("curves are sampled at different wavenumbers")
    m = (curve.phi >= band[0]) & (curve.phi <= band[1])
    return float(np.sqrt(np.sum((curve.dissipation[m] - reference.dissipation[m]) ** 2)))


# }}}


# {{{ chi sweep


@dataclass(frozen=True)
class SweepRow:
    label: str
    chi: float | None
    errors: tuple[float, ...]
    cpu_time: float


def chi_sweep(
    family: str,
    chis: Iterable[float] = DEFAULT_CHIS,
    times: Sequence[float] = DEFAULT_SWEEP_TIMES,
    n_cells: int = 200,
    cfl: float = 0.5,
    include_baseline: bool = True,
    c: float | None = None,
) -> list[SweepRow]:
    """L1 errors of the composite profile at each time for every chi.

    One run per chi to ``max(times)`` with snapshots at the others. The
    family's non-adaptive baseline comes first when ``include_baseline``.
    """
    family = family.lower()
    if family not in CHI_FAMILIES:
        raise KeyError(f"unknown chi family {family!r}; choose from {', '.join(CHI_FAMILIES)}")
    times = tuple(sorted(float(t) for t in times))
    runs: list[tuple[str, float | None, MappingSpec]] = []
    if include_baseline:
        base = FAMILY_BASELINE[family]
        runs.append((base, None, get_scheme(base, c=c)))
    for chi in chis:
        runs.append((family, float(chi), get_scheme(family, chi=chi, c=c)))

    rows = []
    for label, chi, spec in runs:
        problem = ProblemSpec1D("case5", n_cells, spec, times[-1], dt_rule="fixed",
                                cfl=cfl, snapshot_times=times)
        res = run_problem_1d(problem)
        errs = tuple(l1_error(res.snapshots[t], advection_exact("case5", res.x, t))
                     for t in times)
        rows.append(SweepRow(label, chi, errs, res.wall_time))
    return rows


# }}}

__all__ = [
    "CHI_FAMILIES", "FAMILY_BASELINE", "ErrorReport", "SpectrumCurve", "SweepRow",
    "adr_spectrum", "chi_sweep", "convergence_order", "convergence_study",
    "dissipation_distance", "l1_error", "upwind_curve",
    "upwind_modified_wavenumber", "upwind_stencil",
]
