"""CSV writers with a fixed, byte-reproducible number format."""

from __future__ import annotations

import csv
import math
import os
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from mappedweno.analysis import ErrorReport, SpectrumCurve, SweepRow
from mappedweno.euler2d.flux import primitive_2d
from mappedweno.euler2d.grid import Grid2D
from mappedweno.hyperbolic1d.euler import GAMMA

OUT_DIR_ENV = "WENO_OUT_DIR"


def fmt_sci(value: float, digits: int = 5) -> str:
    """``0.21152E-05`` style: mantissa in [0.1, 1) with ``digits`` digits."""
    value = float(value)
    if math.isnan(value) or math.isinf(value):
        return str(value)
    if value == 0.0:
        return "0." + "0" * digits + "E+00"
    mant, exp = f"{abs(value):.{digits - 1}E}".split("E")
    sign = "-" if value < 0.0 else ""
    return f"{sign}0.{mant.replace('.', '')}E{int(exp) + 1:+03d}"


def fmt_time(seconds: float) -> str:
    return f"{seconds:.5f}"


def default_out_dir() -> Path:
    return Path(os.environ.get(OUT_DIR_ENV, "."))


def _write(path: Path | str, header: Sequence[str], rows: Iterable[Sequence[str]]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return path


def write_columns(path, columns: Mapping[str, np.ndarray]) -> Path:
    """Equal-length named columns, all in :func:`fmt_sci` format."""
    names = list(columns)
    arrays = [np.asarray(columns[n], dtype=np.float64).ravel() for n in names]
    if len({a.size for a in arrays}) > 1:
        raise ValueError("columns differ in length")
    return _write(path, names, ([fmt_sci(v) for v in row] for row in zip(*arrays)))


def write_mapping_curve(path, omega: np.ndarray, g: np.ndarray) -> Path:
    return write_columns(path, {"omega": omega, "g": g})


def write_profile(path, x: np.ndarray, fields: Mapping[str, np.ndarray]) -> Path:
    return write_columns(path, {"x": x, **fields})


def write_spectrum(path, curve: SpectrumCurve) -> Path:
    return write_columns(path, {"phi": curve.phi, "dispersion": curve.dispersion,
                                "dissipation": curve.dissipation})


def write_convergence(path, reports: Sequence[ErrorReport]) -> Path:
    rows = [(str(r.n_cells), fmt_sci(r.error),
             "-" if r.order is None else f"{r.order:.2f}", fmt_time(r.cpu_time))
            for r in reports]
    return _write(path, ("N", "error", "order", "cpu_time"), rows)


def write_chi_sweep(path, rows: Sequence[SweepRow], times: Sequence[float]) -> Path:
    header = ["scheme", "chi"] + [f"t={t:g}" for t in times] + ["cpu_time"]
    body = [[r.label, "-" if r.chi is None else f"{r.chi:g}"]
            + [fmt_sci(e) for e in r.errors] + [fmt_time(r.cpu_time)] for r in rows]
    return _write(path, header, body)


def write_field_2d(path, grid: Grid2D, q: np.ndarray, gamma: float = GAMMA,
                   density_only: bool = False) -> Path:
    """Row-major (y outer, x inner) dump ``x,y,rho[,u,v,p]``."""
    X, Y = grid.mesh()
    rho, u, v, p = primitive_2d(q, gamma)
    cols = {"x": X, "y": Y, "rho": rho}
    if not density_only:
        cols.update(u=u, v=v, p=p)
    return write_columns(path, cols)


def write_slice_2d(path, grid: Grid2D, q: np.ndarray, y: float, gamma: float = GAMMA) -> Path:
    """Primitive variables along the row of cell centres nearest to ``y``."""
    j = int(np.argmin(np.abs(grid.y - y)))
    rho, u, v, p = primitive_2d(q[:, j:j + 1, :], gamma)
    return write_columns(path, {"x": grid.x, "rho": rho, "u": u, "v": v, "p": p})
