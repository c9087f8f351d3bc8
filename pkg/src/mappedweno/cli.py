"""Command-line driver: ``mappedweno <subcommand> [options]``.

Every subcommand writes CSV files into ``--out`` (default: ``$WENO_OUT_DIR``
or the working directory). Options may also come from a ``key=value`` file
given with ``--config``; flags on the command line take precedence.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from mappedweno import io
from mappedweno.analysis import (
    CHI_FAMILIES,
    DEFAULT_CHIS,
    adr_spectrum,
    chi_sweep,
    convergence_study,
    l1_error,
    upwind_curve,
)
from mappedweno.errors import SolverAbort
from mappedweno.euler2d.problems import DEFAULT_END_TIMES_2D, DEFAULT_GRIDS_2D, PROBLEMS_2D, ProblemSpec2D
from mappedweno.euler2d.run import run_problem_2d
from mappedweno.hyperbolic1d.euler import primitive
from mappedweno.hyperbolic1d.problems import ProblemSpec1D, advection_exact
from mappedweno.hyperbolic1d.run import run_problem_1d
from mappedweno.mapping import mapping_curve
from mappedweno.reconstruction import OPTIMAL_WEIGHTS
from mappedweno.schemes import EXTRA_SCHEMES, COMPARED_SCHEMES, get_scheme

EULER_1D_END_TIMES = {"sod": 0.14, "shu-osher": 1.8}
REFERENCE_CELLS = 1000


# {{{ argument types


def _csv_list(conv: Callable[[str], object]):
    def parse(text: str) -> list:
        items = [t for t in str(text).replace(" ", "").split(",") if t]
        if not items:
            raise argparse.ArgumentTypeError("expected a comma-separated list")
        return [conv(t) for t in items]
    parse.__name__ = f"{conv.__name__} list"
    return parse


def _scheme_name(text: str) -> str:
    name = text.strip().lower()
    try:
        spec = get_scheme(name)
    except KeyError:
        raise argparse.ArgumentTypeError(
            f"unknown scheme {text!r}; choose from {', '.join(COMPARED_SCHEMES + EXTRA_SCHEMES)}"
        ) from None
    # aliases such as "weno-aims" or "rm" resolve to the short preset name
    return next((k for k in COMPARED_SCHEMES + EXTRA_SCHEMES if get_scheme(k) == spec), name)


def _family_name(text: str) -> str:
    name = text.strip().lower()
    if name not in CHI_FAMILIES:
        raise argparse.ArgumentTypeError(
            f"unknown chi family {text!r}; choose from {', '.join(CHI_FAMILIES)}")
    return name


def _case_tag(text: str) -> str:
    tag = text.strip().lower()
    tag = tag if tag.startswith("case") else f"case{tag}"
    if tag not in ("case1", "case2", "case3", "case4", "case5"):
        raise argparse.ArgumentTypeError(f"unknown advection case {text!r}")
    return tag


def _grid_size(text: str) -> tuple[int, int]:
    parts = str(text).lower().split("x")
    try:
        sizes = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like 200 or 480x120, got {text!r}") from None
    if len(sizes) == 1:
        sizes = sizes * 2
    if len(sizes) != 2 or min(sizes) < 1:
        raise argparse.ArgumentTypeError(f"bad grid size {text!r}")
    return sizes[0], sizes[1]


def _bool(text) -> bool:
    if isinstance(text, bool):
        return text
    value = str(text).strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


# }}}


def read_config(path: str | Path) -> dict[str, str]:
    """Plain ``key=value`` lines; ``#`` starts a comment, dashes equal underscores."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", type=Path, default=None,
                   help="output directory (default: $WENO_OUT_DIR or .)")
    p.add_argument("--config", type=Path, default=None, help="key=value option file")
    p.add_argument("--jobs", type=int, default=1, help="parallel independent runs")
    p.add_argument("--chi", type=float, default=None, help="override chi of adaptive schemes")
    p.add_argument("--c", type=float, default=None, help="override amplitude scale c")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mappedweno", description="Mapped-WENO benchmark driver.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convergence", help="L1 errors and orders on smooth advection")
    p.add_argument("--case", type=_case_tag, default="case1")
    p.add_argument("--scheme", type=_csv_list(_scheme_name), default=list(COMPARED_SCHEMES))
    p.add_argument("--cells", type=_csv_list(int), default=[50, 100, 200, 400, 800])
    p.add_argument("--tfinal", type=float, default=2.0)
    p.add_argument("--cfl", type=float, default=0.5, help="factor in dt = cfl * dx^(5/3)")
    p.add_argument("--dt-rule", choices=("accuracy", "accuracy-literal"), default="accuracy")
    _common(p)

    p = sub.add_parser("advect", help="advection profile of one case")
    p.add_argument("--case", type=_case_tag, default="case5")
    p.add_argument("--scheme", type=_scheme_name, default="aims")
    p.add_argument("--cells", type=int, default=200)
    p.add_argument("--tfinal", type=float, default=2.0)
    p.add_argument("--cfl", type=float, default=0.6, help="dt = cfl * dx")
    _common(p)

    p = sub.add_parser("euler", help="1D or 2D Euler benchmark")
    p.add_argument("--problem", choices=("sod", "shu-osher") + PROBLEMS_2D, default="sod")
    p.add_argument("--scheme", type=_scheme_name, default="aims")
    p.add_argument("--cells", type=int, default=200, help="1D cell count")
    p.add_argument("--grid", type=_grid_size, default=None, help="2D grid, e.g. 480x120")
    p.add_argument("--tfinal", type=float, default=None)
    p.add_argument("--cfl", type=float, default=0.5)
    p.add_argument("--paper-literal-ic", type=_bool, nargs="?", const=True, default=False,
                   help="use the printed constant right state for shu-osher")
    p.add_argument("--riemann-variant", choices=("printed", "conventional"), default="printed")
    p.add_argument("--reference", type=_bool, nargs="?", const=True, default=False,
                   help="also run a 1000-cell reference (1D only)")
    p.add_argument("--slice-y", type=float, default=None, help="2D slice height")
    _common(p)

    p = sub.add_parser("adr", help="dispersion/dissipation spectra")
    p.add_argument("--scheme", type=_csv_list(_scheme_name), default=["aims"])
    p.add_argument("--chis", type=_csv_list(float), default=None,
                   help="chi values to sweep (adaptive schemes)")
    p.add_argument("--cs", type=_csv_list(float), default=None,
                   help="c values to sweep (adaptive schemes)")
    p.add_argument("--points", type=int, default=128)
    _common(p)

    p = sub.add_parser("chi-sweep", help="composite-profile errors against chi")
    p.add_argument("--scheme", type=_csv_list(_family_name), default=list(CHI_FAMILIES))
    p.add_argument("--chis", type=_csv_list(float), default=list(DEFAULT_CHIS))
    p.add_argument("--times", type=_csv_list(float), default=[2.0, 20.0])
    p.add_argument("--cells", type=int, default=200)
    p.add_argument("--cfl", type=float, default=0.5)
    _common(p)

    p = sub.add_parser("map-dump", help="mapping-function curves (omega, g)")
    p.add_argument("--scheme", type=_csv_list(_scheme_name), default=list(COMPARED_SCHEMES))
    p.add_argument("--d", type=_csv_list(float), default=list(OPTIMAL_WEIGHTS))
    p.add_argument("--s", type=float, default=1.0, help="fixed amplitude for adaptive maps")
    p.add_argument("--samples", type=int, default=1001)
    _common(p)
    return parser


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", type=Path, default=None)
    known, _ = pre.parse_known_args(argv)
    if known.config is not None and argv and not argv[0].startswith("-"):
        try:
            values = read_config(known.config)
        except (OSError, ValueError) as exc:
            parser.error(str(exc))
        subparser = parser._subparsers._group_actions[0].choices[argv[0]]
        dests = {a.dest for a in subparser._actions}
        unknown = sorted(set(values) - dests)
        if unknown:
            parser.error(f"unknown config keys: {', '.join(unknown)}")
        # string defaults go through each option's type converter
        subparser.set_defaults(**values)
    return parser.parse_args(argv)


@dataclass
class Outcome:
    files: list[Path]
    aborted: list[str]


def _pmap(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _safe(fn, *args):
    try:
        return fn(*args), None
    except SolverAbort as exc:
        return None, str(exc)


# {{{ subcommands


def _convergence_task(item):
    name, case, cells, t_end, cfl, rule, chi, c = item
    return _safe(lambda: convergence_study(get_scheme(name, chi=chi, c=c), case, cells,
                                           t_end, dt_rule=rule, cfl=cfl))


def cmd_convergence(args, out: Path) -> Outcome:
    items = [(s, args.case, args.cells, args.tfinal, args.cfl, args.dt_rule, args.chi, args.c)
             for s in args.scheme]
    files, aborted = [], []
    for (name, *_), (reports, err) in zip(items, _pmap(_convergence_task, items, args.jobs)):
        if err:
            aborted.append(f"{name}: {err}")
            continue
        files.append(io.write_convergence(out / f"convergence_{args.case}_{name}.csv", reports))
        for r in reports:
            order = "-" if r.order is None else f"{r.order:.2f}"
            print(f"{name:6s} N={r.n_cells:5d} error={io.fmt_sci(r.error)} order={order}")
    return Outcome(files, aborted)


def cmd_advect(args, out: Path) -> Outcome:
    spec = ProblemSpec1D(args.case, args.cells, get_scheme(args.scheme, chi=args.chi, c=args.c),
                         args.tfinal, dt_rule="fixed", cfl=args.cfl)
    res, err = _safe(run_problem_1d, spec)
    if err:
        return Outcome([], [f"{args.scheme}: {err}"])
    exact = advection_exact(args.case, res.x, args.tfinal)
    path = io.write_profile(out / f"advect_{args.case}_{args.scheme}.csv", res.x,
                            {"u_numeric": res.u, "u_exact": exact})
    if args.case != "case4":
        print(f"{args.scheme} {args.case} t={args.tfinal:g} "
              f"L1 error={io.fmt_sci(l1_error(res.u, exact))}")
    return Outcome([path], [])


def _euler1d_files(args, out: Path, scheme) -> Outcome:
    t_end = EULER_1D_END_TIMES[args.problem] if args.tfinal is None else args.tfinal
    files, aborted = [], []
    sizes = [args.cells] + ([REFERENCE_CELLS] if args.reference else [])
    for n in sizes:
        spec = ProblemSpec1D(args.problem, n, scheme, t_end, dt_rule="euler", cfl=args.cfl,
                             constant_right_state=args.paper_literal_ic)
        res, err = _safe(run_problem_1d, spec)
        if err:
            aborted.append(f"{args.scheme} N={n}: {err}")
            continue
        rho, u, p = primitive(res.u)
        tag = "reference" if n == REFERENCE_CELLS and n != args.cells else str(n)
        files.append(io.write_profile(out / f"euler_{args.problem}_{args.scheme}_{tag}.csv",
                                      res.x, {"rho": rho, "u": u, "p": p}))
    return Outcome(files, aborted)


def cmd_euler(args, out: Path) -> Outcome:
    scheme = get_scheme(args.scheme, chi=args.chi, c=args.c)
    if args.problem in EULER_1D_END_TIMES:
        return _euler1d_files(args, out, scheme)
    nx, ny = args.grid or DEFAULT_GRIDS_2D[args.problem]
    t_end = DEFAULT_END_TIMES_2D[args.problem] if args.tfinal is None else args.tfinal
    spec = ProblemSpec2D(args.problem, nx, ny, scheme, t_end, cfl=args.cfl,
                         riemann_variant=args.riemann_variant)
    res, err = _safe(run_problem_2d, spec)
    if err:
        return Outcome([], [f"{args.scheme}: {err}"])
    stem = f"euler_{args.problem}_{args.scheme}_{nx}x{ny}"
    files = [io.write_field_2d(out / f"{stem}.csv", res.grid, res.q, spec.gamma)]
    y = args.slice_y if args.slice_y is not None else (5.0 if args.problem == "vortex" else None)
    if y is not None:
        files.append(io.write_slice_2d(out / f"{stem}_slice_y{y:g}.csv", res.grid, res.q, y,
                                       spec.gamma))
    print(f"{args.problem} {args.scheme} {nx}x{ny} t={res.t:g} steps={res.steps}")
    return Outcome(files, [])


def _adr_task(item):
    name, chi, c, points = item
    return _safe(adr_spectrum, get_scheme(name, chi=chi, c=c), points)


def cmd_adr(args, out: Path) -> Outcome:
    items = []
    for name in args.scheme:
        adaptive = get_scheme(name).is_adaptive
        chis = args.chis if (args.chis and adaptive) else [args.chi]
        cs = args.cs if (args.cs and adaptive) else [args.c]
        items += [(name, chi, c, args.points) for chi in chis for c in cs]
    files = [io.write_spectrum(out / "adr_upwind.csv", upwind_curve(args.points))]
    aborted = []
    for (name, chi, c, _), (curve, err) in zip(items, _pmap(_adr_task, items, args.jobs)):
        if err:
            aborted.append(f"{name}: {err}")
            continue
        tag = name
        if chi is not None:
            tag += f"_chi{chi:g}"
        if c is not None:
            tag += f"_c{c:g}"
        files.append(io.write_spectrum(out / f"adr_{tag}.csv", curve))
    return Outcome(files, aborted)


def _sweep_task(item):
    family, chis, times, cells, cfl, c = item
    return _safe(lambda: chi_sweep(family, chis, times, cells, cfl, c=c))


def cmd_chi_sweep(args, out: Path) -> Outcome:
    times = sorted(args.times)
    items = [(f, args.chis, times, args.cells, args.cfl, args.c) for f in args.scheme]
    files, aborted = [], []
    for (family, *_), (rows, err) in zip(items, _pmap(_sweep_task, items, args.jobs)):
        if err:
            aborted.append(f"{family}: {err}")
            continue
        files.append(io.write_chi_sweep(out / f"chi_sweep_{family}.csv", rows, times))
        for r in rows:
            chi = "-" if r.chi is None else f"{r.chi:g}"
            print(f"{r.label:6s} chi={chi:>5s} " + " ".join(io.fmt_sci(e) for e in r.errors))
    return Outcome(files, aborted)


def cmd_map_dump(args, out: Path) -> Outcome:
    files = []
    for name in args.scheme:
        spec = get_scheme(name, chi=args.chi, c=args.c)
        for d in args.d:
            omega, g = mapping_curve(spec, d, s=args.s if spec.is_adaptive else None,
                                     samples=args.samples)
            files.append(io.write_mapping_curve(out / f"map_{name}_d{d:g}.csv", omega, g))
    return Outcome(files, [])


COMMANDS = {
    "convergence": cmd_convergence,
    "advect": cmd_advect,
    "euler": cmd_euler,
    "adr": cmd_adr,
    "chi-sweep": cmd_chi_sweep,
    "map-dump": cmd_map_dump,
}


# }}}


def main(argv: Sequence[str] | None = None) -> int:
    args = parse_args(argv)
    out = args.out if args.out is not None else io.default_out_dir()
    out.mkdir(parents=True, exist_ok=True)
    np.seterr(all="ignore")
    outcome = COMMANDS[args.command](args, out)
    for path in outcome.files:
        print(f"wrote {path}")
    for msg in outcome.aborted:
        print(f"solver abort: {msg}", file=sys.stderr)
    return 1 if outcome.aborted else 0


if __name__ == "__main__":
    sys.exit(main())
