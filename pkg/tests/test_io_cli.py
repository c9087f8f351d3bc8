from __future__ import annotations

import csv
import math
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mappedweno.cli import main, parse_args, read_config
from mappedweno.io import fmt_sci


def read_rows(path: Path) -> list[dict[str, str]]:
    with path.open() as fh:
        return list(csv.DictReader(fh))


# {{{ number format


@pytest.mark.parametrize("value, text", [
    (0.21152e-5, "0.21152E-05"),
    (0.23040e-1, "0.23040E-01"),
    (0.10974, "0.10974E+00"),
    (-1234.5, "-0.12345E+04"),
    (0.0, "0.00000E+00"),
])
def test_fmt_sci_examples(value, text):
    assert fmt_sci(value) == text


@given(st.floats(1e-300, 1e300))
def test_fmt_sci_round_trips_to_five_digits(x):
    text = fmt_sci(x)
    mant = text.split("E")[0]
    assert mant.startswith("0.") and mant[2] != "0" and len(mant) == 7
    assert float(text) == pytest.approx(x, rel=5.1e-5)


# }}}


# {{{ argument handling


def test_unknown_scheme_is_usage_error(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["adr", "--scheme", "weno-q", "--out", str(tmp_path)])
    assert exc.value.code == 2
    assert list(tmp_path.iterdir()) == []
    with pytest.raises(SystemExit) as exc:
        main(["convergence", "--scheme", "aim,nope", "--out", str(tmp_path)])
    assert exc.value.code == 2


def test_scheme_aliases_accepted():
    args = parse_args(["convergence", "--scheme", "WENO-AIMS,rm,JS,weno-im"])
    assert args.scheme == ["aims", "rm260", "js", "im"]


def test_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# advection run\ncells = 64\ntfinal=0.5\nscheme = rm260\n")
    assert read_config(cfg) == {"cells": "64", "tfinal": "0.5", "scheme": "rm260"}
    args = parse_args(["advect", "--config", str(cfg), "--tfinal", "0.25"])
    assert args.cells == 64 and args.scheme == "rm260" and args.tfinal == 0.25


def test_config_rejects_unknown_keys(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("resolution = 3\n")
    with pytest.raises(SystemExit) as exc:
        parse_args(["advect", "--config", str(cfg)])
    assert exc.value.code == 2


# }}}


# {{{ subcommands


def test_advect_writes_profile_and_t0_is_exact(tmp_path):
    assert main(["advect", "--case", "case3", "--scheme", "aims", "--cells", "100",
                 "--tfinal", "0", "--out", str(tmp_path)]) == 0
    rows = read_rows(tmp_path / "advect_case3_aims.csv")
    assert list(rows[0]) == ["x", "u_numeric", "u_exact"]
    assert len(rows) == 100
    assert all(r["u_numeric"] == r["u_exact"] for r in rows)


def test_advect_case3_bounded(tmp_path):
    assert main(["advect", "--case", "case3", "--scheme", "arma", "--out", str(tmp_path)]) == 0
    u = [float(r["u_numeric"]) for r in read_rows(tmp_path / "advect_case3_arma.csv")]
    assert -0.05 <= min(u) and max(u) <= 1.05


def test_advect_case5_matches_table(tmp_path):
    assert main(["advect", "--case", "case5", "--scheme", "aims", "--cfl", "0.5",
                 "--out", str(tmp_path)]) == 0
    rows = read_rows(tmp_path / "advect_case5_aims.csv")
    err = np.mean([abs(float(r["u_numeric"]) - float(r["u_exact"])) for r in rows])
    assert err == pytest.approx(0.22663e-1, rel=0.05)


def test_convergence_table_layout(tmp_path):
    assert main(["convergence", "--scheme", "aim,pm6,apms", "--cells", "50,100",
                 "--out", str(tmp_path)]) == 0
    rows = read_rows(tmp_path / "convergence_case1_aim.csv")
    assert list(rows[0]) == ["N", "error", "order", "cpu_time"]
    assert rows[0]["order"] == "-" and float(rows[1]["order"]) == pytest.approx(5.0, abs=0.1)
    assert float(rows[0]["error"]) == pytest.approx(0.21152e-5, rel=0.1)
    pm6 = read_rows(tmp_path / "convergence_case1_pm6.csv")[0]["error"]
    apms = read_rows(tmp_path / "convergence_case1_apms.csv")[0]["error"]
    # identical accuracy rows; the absolute value is checked by the acceptance suite
    assert pm6 == apms


def test_runs_are_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        assert main(["euler", "--problem", "sod", "--scheme", "aima", "--out", str(out)]) == 0
        assert main(["convergence", "--scheme", "aims", "--cells", "50,100",
                     "--out", str(out)]) == 0
    assert (a / "euler_sod_aima_200.csv").read_bytes() == (b / "euler_sod_aima_200.csv").read_bytes()

    def strip_time(p: Path):
        return [{k: v for k, v in r.items() if k != "cpu_time"} for r in read_rows(p)]

    name = "convergence_case1_aims.csv"
    assert strip_time(a / name) == strip_time(b / name)


def test_jobs_do_not_change_output(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    main(["chi-sweep", "--scheme", "aims", "--chis", "1,100", "--times", "0.5",
          "--out", str(a)])
    main(["chi-sweep", "--scheme", "aims", "--chis", "1,100", "--times", "0.5",
          "--jobs", "2", "--out", str(b)])

    def strip_time(p: Path):
        return [{k: v for k, v in r.items() if k != "cpu_time"} for r in read_rows(p)]

    assert strip_time(a / "chi_sweep_aims.csv") == strip_time(b / "chi_sweep_aims.csv")


def test_sod_profile_monotone_rarefaction(tmp_path):
    assert main(["euler", "--problem", "sod", "--scheme", "apma", "--out", str(tmp_path)]) == 0
    rows = read_rows(tmp_path / "euler_sod_apma_200.csv")
    x = np.array([float(r["x"]) for r in rows])
    rho = np.array([float(r["rho"]) for r in rows])
    fan = (x > 0.55) & (x < 0.5 + math.sqrt(1.4) * 0.14 - 0.01)
    assert np.all(np.diff(rho[fan]) >= -1e-3)


def test_dmr_initial_dump(tmp_path):
    assert main(["euler", "--problem", "dmr", "--grid", "40x10", "--tfinal", "0",
                 "--scheme", "js", "--out", str(tmp_path)]) == 0
    rows = read_rows(tmp_path / "euler_dmr_js_40x10.csv")
    assert list(rows[0])[:3] == ["x", "y", "rho"]
    for r in rows:
        x, y, rho = float(r["x"]), float(r["y"]), float(r["rho"])
        assert (rho == 8.0) == (y > math.sqrt(3.0) * (x - 1.0 / 6.0))


def test_solver_abort_gives_exit_one(tmp_path, capsys):
    code = main(["euler", "--problem", "dmr", "--grid", "40x10", "--tfinal", "0.01",
                 "--scheme", "aims", "--out", str(tmp_path)])
    assert code == 1
    err = capsys.readouterr().err
    assert "solver abort" in err and "p=-" in err and "cell" in err


def test_adr_outputs_include_upwind(tmp_path):
    assert main(["adr", "--scheme", "aims", "--chis", "0,1,10,100", "--points", "32",
                 "--out", str(tmp_path)]) == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert "adr_upwind.csv" in names
    assert sum(n.startswith("adr_aims") for n in names) == 4
    rows = read_rows(tmp_path / "adr_upwind.csv")
    assert list(rows[0]) == ["phi", "dispersion", "dissipation"] and len(rows) == 16


def test_map_dump(tmp_path):
    assert main(["map-dump", "--scheme", "m", "--d", "0.6", "--samples", "11",
                 "--out", str(tmp_path)]) == 0
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    rows = read_rows(files[0])
    assert len(rows) == 11 and float(rows[0]["g"]) == 0.0
    assert float(rows[-1]["g"]) == pytest.approx(1.0)


def test_out_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("WENO_OUT_DIR", str(tmp_path))
    assert main(["map-dump", "--scheme", "js", "--d", "0.1", "--samples", "5"]) == 0
    assert len(list(tmp_path.iterdir())) == 1


# }}}
