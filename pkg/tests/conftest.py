from __future__ import annotations

import os

import numpy as np
import pytest


def pytest_addoption(parser):
    parser.addoption("--run-nightly", action="store_true", default=False,
                     help="also run the long-time nightly checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-nightly") or os.environ.get("WENO_NIGHTLY") == "1":
        return
    skip = pytest.mark.skip(reason="nightly only: pass --run-nightly or set WENO_NIGHTLY=1")
    for item in items:
        if "nightly" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(autouse=True)
def _quiet_numpy():
    with np.errstate(all="ignore"):
        yield


_VERDICTS: list[str] = []


@pytest.fixture(scope="session")
def verdicts():
    """Collects the one-line acceptance verdicts shown in the terminal summary."""
    return _VERDICTS


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in _VERDICTS:
            terminalreporter.write_line(line)
