from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from skeinkit.diagram import diagram  # noqa: E402

DATA = HERE / "data"


def load_corpus() -> dict:
    """Name -> LinkDiagram for every line of the frozen corpus."""
    out = {}
    for line in (DATA / "corpus.pd").read_text().splitlines():
        if "#" not in line or line.startswith("#"):
            continue
        code, name = line.split("#", 1)
        out[name.strip()] = diagram(code)
    return out


def load_oracle_values() -> dict:
    return json.loads((DATA / "oracle_values.json").read_text())


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def oracle_values():
    return load_oracle_values()


def pytest_terminal_summary(terminalreporter):
    from _report import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(LINES):
            terminalreporter.write_line(LINES[n])
