import sys
from pathlib import Path

import pytest

from moranspec import MoranMeasure

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def cantor3():
    """rho = 1/2, N_n = 3."""
    return MoranMeasure.build(1, 2, 1, period=[3])


@pytest.fixture
def sqrt23():
    """rho = (2/3)^(1/2), digits 5, 7, 5, 7, ..."""
    return MoranMeasure.build(2, 3, 2, period=[5, 7])


@pytest.fixture
def p5q7():
    """rho = 5/7, N_n = 5."""
    return MoranMeasure.build(5, 7, 1, period=[5])


@pytest.fixture
def two_fifths():
    return MoranMeasure.build(2, 5, 1, period=[3])


def write_cfg(path: Path, text: str) -> Path:
    path.write_text(text, encoding="utf-8")
    return path


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
