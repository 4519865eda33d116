import math

import pytest

from oddconvex.series import f0_coefficients, section

SHARP = math.sqrt(2) / 3


@pytest.fixture
def s30():
    return section(f0_coefficients(2), 2)


@pytest.fixture
def s50():
    return section(f0_coefficients(3), 3)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
