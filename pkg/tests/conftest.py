import math

import pytest

from klein_lhm.constants import uev_to_joule
from klein_lhm.media import MediumDispersion

OMEGA_C = 2 * math.pi * 5e9
E_KLEIN = uev_to_joule(20.7)
V_KLEIN = uev_to_joule(70.63)

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def fitted():
    return MediumDispersion.fitted()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
