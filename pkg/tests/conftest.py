import mpmath
import pytest

from harmonic_cert.harmonic import gamma_enclosure

# enclosure widths reach 1e-60; references need more digits than that
mpmath.mp.dps = 120

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def gamma_1e4():
    return gamma_enclosure(10 ** 4)


@pytest.fixture(scope="session")
def gamma_1e5():
    return gamma_enclosure(10 ** 5)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
