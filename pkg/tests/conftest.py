import warnings

import pytest

from binlrc.desired import DesiredMatrix, fixture
from binlrc.gf2 import BitMatrix
from binlrc.lrc import OptimalityWarning, construct


@pytest.fixture(scope="session")
def example1():
    return construct(3, 2, 12, "full", fixture(3, 2))


@pytest.fixture(scope="session")
def desk_code():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OptimalityWarning)
        return construct(3, 2, 8, "full", fixture(3, 2))


@pytest.fixture(scope="session")
def tiny_code():
    """b=1, s=0, m=4: t=2, five groups of three, n=15."""
    return construct(1, 0, 4, "full", DesiredMatrix(0, 2, BitMatrix.identity(2)))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, format_line
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(RESULTS):
        terminalreporter.write_line(format_line(i, RESULTS[i]))
