import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nsk.semigroup import enumerate_by_genus, from_generators  # noqa: E402

TABLE1 = [
    ((3, 5), 4, 8, 30),
    ((4, 5, 6), 4, 8, 30),
    ((4, 6, 7), 5, 10, 48),
    ((5, 6, 7, 8), 5, 10, 48),
    ((3, 7), 6, 12, 70),
    ((4, 6, 9), 6, 12, 70),
    ((4, 5), 6, 12, 70),
    ((5, 7, 8, 9), 6, 12, 70),
    ((6, 7, 8, 9, 10), 6, 15, 73),
    ((3, 8), 7, 14, 96),
    ((4, 7, 10), 7, 14, 96),
    ((4, 6, 11), 7, 14, 96),
    ((5, 7, 9, 11), 7, 14, 96),
    ((5, 6, 9), 7, 14, 96),
    ((6, 8, 9, 10, 11), 7, 17, 99),
    ((7, 8, 9, 10, 11, 12), 7, 21, 103),
]


def corpus(max_genus):
    """Every semigroup of genus 1..max_genus."""
    return [S for g in range(1, max_genus + 1) for S in enumerate_by_genus(g)]


@pytest.fixture(scope="session")
def corpus10():
    return corpus(10)


@pytest.fixture
def s35():
    return from_generators([3, 5])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
