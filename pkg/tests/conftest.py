import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from grasscode.linalg import Subspace  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False, help="run the long lexicode checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="long run; use --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def rows_of(*lines):
    return [tuple(int(a) for a in line.split()) for line in lines]


@pytest.fixture
def running_subspace():
    """The 3-dimensional subspace of F_2^7 used throughout the representation examples."""
    gens = rows_of("1 0 1 1 0 0 0", "1 0 0 1 1 0 1", "1 0 1 0 0 1 1")
    return Subspace.from_generators(gens, 2)


@pytest.fixture
def tableaux_examples():
    """X, Y, Z, W in G_2(6,3) from the tableaux-order example."""
    return {
        "X": Subspace(6, 3, 2, tuple(rows_of("1 0 1 1 0 1", "0 1 1 1 0 1", "0 0 0 0 1 1"))),
        "Y": Subspace(6, 3, 2, tuple(rows_of("1 1 0 0 0 1", "0 0 1 0 0 0", "0 0 0 1 1 1"))),
        "Z": Subspace(6, 3, 2, tuple(rows_of("1 1 0 1 0 1", "0 0 1 1 0 1", "0 0 0 0 1 0"))),
        "W": Subspace(6, 3, 2, tuple(rows_of("1 1 0 1 0 1", "0 0 1 1 0 1", "0 0 0 0 1 1"))),
    }


@pytest.fixture
def extended_pair():
    """The pair X < Y of G_2(6,3) from the extended-order example (RE rows of EXT)."""
    x = Subspace(6, 3, 2, tuple(rows_of("1 0 0 0 1 0", "0 1 0 0 0 0", "0 0 1 1 0 0")))
    y = Subspace(6, 3, 2, tuple(rows_of("1 0 0 0 0 0", "0 1 0 0 0 0", "0 0 0 0 1 0")))
    return x, y


@pytest.fixture
def subspace_928():
    return Subspace(6, 3, 2, tuple(rows_of("0 1 1 0 0 1", "0 0 0 1 0 0", "0 0 0 0 1 1")))
