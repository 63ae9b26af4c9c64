from pathlib import Path

import pytest

from firegrid.adversaries import FixedBudgets
from firegrid.lattice import ORIGIN
from firegrid.strategies import IncrementalWall
from firegrid.trace import load_trace, play

GOLDEN_DIR = Path(__file__).parent / "golden"

FIGURE1_BUDGETS = [1, 1, 1, 13]
EXAMPLE1_BUDGETS = [1, 1, 4, 1, 1, 1, 15]


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR


@pytest.fixture
def figure1_trace():
    return play(ORIGIN, IncrementalWall(), FixedBudgets(FIGURE1_BUDGETS), horizon=10)


@pytest.fixture
def example1_trace():
    return play(ORIGIN, IncrementalWall(), FixedBudgets(EXAMPLE1_BUDGETS), horizon=10)


@pytest.fixture
def figure1_golden():
    return load_trace(GOLDEN_DIR / "figure1.trace")


@pytest.fixture
def example1_golden():
    return load_trace(GOLDEN_DIR / "example1.trace")
