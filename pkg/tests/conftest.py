import random

import pytest

from knormal import build_tower

# (p, m, n) fields small enough for exhaustive sweeps
SMALL_FIELDS = [(2, 1, 3), (2, 1, 5), (2, 1, 7), (3, 1, 4), (2, 2, 3), (5, 1, 3)]


@pytest.fixture
def f8():
    return build_tower(2, 1, 3)


@pytest.fixture
def f16():
    return build_tower(2, 1, 4)


@pytest.fixture
def rng():
    return random.Random(1234)


def t_power(tower, k):
    """The element ``t^k`` for the generator ``t`` of F_Q over F_q."""
    return tower.pow(tower.element(tower.q), k)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
