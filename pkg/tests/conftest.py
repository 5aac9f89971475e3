import pytest

from algcount.field import make_field
from algcount.matrix import MatF

ACCEPTANCE_LINES = []


@pytest.fixture
def f2():
    return make_field(2, 1)


@pytest.fixture
def f3():
    return make_field(3, 1)


@pytest.fixture
def f4():
    return make_field(2, 2)


def mat(ctx, rows):
    return MatF.from_rows(ctx, rows)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
