import pytest

from nclie.coeffalg import FreeContext, StructureContext

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.line(line)


@pytest.fixture(scope="session")
def free23():
    return FreeContext(2, 3)


@pytest.fixture(scope="session")
def free24():
    return FreeContext(2, 4)


@pytest.fixture(scope="session")
def m2ctx():
    return StructureContext.matrix_algebra(2)
