import numpy as np
import pytest

from pauli_coherent.enumerator import build_table
from pauli_coherent.stabilizer import BUILTIN_CODES

CODE_NAMES = list(BUILTIN_CODES)

# lines collected by test_acceptance and echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=CODE_NAMES)
def code(request):
    return BUILTIN_CODES[request.param]


@pytest.fixture(scope="session")
def tables():
    return {name: build_table(c) for name, c in BUILTIN_CODES.items()}


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
