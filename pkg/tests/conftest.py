import cmath
import math

import numpy as np
import pytest
from hypothesis import strategies as st

from fuzzyqubit.qubit import Qubit


def random_qubit(rng: np.random.Generator) -> Qubit:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    v /= np.linalg.norm(v)
    return Qubit(v[0], v[1])


def random_unitary(rng: np.random.Generator) -> np.ndarray:
    """Haar-random 2x2 unitary: random normalized (alpha, beta) and phase."""
    v = rng.normal(size=4)
    v /= np.linalg.norm(v)
    alpha, beta = complex(v[0], v[1]), complex(v[2], v[3])
    phi = rng.uniform(-math.pi, math.pi)
    return cmath.exp(1j * phi) * np.array(
        [[alpha, beta], [-beta.conjugate(), alpha.conjugate()]]
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
angles = st.floats(-2 * math.pi, 2 * math.pi, allow_nan=False)


@st.composite
def qubits(draw):
    a = complex(draw(finite), draw(finite))
    b = complex(draw(finite), draw(finite))
    norm = math.hypot(abs(a), abs(b))
    if norm < 1e-6:
        a, norm = 1.0, math.hypot(1.0, abs(b))
    return Qubit(a / norm, b / norm)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.VERDICTS:
            terminalreporter.write_line(line)
