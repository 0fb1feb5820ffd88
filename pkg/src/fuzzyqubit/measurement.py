"""Projective measurement and the reversible basic measurement.

A standard measurement applies one projector and collapses the state.
The basic measurement applies the diagonal unitary

    U = exp(i phi) diag(alpha, conj(alpha)) = exp(i phi) (alpha P0 + conj(alpha) P1)

which keeps both outcome probabilities and can be undone exactly with
``U^dagger``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DomainError
from .linalg import HADAMARD, IDENTITY2, as_matrix, is_unitary
from .qubit import ONE, ZERO, Qubit, _complex_field

UNIMODULAR_TOL = 1e-12
BASIS_UNITARY_TOL = 1e-12
# The renormalization divisor after a unitary step must be 1 to this accuracy.
NORM_CHECK_TOL = 1e-12

# Seeded outcome sequences are test fixtures; they depend on this generator.
RNG_NAME = "numpy.PCG64"


@dataclass(frozen=True, eq=False)
class Projector:
    target: int
    matrix: np.ndarray


def _make_projectors() -> tuple[Projector, Projector]:
    out = []
    for target in (0, 1):
        m = np.zeros((2, 2), dtype=complex)
        m[target, target] = 1.0
        m.setflags(write=False)
        out.append(Projector(target, m))
    return tuple(out)


_PROJECTORS = _make_projectors()


def projector(target: int) -> Projector:
    """``P0 = diag(1, 0)`` or ``P1 = diag(0, 1)``."""
    if isinstance(target, bool) or target not in (0, 1):
        raise DomainError(f"projector target must be 0 or 1, got {target!r}")
    return _PROJECTORS[target]


def project(p: Projector, q: Qubit) -> np.ndarray:
    """Apply ``p`` to ``q`` without renormalizing.

    The squared norm of the result is the probability of ``p.target``.
    """
    return p.matrix @ q.vector


@dataclass(frozen=True)
class DiagonalUnitary:
    """Parameters ``(phi, alpha)`` of ``exp(i phi) diag(alpha, conj(alpha))``."""

    phi: float
    alpha: complex

    def __post_init__(self):
        phi, alpha = float(self.phi), complex(self.alpha)
        if not (math.isfinite(phi) and cmath.isfinite(alpha)):
            raise DomainError("phi and alpha must be finite")
        if abs(abs(alpha) - 1.0) > UNIMODULAR_TOL:
            raise DomainError(f"alpha must be unimodular, |alpha| = {abs(alpha)!r}")
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "alpha", alpha)

    @classmethod
    def from_angle(cls, phi: float, gamma: float) -> "DiagonalUnitary":
        """``alpha = exp(i gamma)``."""
        return cls(phi, cmath.exp(1j * gamma))

    @property
    def matrix(self) -> np.ndarray:
        """The realized 2x2 matrix, built directly from its diagonal."""
        g = cmath.exp(1j * self.phi)
        return np.array(
            [[g * self.alpha, 0], [0, g * self.alpha.conjugate()]], dtype=complex
        )

    def to_dict(self) -> dict:
        return {"phi": self.phi, "alpha": {"re": self.alpha.real, "im": self.alpha.imag}}

    @classmethod
    def from_dict(cls, data) -> "DiagonalUnitary":
        if not isinstance(data, dict) or "phi" not in data:
            raise DomainError("missing field 'phi'")
        phi = data["phi"]
        if isinstance(phi, bool) or not isinstance(phi, (int, float)):
            raise DomainError("field 'phi' must be a number")
        return cls(float(phi), _complex_field(data, "alpha"))


@dataclass(frozen=True)
class MeasurementOutcome:
    outcome: int
    probability: float
    post_state: Qubit

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "probability": self.probability,
            "post_state": self.post_state.to_dict(),
        }

    @classmethod
    def from_dict(cls, data) -> "MeasurementOutcome":
        if not isinstance(data, dict):
            raise DomainError("expected a JSON object")
        for name in ("outcome", "probability", "post_state"):
            if name not in data:
                raise DomainError(f"missing field '{name}'")
        if data["outcome"] not in (0, 1) or isinstance(data["outcome"], bool):
            raise DomainError("field 'outcome' must be 0 or 1")
        return cls(int(data["outcome"]), float(data["probability"]), Qubit.from_dict(data["post_state"]))


def _basis_state(index: int) -> Qubit:
    return ZERO if index == 0 else ONE


def outcome_probability(q: Qubit, index: int) -> float:
    return float(np.linalg.norm(project(projector(index), q)) ** 2)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def standard_measure(q: Qubit, rng_seed: int) -> MeasurementOutcome:
    """Projective measurement in the computational basis.

    The result carries only the collapsed pole and its probability.
    When one outcome is certain no random number is drawn.
    """
    p0 = outcome_probability(q, 0)
    if p0 >= 1.0:
        outcome = 0
    elif p0 <= 0.0:
        outcome = 1
    else:
        outcome = 0 if _rng(rng_seed).random() < p0 else 1
    prob = p0 if outcome == 0 else outcome_probability(q, 1)
    return MeasurementOutcome(outcome, prob, _basis_state(outcome))


def sample_outcomes(q: Qubit, shots: int, rng_seed: int) -> np.ndarray:
    """``shots`` independent standard measurements from one seeded stream.

    Returns a ``uint8`` array of outcomes.  Same ``(q, shots, rng_seed)``
    gives the same bytes.
    """
    if shots < 0:
        raise DomainError("shots must be non-negative")
    p0 = outcome_probability(q, 0)
    if p0 >= 1.0:
        return np.zeros(shots, dtype=np.uint8)
    if p0 <= 0.0:
        return np.ones(shots, dtype=np.uint8)
    draws = _rng(rng_seed).random(shots)
    return (draws >= p0).astype(np.uint8)


def _apply(matrix: np.ndarray, q: Qubit) -> Qubit:
    v = matrix @ q.vector
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > NORM_CHECK_TOL:
        raise ConsistencyError(f"operator did not preserve the norm (got {norm!r})")
    v = v / norm
    return Qubit(v[0], v[1])


def basic_measure(q: Qubit, u: DiagonalUnitary) -> Qubit:
    """Apply ``u`` to ``q``; both outcome probabilities are kept."""
    return _apply(u.matrix, q)


def superposed_projector_form(u: DiagonalUnitary) -> np.ndarray:
    """``exp(i phi) (alpha P0 + conj(alpha) P1)``; equal to ``u.matrix``."""
    P0, P1 = projector(0).matrix, projector(1).matrix
    return cmath.exp(1j * u.phi) * (u.alpha * P0 + u.alpha.conjugate() * P1)


def recover(q_prime: Qubit, u: DiagonalUnitary) -> Qubit:
    """Undo :func:`basic_measure` by applying ``u.matrix^dagger``."""
    return _apply(u.matrix.conj().T, q_prime)


def _check_basis_change(basis_change) -> np.ndarray:
    B = as_matrix(basis_change)
    if B.shape != (2, 2):
        raise DomainError(f"basis change must be 2x2, got {B.shape}")
    if not is_unitary(B, BASIS_UNITARY_TOL):
        raise DomainError("basis change is not unitary")
    return B


def basic_measure_in_basis(q: Qubit, u: DiagonalUnitary, basis_change=IDENTITY2) -> Qubit:
    """Basic measurement in the basis ``B|0>, B|1>``: applies ``B U B^dagger``.

    ``basis_change=HADAMARD`` gives the measurement in the dual basis.
    """
    B = _check_basis_change(basis_change)
    return _apply(B @ u.matrix @ B.conj().T, q)


def recover_in_basis(q_prime: Qubit, u: DiagonalUnitary, basis_change=IDENTITY2) -> Qubit:
    B = _check_basis_change(basis_change)
    return _apply(B @ u.matrix.conj().T @ B.conj().T, q_prime)


BASES = {"computational": IDENTITY2, "dual": HADAMARD}
