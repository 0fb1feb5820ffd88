"""Fuzzy sphere with n cells and the diagonal 2-point-lattice subalgebra.

The quantized coordinates are ``X_i = k G_i`` where ``G_i`` are the
Pauli-normalized generators of the n-dimensional irrep and
``k = 1/sqrt(n^2 - 1)``, so that ``sum X_i^2 = I`` (unit radius) and
``[X_i, X_j] = 2ik eps_ijk X_k``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ShapeError
from .linalg import as_matrix, check_dimension, su2_generators

MAX_QUBITS = 12
LATTICE_TOL = 1e-12

# Stable report keys, in output order.
RESIDUAL_NAMES = (
    "hermiticity_x1",
    "hermiticity_x2",
    "hermiticity_x3",
    "casimir",
    "commutator_12",
    "commutator_23",
    "commutator_31",
)


def noncommutativity(n: int) -> float:
    """``k = 1/sqrt(n^2 - 1)`` for a unit-radius sphere of ``n`` cells."""
    n = check_dimension(n)
    return 1.0 / math.sqrt(n * n - 1)


@dataclass(frozen=True, eq=False)
class FuzzySphere:
    n: int
    k: float
    X1: np.ndarray
    X2: np.ndarray
    X3: np.ndarray

    @property
    def coordinates(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.X1, self.X2, self.X3


def fuzzy_sphere(n: int) -> FuzzySphere:
    n = check_dimension(n)
    k = noncommutativity(n)
    X = []
    for G in su2_generators(n):
        Xi = k * G
        Xi.setflags(write=False)
        X.append(Xi)
    return FuzzySphere(n, k, *X)


def cells_for_register(N: int) -> int:
    """Cell count ``2**N`` for an N-qubit register."""
    if isinstance(N, bool) or not isinstance(N, (int, np.integer)):
        raise DomainError(f"qubit count must be an integer, got {N!r}")
    if not 1 <= N <= MAX_QUBITS:
        raise DomainError(f"qubit count must lie in 1..{MAX_QUBITS}, got {N}")
    return 1 << int(N)


def _fro(A: np.ndarray) -> float:
    return float(np.linalg.norm(A))


def verify_sphere(s: FuzzySphere) -> dict[str, float]:
    """Frobenius residuals of the defining identities of ``s``.

    Keys are :data:`RESIDUAL_NAMES`.
    """
    X = [np.asarray(x) for x in s.coordinates]
    k = s.k
    report = {}
    for i, Xi in enumerate(X, start=1):
        report[f"hermiticity_x{i}"] = _fro(Xi - Xi.conj().T)
    report["casimir"] = _fro(sum(Xi @ Xi for Xi in X) - np.eye(s.n))
    for i, j, l in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        comm = X[i] @ X[j] - X[j] @ X[i]
        report[f"commutator_{i + 1}{j + 1}"] = _fro(comm - 2j * k * X[l])
    return {name: report[name] for name in RESIDUAL_NAMES}


def verification_report(s: FuzzySphere) -> dict:
    """JSON-ready verification document."""
    return {"n": s.n, "k": s.k, "residuals": verify_sphere(s)}


@dataclass(frozen=True)
class LatticeClassification:
    is_diagonal: bool
    off_diagonal_residual: float


def classify_lattice(M) -> LatticeClassification:
    """Is ``M`` in the diagonal subalgebra of 2x2 matrices?"""
    M = as_matrix(M)
    if M.shape != (2, 2):
        raise ShapeError(f"expected a 2x2 matrix, got {M.shape}")
    residual = math.hypot(abs(M[0, 1]), abs(M[1, 0]))
    return LatticeClassification(residual <= LATTICE_TOL, residual)


def classical_limit_profile(n_values) -> list[tuple[int, float]]:
    """``(n, k)`` pairs; ``k`` shrinks towards the commutative limit."""
    return [(check_dimension(n), noncommutativity(n)) for n in n_values]
