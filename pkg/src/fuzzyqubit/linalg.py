"""Dense complex matrix helpers and the n-dimensional SU(2) generators.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``.
Every function here is pure and returns fresh arrays.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ShapeError, SizeLimitError

MAX_DIM = 4096

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2.0)

for _m in (IDENTITY2, *PAULI, HADAMARD):
    _m.setflags(write=False)


def as_matrix(A) -> np.ndarray:
    """Coerce ``A`` to a finite 2-D complex array."""
    M = np.asarray(A, dtype=complex)
    if M.ndim != 2 or M.shape[0] < 1 or M.shape[1] < 1:
        raise ShapeError(f"expected a non-empty 2-D matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise DomainError("matrix has non-finite entries")
    return M


def _as_square(A) -> np.ndarray:
    M = as_matrix(A)
    if M.shape[0] != M.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {M.shape}")
    return M


def mat_mul(A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ShapeError(f"cannot multiply {A.shape} by {B.shape}")
    return A @ B


def dagger(A) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(A).conj().T.copy()


def frobenius_distance(A, B) -> float:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise ShapeError(f"shape mismatch: {A.shape} vs {B.shape}")
    return float(np.linalg.norm(A - B))


def is_unitary(A, tol: float = 1e-12) -> bool:
    """True iff ``||A^dagger A - I||_F <= tol``."""
    M = _as_square(A)
    return frobenius_distance(M.conj().T @ M, np.eye(M.shape[0])) <= tol


def is_hermitian(A, tol: float = 1e-12) -> bool:
    M = _as_square(A)
    return float(np.max(np.abs(M - M.conj().T))) <= tol


def commutator(A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    return A @ B - B @ A


@dataclass(frozen=True, eq=False)
class GeneratorTriple:
    """Pauli-normalized generators ``G_i = 2 J_i`` of the n-dim irrep.

    With this normalization ``[G_i, G_j] = 2i eps_ijk G_k`` and the
    Casimir is ``sum G_i^2 = (n^2 - 1) I``.  For ``n = 2`` the triple is
    exactly the Pauli matrices.
    """

    n: int
    G1: np.ndarray
    G2: np.ndarray
    G3: np.ndarray

    def __iter__(self):
        return iter((self.G1, self.G2, self.G3))


def check_dimension(n: int, *, minimum: int = 2) -> int:
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"dimension must be an integer, got {n!r}")
    n = int(n)
    if n < minimum:
        raise DomainError(f"dimension must be >= {minimum}, got {n}")
    if n > MAX_DIM:
        raise SizeLimitError(f"dimension {n} exceeds the limit {MAX_DIM}")
    return n


def su2_generators(n: int) -> GeneratorTriple:
    n = check_dimension(n)
    j = (n - 1) / 2.0
    m = j - np.arange(n)  # j, j-1, ..., -j
    # J+ raises m -> m+1, i.e. moves one index up the ordering above.
    raise_coeff = np.sqrt(j * (j + 1) - m[1:] * (m[1:] + 1))
    j_plus = np.diag(raise_coeff, k=1).astype(complex)
    j_minus = j_plus.conj().T
    G1 = j_plus + j_minus
    G2 = -1j * (j_plus - j_minus)
    G3 = np.diag(2 * m).astype(complex)
    for G in (G1, G2, G3):
        G.setflags(write=False)
    return GeneratorTriple(n, G1, G2, G3)
