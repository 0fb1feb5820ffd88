"""Axis-angle form of one-qubit unitaries.

Every 2x2 unitary is ``exp(i phi) R_n(theta)`` with

    R_n(theta) = cos(theta/2) I - i sin(theta/2) (n . sigma),

which acts on Bloch vectors as a right-handed rotation by ``theta``
about ``n``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DomainError
from .linalg import IDENTITY2, PAULI, as_matrix, frobenius_distance, is_unitary
from .qubit import BlochVector, Qubit

GATE_TOL = 1e-12
DECOMPOSE_UNITARY_TOL = 1e-10
RECONSTRUCTION_TOL = 1e-10
# sin(theta/2) below this is treated as theta == 0.  Snapping there moves
# the matrix by at most sqrt(2) * 1e-14 in Frobenius norm.
AXIS_DEGENERATE_TOL = 1e-14
# cos(theta/2) below this is treated as theta == pi.
HALF_TURN_TOL = 1e-14
AXIS_NORM_TOL = 1e-12

Z_AXIS = (0.0, 0.0, 1.0)


@dataclass(frozen=True)
class UnitaryGate2:
    """``exp(i phi) [[alpha, beta], [-conj(beta), conj(alpha)]]``."""

    phi: float
    alpha: complex
    beta: complex

    def __post_init__(self):
        alpha, beta = complex(self.alpha), complex(self.beta)
        if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > GATE_TOL:
            raise DomainError("gate parameters must satisfy |alpha|^2 + |beta|^2 = 1")
        object.__setattr__(self, "phi", float(self.phi))
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def matrix(self) -> np.ndarray:
        a, b = self.alpha, self.beta
        return cmath.exp(1j * self.phi) * np.array(
            [[a, b], [-b.conjugate(), a.conjugate()]], dtype=complex
        )


IDENTITY_GATE = UnitaryGate2(0.0, 1.0, 0.0)
# H = exp(i pi/2) [[-i/sqrt2, -i/sqrt2], [-i/sqrt2, i/sqrt2]]
HADAMARD_GATE = UnitaryGate2(math.pi / 2, -1j / math.sqrt(2.0), -1j / math.sqrt(2.0))


@dataclass(frozen=True)
class RotationDecomposition:
    phi: float
    theta: float
    axis: tuple[float, float, float]

    def __post_init__(self):
        axis = tuple(float(c) + 0.0 for c in self.axis)
        if len(axis) != 3:
            raise DomainError("axis must have three components")
        if abs(math.sqrt(sum(c * c for c in axis)) - 1.0) > AXIS_NORM_TOL:
            raise DomainError("axis must be a unit vector")
        if not 0.0 <= self.theta <= math.pi:
            raise DomainError(f"theta must lie in [0, pi], got {self.theta!r}")
        object.__setattr__(self, "phi", float(self.phi))
        object.__setattr__(self, "theta", float(self.theta))
        object.__setattr__(self, "axis", axis)

    def to_dict(self) -> dict:
        return {"phi": self.phi, "theta": self.theta, "axis": list(self.axis)}

    @classmethod
    def from_dict(cls, data) -> "RotationDecomposition":
        if not isinstance(data, dict):
            raise DomainError("expected a JSON object")
        for name in ("phi", "theta", "axis"):
            if name not in data:
                raise DomainError(f"missing field '{name}'")
        axis = data["axis"]
        if not isinstance(axis, list) or len(axis) != 3:
            raise DomainError("field 'axis' must be a list of three numbers")
        return cls(float(data["phi"]), float(data["theta"]), tuple(float(c) for c in axis))


def _wrap_phase(phi: float) -> float:
    """Map to (-pi, pi]."""
    phi = math.remainder(phi, 2 * math.pi)
    return math.pi if phi == -math.pi else phi


def apply_unitary(g, q: Qubit) -> Qubit:
    """Apply a gate (``UnitaryGate2`` or a 2x2 unitary matrix) to ``q``.

    In general the outcome probabilities change.
    """
    M = g.matrix if isinstance(g, UnitaryGate2) else as_matrix(g)
    v = M @ q.vector
    v = v / np.linalg.norm(v)
    return Qubit(v[0], v[1])


def decompose_unitary(M) -> RotationDecomposition:
    """Split a 2x2 unitary into ``(phi, theta, axis)``.

    The output is canonical: ``theta`` in ``[0, pi]`` with
    ``cos(theta/2) >= 0``; at ``theta == pi`` the first nonzero axis
    component is positive; at ``theta == 0`` the axis is ``+z``.
    """
    M = as_matrix(M)
    if M.shape != (2, 2):
        raise DomainError(f"expected a 2x2 matrix, got {M.shape}")
    if not is_unitary(M, DECOMPOSE_UNITARY_TOL):
        raise DomainError("matrix is not unitary")

    det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    phi = cmath.phase(det) / 2
    V = cmath.exp(-1j * phi) * M
    c = 0.5 * np.trace(V).real
    if c < 0:
        phi += math.pi
        V = -V
        c = -c
    # n_k sin(theta/2) = -Im tr(sigma_k V) / 2
    s_vec = np.array([-0.5 * np.trace(S @ V).imag for S in PAULI])
    s = float(np.linalg.norm(s_vec))

    if s < AXIS_DEGENERATE_TOL:
        theta, axis = 0.0, np.array(Z_AXIS)
    else:
        axis = s_vec / s
        if c < HALF_TURN_TOL:
            theta = math.pi
            lead = axis[np.flatnonzero(np.abs(axis) > 1e-15)[0]]
            if lead < 0:
                axis = -axis
                phi += math.pi
        else:
            theta = 2 * math.atan2(s, c)

    r = RotationDecomposition(_wrap_phase(phi), theta, tuple(axis))
    residual = frobenius_distance(reconstruct_unitary(r), M)
    if residual > RECONSTRUCTION_TOL:
        raise ConsistencyError(f"reconstruction residual {residual:.3e} exceeds tolerance")
    return r


def reconstruct_unitary(r: RotationDecomposition) -> np.ndarray:
    n_sigma = sum(n * S for n, S in zip(r.axis, PAULI))
    R = math.cos(r.theta / 2) * IDENTITY2 - 1j * math.sin(r.theta / 2) * n_sigma
    return cmath.exp(1j * r.phi) * R


def rotate_bloch(r: RotationDecomposition, v: BlochVector) -> BlochVector:
    """Rodrigues rotation of ``v`` by ``r.theta`` about ``r.axis``."""
    n = np.array(r.axis)
    x = v.as_array()
    ct, st = math.cos(r.theta), math.sin(r.theta)
    out = x * ct + np.cross(n, x) * st + n * np.dot(n, x) * (1 - ct)
    return BlochVector(*map(float, out))


def is_z_rotation(r: RotationDecomposition, tol: float = 1e-12) -> bool:
    """True if the rotation axis is ``+z`` or ``-z`` (or the rotation is trivial)."""
    return math.hypot(r.axis[0], r.axis[1]) <= tol
