"""One-qubit pure states and their Bloch-sphere coordinates."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateStateError, DomainError

NORM_TOL = 1e-12


@dataclass(frozen=True)
class Qubit:
    """Normalized state ``a|0> + b|1>``.

    Build instances with :func:`new_qubit` unless the amplitudes are
    already known to be normalized.
    """

    a: complex
    b: complex

    def __post_init__(self):
        a, b = complex(self.a), complex(self.b)
        if not (np.isfinite(a) and np.isfinite(b)):
            raise DomainError("amplitudes must be finite")
        norm2 = abs(a) ** 2 + abs(b) ** 2
        if abs(norm2 - 1.0) > NORM_TOL:
            raise DomainError(f"amplitudes are not normalized (|a|^2+|b|^2 = {norm2!r})")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.a, self.b], dtype=complex)

    @property
    def probabilities(self) -> tuple[float, float]:
        return abs(self.a) ** 2, abs(self.b) ** 2

    def to_dict(self) -> dict:
        return {
            "a": {"re": self.a.real, "im": self.a.imag},
            "b": {"re": self.b.real, "im": self.b.imag},
        }

    @classmethod
    def from_dict(cls, data) -> "Qubit":
        return cls(_complex_field(data, "a"), _complex_field(data, "b"))


@dataclass(frozen=True)
class BlochVector:
    x: float
    y: float
    z: float

    def __post_init__(self):
        r2 = self.x ** 2 + self.y ** 2 + self.z ** 2
        if abs(r2 - 1.0) > NORM_TOL:
            raise DomainError(f"Bloch vector is not on the unit sphere (|v|^2 = {r2!r})")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


def _complex_field(data, name: str) -> complex:
    """Read ``{"re": .., "im": ..}`` stored under ``data[name]``."""
    if not isinstance(data, dict):
        raise DomainError(f"expected a JSON object, got {type(data).__name__}")
    if name not in data:
        raise DomainError(f"missing field '{name}'")
    value = data[name]
    if not isinstance(value, dict):
        raise DomainError(f"field '{name}' must be an object with 're' and 'im'")
    parts = []
    for key in ("re", "im"):
        part = value.get(key)
        if isinstance(part, bool) or not isinstance(part, (int, float)):
            raise DomainError(f"field '{name}.{key}' must be a number")
        parts.append(float(part))
    return complex(*parts)


def new_qubit(a: complex, b: complex) -> Qubit:
    """Normalize ``(a, b)`` into a state."""
    a, b = complex(a), complex(b)
    norm = math.hypot(abs(a), abs(b))
    if not math.isfinite(norm):
        raise DomainError("amplitudes must be finite")
    if norm == 0.0:
        raise DegenerateStateError("cannot normalize the zero vector")
    return Qubit(a / norm, b / norm)


def from_vector(v) -> Qubit:
    v = np.asarray(v, dtype=complex).reshape(-1)
    if v.shape != (2,):
        raise DomainError(f"expected a 2-vector, got shape {v.shape}")
    return new_qubit(v[0], v[1])


ZERO = Qubit(1.0, 0.0)
ONE = Qubit(0.0, 1.0)


def bloch_vector(q: Qubit) -> BlochVector:
    ab = q.a.conjugate() * q.b
    return BlochVector(2 * ab.real, 2 * ab.imag, abs(q.a) ** 2 - abs(q.b) ** 2)


def from_bloch(theta: float, phi: float) -> Qubit:
    """State with polar angle ``theta`` and azimuth ``phi``.

    Uses ``a = cos(theta/2)``, ``b = exp(i phi) sin(theta/2)``.
    """
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"polar angle must lie in [0, pi], got {theta!r}")
    if not 0.0 <= phi < 2 * math.pi:
        raise DomainError(f"azimuth must lie in [0, 2pi), got {phi!r}")
    return new_qubit(math.cos(theta / 2), complex(math.cos(phi), math.sin(phi)) * math.sin(theta / 2))


def bloch_angles(q: Qubit) -> tuple[float, float]:
    """Inverse of :func:`from_bloch`: ``(theta, phi)`` of ``q``."""
    v = bloch_vector(q)
    theta = math.atan2(math.hypot(v.x, v.y), v.z)
    phi = math.atan2(v.y, v.x) % (2 * math.pi)
    if phi >= 2 * math.pi:
        phi = 0.0
    return theta, phi


def dual_basis() -> tuple[Qubit, Qubit]:
    """The pair ``|+>, |->``."""
    s = 1 / math.sqrt(2.0)
    return Qubit(s, s), Qubit(s, -s)


def inner(p: Qubit, q: Qubit) -> complex:
    """``<p|q>``."""
    return p.a.conjugate() * q.a + p.b.conjugate() * q.b


def fidelity(p: Qubit, q: Qubit) -> float:
    """``|<p|q>|``; equals 1 iff the states differ by a global phase."""
    return abs(inner(p, q))


def same_up_to_phase(p: Qubit, q: Qubit, tol: float = 1e-12) -> bool:
    return abs(fidelity(p, q) - 1.0) <= tol


def max_entry_distance(p: Qubit, q: Qubit) -> float:
    return max(abs(p.a - q.a), abs(p.b - q.b))
