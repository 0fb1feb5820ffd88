"""Projective and reversible one-qubit measurement, Bloch rotations, and fuzzy-sphere geometry."""
from .errors import (
    ConsistencyError,
    DegenerateStateError,
    DomainError,
    FuzzyQubitError,
    ShapeError,
    SizeLimitError,
)
from .fuzzy import (
    FuzzySphere,
    LatticeClassification,
    cells_for_register,
    classical_limit_profile,
    classify_lattice,
    fuzzy_sphere,
    verify_sphere,
)
from .linalg import GeneratorTriple, dagger, frobenius_distance, is_unitary, mat_mul, su2_generators
from .measurement import (
    DiagonalUnitary,
    MeasurementOutcome,
    Projector,
    basic_measure,
    basic_measure_in_basis,
    project,
    projector,
    recover,
    recover_in_basis,
    sample_outcomes,
    standard_measure,
    superposed_projector_form,
)
from .qubit import BlochVector, Qubit, bloch_vector, dual_basis, fidelity, from_bloch, new_qubit
from .rotation import (
    RotationDecomposition,
    UnitaryGate2,
    apply_unitary,
    decompose_unitary,
    reconstruct_unitary,
    rotate_bloch,
)

__version__ = "0.1.0"
