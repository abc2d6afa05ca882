"""Which-way knowledge in a symmetric two-way interferometer.

Visibility, knowledge for arbitrary projective readouts of the which-way
detector, the canonical (optimal) and natural (phase-dependent) readout bases,
phase-resolved knowledge, and Monte Carlo / quadrature cross-checks.
"""
from wwk._backend import BACKEND
from wwk.errors import (
    DegenerateProjection,
    DomainError,
    InputError,
    OverlapTooClose,
    UndefinedAtPhase,
    WWKError,
)
from wwk.interferometer import (
    DetectorPair,
    FringeSpec,
    detection_probability,
    detector_density,
    fringe,
    projected_detector_state,
    quanton_density,
    random_pair,
    visibility,
)
from wwk.natural import NaturalBasisParams, ancilla_t, ensure_dim3, natural_basis, verify_natural
from wwk.presets import fock_basis, micromaser, two_qubit, two_qubit_expectations
from wwk.readout import (
    KnowledgeReport,
    PhaseSweep,
    ReadoutBasis,
    canonical_basis,
    crossover_threshold,
    guess_probabilities,
    joint_probabilities,
    knowledge,
    knowledge_at_phase,
    likelihood,
    outcome_probabilities,
    phase_sweep,
)

__version__ = "0.1.0"
