"""Natural readout bases: every outcome carries either full or zero path information.

For a pair with overlap ``<chi_a|chi_b> = |v|^2 exp(i*gamma)`` the basis
``{|0>, |+>, |->}`` satisfies

    chi_a = v |0> + sqrt(1 - |v|^2) |+>
    chi_b = v exp(i*gamma) |0> + sqrt(1 - |v|^2) |->

so ``|+>`` never fires for path B, ``|->`` never fires for path A and ``|0>``
is reached by both paths with equal weight. Building ``|0>`` needs a third
direction ``|t>`` orthogonal to both detector states, hence dimension >= 3.
"""
from dataclasses import dataclass

import numpy as np

from wwk import linalg
from wwk.errors import InputError, OverlapTooClose, UndefinedAtPhase
from wwk.interferometer import DetectorPair, fringe, overlap
from wwk.readout import (
    ReadoutBasis,
    amplitudes,
    knowledge_at_phase,
    phase_sweep,
)

MAX_OVERLAP = 1.0 - 1e-10


@dataclass(frozen=True)
class NaturalBasisParams:
    """Free phases of the construction: ``eta`` (of the ``|t>`` admixture) and the phase of ``v``."""

    eta: float = 0.0
    v_phase: float = 0.0

    def __post_init__(self):
        for name in ("eta", "v_phase"):
            x = float(getattr(self, name))
            if not -np.pi < x <= np.pi:
                raise InputError(f"{name} must lie in (-pi, pi], got {x}")
            object.__setattr__(self, name, x)


def ensure_dim3(pair):
    """Append a spectator qubit in ``|0>`` when the detector is a single qubit.

    Overlaps are unchanged. A one-dimensional detector cannot record anything
    (its two states differ only by a phase), so it is rejected.
    """
    if pair.dim >= 3:
        return pair
    if pair.dim == 1:
        raise OverlapTooClose("a one-dimensional detector carries no which-way information")
    anc = np.array([1.0, 0.0], dtype=np.complex128)
    labels = None
    if pair.labels is not None:
        labels = tuple(f"{s}{k}" for s in pair.labels for k in "01")
    return DetectorPair(np.kron(pair.chi_a, anc), np.kron(pair.chi_b, anc), labels)


def _require_distinguishable(pair):
    if pair.dim < 3:
        raise InputError("natural basis needs dimension >= 3; call ensure_dim3 first")
    if abs(overlap(pair)) >= MAX_OVERLAP:
        raise OverlapTooClose("|<chi_a|chi_b>| is too close to 1 to build a natural basis")


def ancilla_t(pair):
    """A unit vector orthogonal to both detector states (deterministic choice)."""
    _require_distinguishable(pair)
    return linalg.orthonormal_complement([pair.chi_a, pair.chi_b], pair.dim)[0]


def natural_basis(pair, params=None):
    """Construct a natural basis for ``pair`` (dimension >= 3).

    The first three vectors are ``|0>``, ``|+>``, ``|->``; the rest complete
    the space and are labelled ``aux1``, ``aux2``, ...
    """
    params = params or NaturalBasisParams()
    _require_distinguishable(pair)
    chi_a, chi_b = pair.chi_a, pair.chi_b
    s = overlap(pair)
    V = abs(s)
    gamma = float(np.angle(s)) if V > 0 else 0.0
    v = np.sqrt(V) * np.exp(1j * params.v_phase)
    t = ancilla_t(pair)

    x1 = np.conj(v) / (1.0 + V)
    # |0> must be unit length although chi_a, chi_b are not orthogonal:
    # |x2|^2 = 1 - 2|v|^2/(1+|v|^2) = (1-|v|^2)/(1+|v|^2)
    x2 = np.exp(1j * params.eta) * np.sqrt((1.0 - V) / (1.0 + V))
    zero = x1 * chi_a + x1 * np.exp(-1j * gamma) * chi_b + x2 * t
    root = np.sqrt(1.0 - V)
    plus = (chi_a - v * zero) / root
    minus = (chi_b - v * np.exp(1j * gamma) * zero) / root

    aux = linalg.orthonormal_complement([zero, plus, minus], pair.dim)
    vectors = np.vstack([zero, plus, minus, aux])
    labels = ("0", "+", "-") + tuple(f"aux{k + 1}" for k in range(len(aux)))
    return ReadoutBasis(vectors, labels)


@dataclass(frozen=True)
class NaturalCheck:
    orthonormal: bool
    full_info_outcomes: bool
    zero_info_weight: bool
    ridge: bool
    profile: bool
    max_gram_error: float
    max_blind_overlap: float
    zero_weight_error: float
    ridge_knowledge: float
    max_profile_error: float

    @property
    def passed(self):
        return self.orthonormal and self.full_info_outcomes and self.zero_info_weight and self.ridge and self.profile

    def __bool__(self):
        return self.passed


def verify_natural(pair, basis, grid=64, amp_tol=1e-12, profile_tol=1e-10):
    """Check that ``basis`` is a natural readout basis for ``pair``.

    Each outcome must either be blind to exactly one path (full information),
    or see both paths with equal amplitude magnitude (no information), or be
    unreachable. The no-information outcomes must jointly carry weight
    ``|v|^2 = V`` from each path. On top of that the phase-resolved knowledge
    must equal ``(1 - V) / (1 + V cos(delta + theta))``, in particular 1 at the
    fringe minimum.
    """
    gram_err = float(np.max(np.abs(linalg.gram(basis.vectors) - np.eye(len(basis)))))
    a, b = amplitudes(pair, basis)
    ma, mb = np.abs(a), np.abs(b)
    blind_a = ma <= amp_tol
    blind_b = mb <= amp_tol
    balanced = ~(blind_a ^ blind_b) & (np.abs(ma - mb) <= amp_tol)
    classified = balanced | (blind_a ^ blind_b)
    has_plus = bool(np.any(blind_b & ~blind_a))
    has_minus = bool(np.any(blind_a & ~blind_b))

    fr = fringe(pair)
    V = fr.visibility
    weight_err = abs(float(np.sum(ma[balanced] ** 2)) - V)
    # blind overlaps: how far the full-info outcomes are from exact zero
    blind_vals = np.concatenate([ma[blind_a & ~blind_b], mb[blind_b & ~blind_a]])
    max_blind = float(blind_vals.max(initial=0.0))

    delta_min = np.pi - fr.theta
    ridge_k = float("nan")
    ridge_ok = True
    if V < 1.0 - 1e-12:
        try:
            ridge_k = knowledge_at_phase(pair, basis, delta_min)
        except UndefinedAtPhase:
            ridge_ok = False
        else:
            ridge_ok = abs(ridge_k - 1.0) <= profile_tol

    sweep = phase_sweep(pair, basis, grid)
    target_den = 1.0 + V * np.cos(sweep.deltas + fr.theta)
    live = target_den > 1e-12
    if np.any(np.isnan(sweep.K[live])):
        prof_err = float("inf")
    else:
        prof_err = float(np.max(np.abs(sweep.K[live] - (1.0 - V) / target_den[live]), initial=0.0))

    return NaturalCheck(
        orthonormal=gram_err <= linalg.TOL_ITER,
        full_info_outcomes=bool(np.all(classified)) and (V == 1.0 or (has_plus and has_minus)),
        zero_info_weight=weight_err <= amp_tol * 10,
        ridge=ridge_ok,
        profile=prof_err <= profile_tol,
        max_gram_error=gram_err,
        max_blind_overlap=max_blind,
        zero_weight_error=weight_err,
        ridge_knowledge=ridge_k,
        max_profile_error=prof_err,
    )
