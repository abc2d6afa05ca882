"""Reading out the which-way detector.

For a complete orthonormal readout basis ``{W_i}`` this module computes the
outcome probabilities ``p_i``, the per-outcome success probabilities ``q_i``
of the best path guess, the likelihood ``L = sum p_i q_i`` and the knowledge
``K = 2L - 1``, both averaged over the screen and conditioned on a phase
``delta``.
"""
from dataclasses import dataclass

import numpy as np

from wwk import linalg
from wwk.errors import DimensionMismatch, InputError, UndefinedAtPhase
from wwk.interferometer import detection_probability, visibility

UNREACHABLE = 1e-14
# both amplitudes below 1e-14
_UNREACHABLE_SQ = UNREACHABLE**2
PATH_A = "A"
PATH_B = "B"


@dataclass(frozen=True)
class ReadoutBasis:
    """Complete orthonormal measurement basis; ``vectors[i]`` is ``|W_i>``."""

    vectors: np.ndarray
    labels: tuple

    def __post_init__(self):
        vs = np.array(self.vectors, dtype=np.complex128)
        if vs.ndim != 2 or vs.shape[0] != vs.shape[1] or vs.shape[0] == 0:
            raise InputError(f"a complete basis needs a square (n, n) array, got {vs.shape}")
        err = np.max(np.abs(linalg.gram(vs) - np.eye(vs.shape[0])))
        if err > linalg.TOL_ITER:
            raise InputError(f"basis is not orthonormal (max Gram deviation {err:.2e})")
        labels = tuple(str(s) for s in self.labels)
        if len(labels) != vs.shape[0]:
            raise InputError("one label per basis vector is required")
        vs.flags.writeable = False
        object.__setattr__(self, "vectors", vs)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self):
        return self.vectors.shape[1]

    def __len__(self):
        return self.vectors.shape[0]


@dataclass(frozen=True)
class OutcomeStats:
    p: np.ndarray
    q: np.ndarray
    guess: tuple


@dataclass(frozen=True)
class KnowledgeReport:
    visibility: float
    likelihood: float
    knowledge: float
    duality_slack: float
    labels: tuple
    p: np.ndarray
    q: np.ndarray
    guess: tuple

    def as_dict(self):
        return {
            "visibility": self.visibility,
            "likelihood": self.likelihood,
            "knowledge": self.knowledge,
            "duality_slack": self.duality_slack,
            "outcomes": [
                {"label": lab, "p": float(p), "q": float(q), "guess": g}
                for lab, p, q, g in zip(self.labels, self.p, self.q, self.guess)
            ],
        }


@dataclass(frozen=True)
class PhaseSweep:
    """Tabulated phase-resolved statistics; ``K`` is NaN where undefined."""

    deltas: np.ndarray
    P: np.ndarray
    joint: np.ndarray
    K: np.ndarray
    labels: tuple

    @property
    def defined(self):
        return ~np.isnan(self.K)


def standard_basis(dim, labels=None):
    if labels is None:
        labels = [str(k) for k in range(dim)]
    return ReadoutBasis(np.eye(dim, dtype=np.complex128), tuple(labels))


def _check(pair, basis):
    if basis.dim != pair.dim:
        raise DimensionMismatch(f"basis acts on C^{basis.dim}, detector is C^{pair.dim}")


def amplitudes(pair, basis):
    """``(<W_i|chi_a>, <W_i|chi_b>)`` for every outcome."""
    _check(pair, basis)
    w = np.conj(basis.vectors)
    return w @ pair.chi_a, w @ pair.chi_b


def outcome_probabilities(pair, basis):
    """``p_i = <W_i|rho_D|W_i>``."""
    a, b = amplitudes(pair, basis)
    return 0.5 * (np.abs(a) ** 2 + np.abs(b) ** 2)


def guess_probabilities(pair, basis):
    """Best-guess success probability and guessed path per outcome.

    Exact ties guess path A; outcomes both states miss get ``q = 1/2``.
    """
    a, b = amplitudes(pair, basis)
    oa = np.abs(a) ** 2
    ob = np.abs(b) ** 2
    total = oa + ob
    reachable = np.maximum(oa, ob) >= _UNREACHABLE_SQ
    q = np.full(total.shape, 0.5)
    q[reachable] = np.maximum(oa, ob)[reachable] / total[reachable]
    guess = tuple(PATH_B if (r and ob_i > oa_i) else PATH_A for r, oa_i, ob_i in zip(reachable, oa, ob))
    return q, guess


def outcome_stats(pair, basis):
    q, guess = guess_probabilities(pair, basis)
    return OutcomeStats(p=outcome_probabilities(pair, basis), q=q, guess=guess)


def likelihood(pair, basis):
    st = outcome_stats(pair, basis)
    return float(np.dot(st.p, st.q))


def knowledge(pair, basis):
    """Full :class:`KnowledgeReport` for reading ``basis`` out of ``pair``."""
    st = outcome_stats(pair, basis)
    L = float(np.dot(st.p, st.q))
    K = 2.0 * L - 1.0
    V = visibility(pair)
    return KnowledgeReport(
        visibility=V,
        likelihood=L,
        knowledge=K,
        duality_slack=1.0 - K * K - V * V,
        labels=basis.labels,
        p=st.p,
        q=st.q,
        guess=st.guess,
    )


def canonical_basis(pair):
    """Eigenbasis of ``|chi_a><chi_a| - |chi_b><chi_b|``, the knowledge-optimal readout.

    The positive-eigenvalue vector leans toward path A and is labelled
    ``"E_a"``, the negative one ``"E_b"``; kernel vectors are ``"E_0"``
    (``"E_0.1"``, ``"E_0.2"``, ... when the kernel has several dimensions).
    """
    if pair.dim < 2:
        raise InputError("the canonical basis needs a detector of dimension >= 2")
    op = linalg.outer(pair.chi_a, pair.chi_a) - linalg.outer(pair.chi_b, pair.chi_b)
    w, vecs = linalg.hermitian_eig(op)
    tol = linalg.TOL_ITER
    n_kernel = int(np.sum(np.abs(w) <= tol))
    labels = []
    k0 = 0
    for lam in w:
        if lam > tol:
            labels.append("E_a")
        elif lam < -tol:
            labels.append("E_b")
        else:
            labels.append("E_0" if n_kernel == 1 or k0 == 0 else f"E_0.{k0}")
            k0 += 1
    return ReadoutBasis(vecs, tuple(labels))


def joint_probabilities(pair, basis, delta):
    """``p_i(delta) = |<W_i|chi_a> + exp(-i delta) <W_i|chi_b>|^2 / 4``.

    Scalar ``delta`` gives shape ``(n,)``; an array of shape ``(m,)`` gives ``(m, n)``.
    """
    a, b = amplitudes(pair, basis)
    d = np.asarray(delta, dtype=np.float64)
    ph = np.exp(-1j * d)[..., None]
    return 0.25 * np.abs(a + ph * b) ** 2


def knowledge_at_phase(pair, basis, delta):
    """Knowledge conditioned on a screen hit at phase ``delta``.

    Raises
    ------
    UndefinedAtPhase
        If the detection probability at ``delta`` is below ``1e-14``.
    """
    joint = joint_probabilities(pair, basis, float(delta))
    total = joint.sum()
    if total <= UNREACHABLE:
        raise UndefinedAtPhase(f"P(delta={delta!r}) = {total:.3g}; knowledge is undefined")
    q, _ = guess_probabilities(pair, basis)
    return float(2.0 * np.dot(q, joint) / total - 1.0)


def crossover_threshold(visibility):
    """Cosine threshold below which the natural readout beats the canonical one.

    Returns ``c*`` such that ``(1-V)/(1+V cos d) > sqrt(1-V^2)`` iff ``cos d < c*``.
    Defined for ``0 < V < 1``.
    """
    V = float(visibility)
    if not 0.0 < V < 1.0:
        raise ValueError(f"crossover threshold needs 0 < V < 1, got {V}")
    return (np.sqrt((1.0 - V) / (1.0 + V)) - 1.0) / V


def phase_grid(m):
    """``m`` uniformly spaced phases on ``[0, 2 pi)``."""
    if m < 2:
        raise ValueError("grid needs at least 2 points")
    return 2.0 * np.pi * np.arange(m) / m


def sweep_at(pair, basis, deltas):
    """Phase-resolved statistics at arbitrary phases."""
    deltas = np.asarray(deltas, dtype=np.float64)
    joint = joint_probabilities(pair, basis, deltas)
    P = joint.sum(axis=1)
    q, _ = guess_probabilities(pair, basis)
    K = np.full(deltas.size, np.nan)
    ok = P > UNREACHABLE
    K[ok] = 2.0 * (joint[ok] @ q) / P[ok] - 1.0
    return PhaseSweep(deltas=deltas, P=P, joint=joint, K=K, labels=basis.labels)


def phase_sweep(pair, basis, m):
    """Statistics on ``m`` uniform phases in ``[0, 2 pi)``; undefined ``K`` is NaN."""
    return sweep_at(pair, basis, phase_grid(m))


__all__ = [
    "ReadoutBasis",
    "OutcomeStats",
    "KnowledgeReport",
    "PhaseSweep",
    "standard_basis",
    "amplitudes",
    "outcome_probabilities",
    "guess_probabilities",
    "outcome_stats",
    "likelihood",
    "knowledge",
    "canonical_basis",
    "joint_probabilities",
    "knowledge_at_phase",
    "crossover_threshold",
    "phase_grid",
    "phase_sweep",
    "sweep_at",
    "detection_probability",
]
