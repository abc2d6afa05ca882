"""Symmetric two-way interferometer with a pure which-way detector.

After the quanton passes, the joint state is
``(|psi_a>|chi_a> + |psi_b>|chi_b>) / sqrt(2)``, so the pair of conditional
detector states is all that needs storing. The phase convention is fixed once:
a screen hit at relative phase ``delta`` projects the detector onto a state
proportional to ``chi_a + exp(-1j*delta) * chi_b``, which gives
``P(delta) = (1 + V cos(delta + theta)) / 2`` with ``theta = -arg<chi_a|chi_b>``.
"""
from dataclasses import dataclass, field

import numpy as np

from wwk import linalg
from wwk.errors import DegenerateProjection, DimensionMismatch, InputError

NORM_TOL = 1e-10


@dataclass(frozen=True)
class DetectorPair:
    """Conditional detector states ``chi_a`` (path A) and ``chi_b`` (path B).

    Both must be unit vectors of the same dimension. ``labels`` optionally
    names the computational basis states (e.g. ``"01"`` for two qubits).
    """

    chi_a: np.ndarray
    chi_b: np.ndarray
    labels: tuple = field(default=None, compare=False)

    def __post_init__(self):
        a = linalg.as_state(self.chi_a).copy()
        b = linalg.as_state(self.chi_b).copy()
        if a.shape != b.shape:
            raise DimensionMismatch(f"chi_a has dim {a.size}, chi_b has dim {b.size}")
        for name, v in (("chi_a", a), ("chi_b", b)):
            if abs(linalg.norm(v) - 1.0) > NORM_TOL:
                raise InputError(f"{name} is not normalized (norm {linalg.norm(v):.3g})")
        a.flags.writeable = False
        b.flags.writeable = False
        object.__setattr__(self, "chi_a", a)
        object.__setattr__(self, "chi_b", b)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != a.size:
                raise InputError("one label per basis state is required")
            object.__setattr__(self, "labels", labels)

    @property
    def dim(self):
        return self.chi_a.size

    @classmethod
    def from_unnormalized(cls, chi_a, chi_b, labels=None):
        return cls(linalg.normalize(chi_a), linalg.normalize(chi_b), labels)


@dataclass(frozen=True)
class FringeSpec:
    visibility: float
    theta: float

    def probability(self, delta):
        return 0.5 * (1.0 + self.visibility * np.cos(np.asarray(delta) + self.theta))


def random_pair(rng, dim):
    """Two independent uniformly random detector states in C^dim."""
    return DetectorPair(linalg.random_state(rng, dim), linalg.random_state(rng, dim))


def overlap(pair):
    """``<chi_a|chi_b>``."""
    return linalg.inner(pair.chi_a, pair.chi_b)


def visibility(pair):
    return min(abs(overlap(pair)), 1.0)


def fringe(pair):
    s = overlap(pair)
    theta = -np.angle(s) if s != 0 else 0.0
    # keep theta in (-pi, pi]
    if theta <= -np.pi:
        theta += 2 * np.pi
    return FringeSpec(visibility=min(abs(s), 1.0), theta=float(theta))


def _branch(pair, delta):
    return pair.chi_a + np.exp(-1j * delta) * pair.chi_b


def detection_probability(pair, delta):
    """``P(delta) = |chi_a + exp(-i delta) chi_b|^2 / 4``; accepts scalar or array delta."""
    d = np.asarray(delta, dtype=np.float64)
    s = overlap(pair)
    p = 0.5 * (1.0 + np.real(np.exp(-1j * d) * s))
    return float(p) if p.ndim == 0 else p


def projected_detector_state(pair, delta):
    """Detector state after the quanton is registered at phase ``delta``.

    Raises
    ------
    DegenerateProjection
        If ``chi_a + exp(-i delta) chi_b`` vanishes (V = 1 at a fringe minimum).
    """
    v = _branch(pair, float(delta))
    zeta = linalg.norm(v)
    if zeta <= 1e-12:
        raise DegenerateProjection(f"no quanton can be detected at delta={delta!r}")
    return v / zeta


def projection_norm(pair, delta):
    """``zeta(delta) = |chi_a + exp(-i delta) chi_b|``."""
    return linalg.norm(_branch(pair, float(delta)))


def detector_density(pair):
    """``rho_D = (|chi_a><chi_a| + |chi_b><chi_b|) / 2``."""
    return 0.5 * (linalg.outer(pair.chi_a, pair.chi_a) + linalg.outer(pair.chi_b, pair.chi_b))


def quanton_density(pair):
    """Reduced quanton state in the ``(psi_a, psi_b)`` basis."""
    s = overlap(pair)
    return 0.5 * np.array([[1.0, np.conj(s)], [s, 1.0]], dtype=np.complex128)


def slit_state(delta):
    """``|psi_delta> = (|psi_a> + exp(i delta)|psi_b>) / sqrt(2)`` in slot coordinates."""
    return np.array([1.0, np.exp(1j * delta)], dtype=np.complex128) / np.sqrt(2.0)
