"""Worked detector models and their closed-form expectations.

Two-qubit detector: one qubit per path, both start in ``|0>``; the quanton
passing path x turns that path's qubit into ``alpha|0> + beta|1>``. Basis order
is ``|00>, |01>, |10>, |11>`` (first digit = qubit on path A), so

    chi_a = alpha|00> + beta|10>,    chi_b = alpha|00> + beta|01>.

The micromaser variant is the same model with ``alpha = cos(theta)``,
``beta = sin(theta)`` and the digits read as photon numbers in cavities C1, C2.
"""
import math
from dataclasses import dataclass

import numpy as np

from wwk.errors import InputError
from wwk.interferometer import DetectorPair
from wwk.readout import ReadoutBasis

TWO_QUBIT_LABELS = ("00", "01", "10", "11")
CAVITY_LABELS = ("C00", "C01", "C10", "C11")

_I00, _I01, _I10, _I11 = range(4)


def two_qubit(alpha, beta, labels=TWO_QUBIT_LABELS):
    alpha = complex(alpha)
    beta = complex(beta)
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > 1e-10:
        raise InputError(f"|alpha|^2 + |beta|^2 must be 1, got {abs(alpha) ** 2 + abs(beta) ** 2!r}")
    chi_a = np.zeros(4, dtype=np.complex128)
    chi_b = np.zeros(4, dtype=np.complex128)
    chi_a[_I00] = alpha
    chi_a[_I10] = beta
    chi_b[_I00] = alpha
    chi_b[_I01] = beta
    return DetectorPair(chi_a, chi_b, labels)


def micromaser(theta):
    """Cavity pair after one atom: photon in C1 (path A) or C2 (path B) with amplitude sin(theta)."""
    theta = float(theta)
    if not 0.0 <= theta <= math.pi / 2:
        raise InputError(f"theta must lie in [0, pi/2], got {theta}")
    return two_qubit(math.cos(theta), math.sin(theta), labels=CAVITY_LABELS)


def fock_basis(pair):
    """Local readout of each qubit/cavity: the computational basis."""
    labels = pair.labels or TWO_QUBIT_LABELS
    return ReadoutBasis(np.eye(4, dtype=np.complex128), labels)


@dataclass(frozen=True)
class TwoQubitExpectations:
    """Closed-form values for the two-qubit detector (no linear algebra).

    ``canonical_vectors`` maps ``"E_0"``, ``"E_a"``, ``"E_b"`` to amplitude
    arrays in the preset's basis order, or is ``None`` when alpha or beta is 0.
    ``crossover_cos`` is ``None`` unless ``0 < V < 1``.
    """

    alpha: complex
    beta: complex
    visibility: float
    K_N: float
    K_E: float
    gamma_gap: float
    crossover_cos: float
    canonical_vectors: dict
    p_natural: dict
    q_natural: dict
    p_canonical: dict
    q_canonical: dict

    def K_N_of_delta(self, delta):
        V = self.visibility
        return (1.0 - V) / (1.0 + V * np.cos(delta))

    def K_E_of_delta(self, delta):
        return np.full(np.shape(delta), self.K_E) if np.ndim(delta) else self.K_E

    def P_of_delta(self, delta):
        return 0.5 * (1.0 + self.visibility * np.cos(delta))

    def projected_state(self, delta):
        """Detector state after a hit at ``delta`` (unnormalized), in basis order."""
        ph = np.exp(-1j * delta)
        out = np.zeros(4, dtype=np.complex128)
        out[_I00] = self.alpha * (1 + ph)
        out[_I10] = self.beta
        out[_I01] = self.beta * ph
        return out


def two_qubit_expectations(alpha, beta):
    alpha = complex(alpha)
    beta = complex(beta)
    a2 = abs(alpha) ** 2
    b2 = abs(beta) ** 2
    if abs(a2 + b2 - 1.0) > 1e-10:
        raise InputError("|alpha|^2 + |beta|^2 must be 1")
    V = a2
    gap = math.sqrt(max(0.0, 1.0 - a2 * a2))
    cross = None
    if 0.0 < V < 1.0:
        cross = (math.sqrt((1.0 - V) / (1.0 + V)) - 1.0) / V

    vectors = None
    if alpha != 0 and beta != 0:
        den = 2.0 * alpha * beta.conjugate()
        w_plus = (b2 + gap) / den
        w_minus = (b2 - gap) / den
        n0 = math.sqrt((1.0 - a2) / (1.0 + a2))
        nab = math.sqrt(a2 / (1.0 + a2))
        e0 = np.zeros(4, dtype=np.complex128)
        ea = np.zeros(4, dtype=np.complex128)
        eb = np.zeros(4, dtype=np.complex128)
        r = alpha.conjugate() / beta.conjugate()
        e0[[_I00, _I10, _I01]] = n0 * np.array([1.0, -r, -r])
        ea[[_I00, _I10, _I01]] = nab * np.array([1.0, w_plus, w_minus])
        eb[[_I00, _I10, _I01]] = nab * np.array([1.0, w_minus, w_plus])
        vectors = {"E_0": e0, "E_a": ea, "E_b": eb}

    return TwoQubitExpectations(
        alpha=alpha,
        beta=beta,
        visibility=V,
        K_N=b2,
        K_E=gap,
        gamma_gap=gap,
        crossover_cos=cross,
        canonical_vectors=vectors,
        p_natural={"00": a2, "10": b2 / 2, "01": b2 / 2, "11": 0.0},
        q_natural={"00": 0.5, "10": 1.0, "01": 1.0, "11": 0.5},
        p_canonical={"E_0": 0.0, "E_a": 0.5, "E_b": 0.5},
        q_canonical={"E_0": 0.5, "E_a": 0.5 * (1.0 + gap), "E_b": 0.5 * (1.0 + gap)},
    )
