import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import detector_pairs
from wwk.errors import DegenerateProjection, DimensionMismatch, InputError
from wwk.interferometer import (
    DetectorPair,
    detection_probability,
    detector_density,
    fringe,
    overlap,
    projected_detector_state,
    projection_norm,
    quanton_density,
    random_pair,
    slit_state,
    visibility,
)
from wwk.presets import two_qubit


def _joint_state(pair):
    # (psi_a (x) chi_a + psi_b (x) chi_b) / sqrt(2), quanton slot first
    return (np.kron([1.0, 0.0], pair.chi_a) + np.kron([0.0, 1.0], pair.chi_b)) / np.sqrt(2)


def _screen_probability(pair, delta):
    # project the joint state onto <psi_delta| and take the squared norm of what is left
    psi = slit_state(delta)
    left = np.conj(psi) @ _joint_state(pair).reshape(2, pair.dim)
    return float(np.vdot(left, left).real)


def test_pair_validation():
    with pytest.raises(InputError):
        DetectorPair([1.0, 1.0], [1.0, 0.0])
    with pytest.raises(DimensionMismatch):
        DetectorPair([1.0, 0.0], [1.0, 0.0, 0.0])
    with pytest.raises(InputError):
        DetectorPair([1.0, 0.0], [0.0, 1.0], labels=("x",))
    p = DetectorPair.from_unnormalized([2.0, 0.0], [1.0, 1.0])
    assert abs(overlap(p)) == pytest.approx(1 / np.sqrt(2))


def test_pair_is_read_only():
    p = DetectorPair([1.0, 0.0], [0.0, 1.0])
    with pytest.raises(ValueError):
        p.chi_a[0] = 0.0


def test_equal_amplitude_two_qubit_fringe():
    pair = two_qubit(1 / np.sqrt(2), 1 / np.sqrt(2))
    assert visibility(pair) == pytest.approx(0.5, abs=1e-15)
    assert detection_probability(pair, 0.0) == pytest.approx(0.75, abs=1e-15)
    assert detection_probability(pair, np.pi) == pytest.approx(0.25, abs=1e-15)


def test_fringe_phase_and_minimum(rng):
    for _ in range(50):
        pair = random_pair(rng, 4)
        f = fringe(pair)
        gamma = np.angle(overlap(pair))
        assert -np.pi < f.theta <= np.pi
        assert f.visibility == pytest.approx(abs(overlap(pair)))
        # minimum at delta = pi + gamma
        d_min = np.pi + gamma
        assert detection_probability(pair, d_min) == pytest.approx((1 - f.visibility) / 2, abs=1e-14)
        d = rng.uniform(0, 2 * np.pi, 8)
        assert np.allclose(f.probability(d), detection_probability(pair, d), atol=1e-14)


def test_probability_matches_joint_state_projection(rng):
    for _ in range(20):
        pair = random_pair(rng, int(rng.integers(2, 7)))
        for delta in rng.uniform(-np.pi, 3 * np.pi, 5):
            assert detection_probability(pair, delta) == pytest.approx(_screen_probability(pair, delta), abs=1e-14)


def test_quanton_density_consistency(rng):
    pair = random_pair(rng, 5)
    rho = quanton_density(pair)
    # partial trace of the joint state over the detector
    psi = _joint_state(pair).reshape(2, pair.dim)
    assert np.allclose(rho, psi @ psi.conj().T, atol=1e-15)
    for delta in rng.uniform(0, 2 * np.pi, 100):
        s = slit_state(delta)
        assert np.vdot(s, rho @ s).real == pytest.approx(detection_probability(pair, delta), abs=1e-14)


def test_detector_density_trace_and_hermitian(rng):
    pair = random_pair(rng, 6)
    rho = detector_density(pair)
    assert np.trace(rho).real == pytest.approx(1.0)
    assert np.allclose(rho, rho.conj().T)
    psi = _joint_state(pair).reshape(2, pair.dim)
    assert np.allclose(rho, psi.T @ psi.conj(), atol=1e-15)


def test_projection_norm_squared_is_four_P(rng):
    pair = random_pair(rng, 3)
    for delta in rng.uniform(0, 2 * np.pi, 20):
        assert projection_norm(pair, delta) ** 2 == pytest.approx(4 * detection_probability(pair, delta), abs=1e-14)


def test_projected_state_at_dark_fringe_of_two_qubits():
    a = b = 1 / np.sqrt(2)
    pair = two_qubit(a, b)
    st_ = projected_detector_state(pair, np.pi)
    # chi_a - chi_b = beta(|10> - |01>)
    ref = np.array([0, -1, 1, 0]) / np.sqrt(2)
    assert abs(abs(np.vdot(ref, st_)) - 1) < 1e-14


def test_degenerate_projection():
    v = np.array([1.0, 0.0])
    pair = DetectorPair(v, v)
    with pytest.raises(DegenerateProjection):
        projected_detector_state(pair, np.pi)


@settings(max_examples=80, deadline=None)
@given(detector_pairs(), st.floats(-10, 10))
def test_probability_bounds(pair, delta):
    V = visibility(pair)
    assert 0.0 <= V <= 1.0 + 1e-12
    P = detection_probability(pair, delta)
    assert (1 - V) / 2 - 1e-14 <= P <= (1 + V) / 2 + 1e-14
    # uniform average over the screen is 1/2
    d = 2 * np.pi * np.arange(16) / 16 + delta
    assert np.mean(detection_probability(pair, d)) == pytest.approx(0.5, abs=1e-14)
