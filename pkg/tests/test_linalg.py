import json
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wwk import linalg
from wwk.errors import DimensionMismatch, NotHermitian, RankDeficient

GOLDEN = Path(__file__).parent / "golden"


def test_inner_is_conjugate_linear_in_first_slot():
    u = np.array([1j, 0.0])
    v = np.array([1.0, 0.0])
    assert linalg.inner(u, v) == pytest.approx(-1j)
    assert linalg.inner(v, u) == pytest.approx(1j)


def test_inner_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        linalg.inner(np.ones(2), np.ones(3))


def test_normalize_and_zero_vector():
    v = linalg.normalize([3.0, 4.0j])
    assert np.allclose(v, [0.6, 0.8j])
    with pytest.raises(ValueError):
        linalg.normalize([0.0, 0.0])


def test_as_state_rejects_bad_input():
    with pytest.raises(DimensionMismatch):
        linalg.as_state(np.ones((2, 2)))
    with pytest.raises(ValueError):
        linalg.as_state([np.nan, 1.0])


def test_fix_phase_makes_largest_amplitude_real_positive():
    v = np.exp(0.7j) * np.array([0.6, -0.8j])
    w = linalg.fix_phase(v)
    assert w[1].real == pytest.approx(0.8) and abs(w[1].imag) < 1e-15
    # tie resolves toward the first index
    t = linalg.fix_phase(np.array([1j, -1j]) / np.sqrt(2))
    assert t[0].real > 0 and abs(t[0].imag) < 1e-15


def test_complement_of_basis_vector():
    out = linalg.orthonormal_complement([linalg.basis_vector(0, 3)], 3)
    assert out.shape == (2, 3)
    assert np.allclose(out, [[0, 1, 0], [0, 0, 1]])


def test_complement_spans_the_rest(rng):
    for dim in range(2, 9):
        k = int(rng.integers(1, dim + 1))
        span = [linalg.random_state(rng, dim) for _ in range(k)]
        out = linalg.orthonormal_complement(span, dim)
        assert out.shape == (dim - k, dim)
        if dim > k:
            assert np.allclose(linalg.gram(out), np.eye(dim - k), atol=1e-12)
            for s in span:
                assert np.max(np.abs(np.conj(out) @ s)) < 1e-12


def test_complement_rank_deficient():
    a = linalg.normalize([1.0, 1.0, 0.0])
    with pytest.raises(RankDeficient):
        linalg.orthonormal_complement([a, 1j * a], 3)
    with pytest.raises(RankDeficient):
        linalg.orthonormal_complement([linalg.basis_vector(k, 2) for k in range(2)] + [a[:2] / np.linalg.norm(a[:2])], 2)


def test_complement_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        linalg.orthonormal_complement([np.ones(2) / np.sqrt(2)], 3)


def test_eig_of_two_state_difference():
    # |a><a| - |b><b| with |<a|b>| = 1/2 has eigenvalues +-sqrt(1 - 1/4)
    a = np.array([1.0, 0.0])
    b = np.array([0.5, np.sqrt(3) / 2])
    w, vecs = linalg.hermitian_eig(np.outer(a, a) - np.outer(b, b))
    assert w == pytest.approx([np.sqrt(3) / 2, -np.sqrt(3) / 2], abs=1e-12)
    assert np.allclose(linalg.gram(vecs), np.eye(2), atol=1e-12)


def test_eig_diagonal_sorted_descending():
    w, vecs = linalg.hermitian_eig(np.diag([1.0, 3.0, -2.0]))
    assert np.allclose(w, [3.0, 1.0, -2.0])
    assert np.allclose(np.abs(vecs), [[0, 1, 0], [1, 0, 0], [0, 0, 1]])


def test_eig_zero_matrix():
    w, vecs = linalg.hermitian_eig(np.zeros((3, 3)))
    assert np.allclose(w, 0.0)
    assert np.allclose(linalg.gram(vecs), np.eye(3))


def test_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        linalg.hermitian_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_eig_is_deterministic_with_real_positive_lead(rng):
    h = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    h = h + h.conj().T
    w1, v1 = linalg.hermitian_eig(h)
    w2, v2 = linalg.hermitian_eig(h.copy())
    assert np.array_equal(w1, w2) and np.array_equal(v1, v2)
    for v in v1:
        k = int(np.argmax(np.abs(v)))
        assert abs(v[k].imag) < 1e-12 and v[k].real > 0


@pytest.mark.parametrize("dim", [1, 2, 3, 5, 8, 12, 16])
def test_eig_matches_lapack(dim):
    # numpy's LAPACK eigh is an independent oracle for the Jacobi solver
    g = np.random.default_rng(dim)
    for _ in range(20):
        h = g.standard_normal((dim, dim)) + 1j * g.standard_normal((dim, dim))
        h = h + h.conj().T
        w, vecs = linalg.hermitian_eig(h)
        ref = np.linalg.eigvalsh(h)[::-1]
        assert np.allclose(w, ref, atol=1e-10 * max(1.0, np.abs(ref).max()))
        recon = vecs.T @ np.diag(w) @ np.conj(vecs)
        assert np.max(np.abs(recon - h)) < 1e-10 * max(1.0, np.abs(h).max())
        assert np.max(np.abs(linalg.gram(vecs) - np.eye(dim))) < 1e-10


def test_eig_degenerate_spectrum_is_orthonormal():
    q = linalg.random_unitary(4, 3)
    h = q @ np.diag([2.0, 2.0, -1.0, -1.0]) @ q.conj().T
    w, vecs = linalg.hermitian_eig(h)
    assert np.allclose(w, [2, 2, -1, -1], atol=1e-12)
    assert np.max(np.abs(linalg.gram(vecs) - np.eye(4))) < 1e-10


def test_random_unitary_deterministic():
    assert np.array_equal(linalg.random_unitary(4, 7), linalg.random_unitary(4, 7))
    assert not np.array_equal(linalg.random_unitary(4, 7), linalg.random_unitary(4, 8))


def test_random_unitary_columns_orthonormal_over_many_seeds():
    for seed in range(1000):
        u = linalg.random_unitary(1 + seed % 8, seed)
        assert np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) < 1e-12


def test_random_unitaries_look_haar():
    # |U_00|^2 of a Haar unitary in C^d is Beta(1, d-1) with mean 1/d
    g = np.random.default_rng(0)
    u = linalg.random_unitaries(g, 20000, 4)
    m = np.mean(np.abs(u[:, 0, 0]) ** 2)
    assert m == pytest.approx(0.25, abs=0.01)
    # Haar measure is invariant under phases; diagonal entries have uniform argument
    assert abs(np.mean(np.exp(1j * np.angle(u[:, 0, 0])))) < 0.03


def test_rng_golden_draws():
    ref = json.loads((GOLDEN / "rng_seed42.json").read_text())
    g = np.random.Generator(np.random.PCG64(ref["seed"]))
    assert [int(x) for x in g.bit_generator.random_raw(4)] == ref["random_raw_uint64"]
    g = np.random.Generator(np.random.PCG64(ref["seed"]))
    assert [float(g.random()) for _ in range(4)] == ref["random_float64"]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.integers(0, 2**32 - 1))
def test_eig_reconstruction_property(dim, seed):
    g = np.random.default_rng(seed)
    h = g.standard_normal((dim, dim)) + 1j * g.standard_normal((dim, dim))
    h = h + h.conj().T
    w, vecs = linalg.hermitian_eig(h)
    assert np.all(np.diff(w) <= 1e-12)
    recon = vecs.T @ np.diag(w) @ np.conj(vecs)
    assert np.max(np.abs(recon - h)) < 1e-10 * max(1.0, np.abs(h).max())


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.integers(0, 2**32 - 1))
def test_complement_property(dim, seed):
    g = np.random.default_rng(seed)
    k = int(g.integers(1, dim))
    span = [linalg.random_state(g, dim) for _ in range(k)]
    full = linalg.orthonormal_complement(span, dim)
    assert np.max(np.abs(linalg.gram(full) - np.eye(dim - k))) < 1e-10
    assert np.max(np.abs(np.conj(full) @ np.array(span).T)) < 1e-10
