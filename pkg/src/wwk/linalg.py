"""Small dense complex linear algebra.

State vectors are 1-D ``complex128`` arrays. Families of vectors (bases,
eigenvectors, complements) are 2-D arrays with one vector per **row**.
"""
import numpy as np

from wwk._backend import kernels
from wwk.errors import DimensionMismatch, NotHermitian, RankDeficient

# tolerance ladder: constructed identities, iterative results, composed pipelines
TOL_EXACT = 1e-12
TOL_ITER = 1e-10
TOL_PIPE = 1e-9


def as_state(v):
    """Return ``v`` as a 1-D complex array (no normalization)."""
    arr = np.asarray(v, dtype=np.complex128)
    if arr.ndim != 1 or arr.size == 0:
        raise DimensionMismatch(f"expected a non-empty 1-D amplitude vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("amplitudes must be finite")
    return arr


def inner(u, v):
    """``<u|v>``: conjugate-linear in ``u``, linear in ``v``."""
    u = np.asarray(u)
    v = np.asarray(v)
    if u.shape != v.shape:
        raise DimensionMismatch(f"dimension mismatch: {u.shape} vs {v.shape}")
    return complex(np.vdot(u, v))


def norm(v):
    return float(np.linalg.norm(v))


def normalize(v):
    v = as_state(v)
    n = norm(v)
    if n == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return v / n


def outer(u, v):
    """``|u><v|``."""
    return np.outer(u, np.conj(v))


def basis_vector(k, dim):
    e = np.zeros(dim, dtype=np.complex128)
    e[k] = 1.0
    return e


def fix_phase(v):
    """Rotate the global phase so the largest-magnitude amplitude is real-positive.

    Ties are resolved toward the lowest index.
    """
    v = np.asarray(v, dtype=np.complex128)
    mags = np.abs(v)
    top = mags.max()
    if top == 0.0:
        return v.copy()
    k = int(np.flatnonzero(mags >= top - TOL_EXACT)[0])
    return v * (np.conj(v[k]) / mags[k])


def gram(vectors):
    """Gram matrix ``G[i, j] = <v_i|v_j>`` of a row stack."""
    vs = np.asarray(vectors, dtype=np.complex128)
    return np.conj(vs) @ vs.T


def _project_out(x, family):
    # two passes of classical Gram-Schmidt keep the residual orthogonal at 1e-16
    if not family:
        return x
    f = np.asarray(family)
    for _ in range(2):
        x = x - f.T @ (np.conj(f) @ x)
    return x


def orthonormal_complement(span, dim):
    """Orthonormal basis of the orthogonal complement of ``span`` in C^dim.

    Candidates are the standard basis vectors taken in index order, each
    accepted once its residual is not negligible. The result is deterministic
    and each vector is phase-fixed with :func:`fix_phase`.

    Returns a ``(dim - len(span), dim)`` array.
    """
    span = [as_state(s) for s in span]
    for s in span:
        if s.size != dim:
            raise DimensionMismatch(f"span vector of dimension {s.size} in C^{dim}")
    if len(span) > dim:
        raise RankDeficient(f"{len(span)} vectors cannot be independent in C^{dim}")

    family = []
    for s in span:
        r = _project_out(s, family)
        nr = norm(r)
        if nr <= TOL_ITER * max(norm(s), 1.0):
            raise RankDeficient("span vectors are linearly dependent")
        family.append(r / nr)

    out = []
    need = dim - len(span)
    for k in range(dim):
        if len(out) == need:
            break
        r = _project_out(basis_vector(k, dim), family)
        nr = norm(r)
        # any full basis leaves some candidate with residual^2 >= need/dim, so 1e-3 is safe
        if nr < 1e-3:
            continue
        r = _project_out(r / nr, family)
        r = fix_phase(r / norm(r))
        family.append(r)
        out.append(r)
    if len(out) != need:
        # unreachable for independent spans; kept as a guard
        raise RankDeficient("could not complete the basis")
    return np.array(out, dtype=np.complex128).reshape(need, dim)


def is_hermitian(m, tol=TOL_EXACT):
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and bool(
        np.max(np.abs(m - m.conj().T), initial=0.0) <= tol * max(1.0, np.max(np.abs(m), initial=0.0))
    )


def hermitian_eig(m):
    """Eigendecomposition of a small Hermitian matrix.

    Parameters
    ----------
    m : (d, d) array_like
        Hermitian within ``1e-12`` (relative to its largest entry).

    Returns
    -------
    eigenvalues : (d,) ndarray
        Real, sorted descending.
    eigenvectors : (d, d) ndarray
        Row ``k`` is the unit eigenvector for ``eigenvalues[k]``, phase-fixed so
        its largest amplitude is real-positive.

    Raises
    ------
    NotHermitian
    """
    m = np.asarray(m, dtype=np.complex128)
    if not is_hermitian(m):
        raise NotHermitian("matrix is not Hermitian")
    m = 0.5 * (m + m.conj().T)
    w, v = kernels.jacobi_eigh(m)
    order = np.argsort(-w, kind="stable")
    vecs = np.array([fix_phase(v[:, k]) for k in order]).reshape(m.shape)
    return w[order], vecs


def random_unitaries(rng, count, dim):
    """``count`` Haar-random ``dim x dim`` unitaries drawn from ``rng``.

    QR of i.i.d. complex Gaussian matrices, with the diagonal of R rotated to
    be real-positive so the distribution is exactly Haar.
    """
    z = (rng.standard_normal((count, dim, dim)) + 1j * rng.standard_normal((count, dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=1, axis2=2)
    ph = d / np.abs(d)
    return q * ph[:, None, :]


def random_unitary(dim, seed):
    """A seeded Haar-random unitary (columns orthonormal)."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    return random_unitaries(np.random.default_rng(seed), 1, dim)[0]


def random_state(rng, dim):
    """A uniformly random unit vector in C^dim."""
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)
