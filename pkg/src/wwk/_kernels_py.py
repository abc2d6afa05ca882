"""Pure-Python/numpy implementations of the hot kernels.

Mirrors ``_kernels.pyx`` function by function. The compiled module is used when
it imports; this one is the fallback (see ``wwk._backend``).
"""
import math

import numpy as np

_MAX_SWEEPS = 64


def jacobi_eigh(m):
    """Cyclic Jacobi diagonalization of a complex Hermitian matrix.

    Returns ``(w, v)`` with unsorted real eigenvalues ``w`` and eigenvectors in
    the columns of ``v``.
    """
    a = np.array(m, dtype=np.complex128, copy=True)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    scale = np.sqrt(np.sum(np.abs(a) ** 2))
    if scale == 0.0:
        return np.zeros(n), v
    thresh = (1e-17 * scale) ** 2
    for _ in range(_MAX_SWEEPS):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += abs(a[p, q]) ** 2
        if off <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = a[p, q]
                ab = abs(b)
                if ab == 0.0:
                    continue
                ph = b / ab
                cph = ph.conjugate()
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * ab)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # columns: A <- A J, J = diag(1, conj(ph)) @ [[c, s], [-s, c]]
                colp = a[:, p].copy()
                colq = a[:, q]
                a[:, p] = c * colp - (s * cph) * colq
                a[:, q] = s * colp + (c * cph) * colq
                rowp = a[p, :].copy()
                rowq = a[q, :]
                a[p, :] = c * rowp - (s * ph) * rowq
                a[q, :] = s * rowp + (c * ph) * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * ab
                a[q, q] = aqq + t * ab
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - (s * cph) * vq
                v[:, q] = s * vp + (c * cph) * vq
    return np.real(np.diagonal(a)).copy(), v


def batch_knowledge(chi_a, chi_b, bases):
    """Knowledge for a stack of bases, shape ``(T, n, d)`` with rows as vectors.

    Per outcome ``p_i q_i = max(|<W_i|chi_a>|^2, |<W_i|chi_b>|^2) / 2``, so
    ``K = sum_i max(...) - 1``.
    """
    w = np.conj(np.asarray(bases, dtype=np.complex128))
    oa = np.abs(w @ np.asarray(chi_a, dtype=np.complex128)) ** 2
    ob = np.abs(w @ np.asarray(chi_b, dtype=np.complex128)) ** 2
    return np.maximum(oa, ob).sum(axis=1) - 1.0


def mc_tally(cdf, u_event, u_path, grid, post_a, guess_a, bins):
    """Turn pre-drawn uniforms into per-bin event and success counts.

    ``cdf`` runs over the flattened (outcome, grid point) index. An event picks
    the first index whose cdf exceeds ``u_event``; the true path is A when
    ``u_path < post_a[outcome]``; the guess is correct when it matches.
    """
    cdf = np.asarray(cdf, dtype=np.float64)
    idx = np.searchsorted(cdf, u_event, side="right")
    np.minimum(idx, cdf.size - 1, out=idx)
    outcome = idx // grid
    b = (idx % grid) * bins // grid
    path_a = np.asarray(u_path) < np.asarray(post_a)[outcome]
    correct = path_a == np.asarray(guess_a, dtype=bool)[outcome]
    n = np.bincount(b, minlength=bins).astype(np.int64)
    n_correct = np.bincount(b[correct], minlength=bins).astype(np.int64)
    return n, n_correct
