# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Same contracts as ``_kernels_py``."""
import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt, fabs, copysign

cnp.import_array()

cdef int _MAX_SWEEPS = 64


cdef inline double _abs2(double complex z) nogil:
    return z.real * z.real + z.imag * z.imag


def jacobi_eigh(m):
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] arr = np.array(m, dtype=np.complex128, copy=True, order="C")
    cdef Py_ssize_t n = arr.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] varr = np.eye(n, dtype=np.complex128)
    cdef double complex[:, ::1] a = arr
    cdef double complex[:, ::1] v = varr
    cdef Py_ssize_t p, q, k, sweep
    cdef double scale = 0.0, thresh, off, ab, app, aqq, theta, t, c, s
    cdef double complex b, ph, cph, xp, xq

    for p in range(n):
        for q in range(n):
            scale += _abs2(a[p, q])
    scale = sqrt(scale)
    if scale == 0.0:
        return np.zeros(n), varr
    thresh = (1e-17 * scale) * (1e-17 * scale)

    with nogil:
        for sweep in range(_MAX_SWEEPS):
            off = 0.0
            for p in range(n - 1):
                for q in range(p + 1, n):
                    off += _abs2(a[p, q])
            if off <= thresh:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    b = a[p, q]
                    ab = sqrt(_abs2(b))
                    if ab == 0.0:
                        continue
                    ph = b / ab
                    cph = ph.conjugate()
                    app = a[p, p].real
                    aqq = a[q, q].real
                    theta = (aqq - app) / (2.0 * ab)
                    if fabs(theta) > 1e150:
                        t = 0.5 / theta
                    else:
                        t = copysign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        xp = a[k, p]
                        xq = a[k, q]
                        a[k, p] = c * xp - (s * cph) * xq
                        a[k, q] = s * xp + (c * cph) * xq
                    for k in range(n):
                        xp = a[p, k]
                        xq = a[q, k]
                        a[p, k] = c * xp - (s * ph) * xq
                        a[q, k] = s * xp + (c * ph) * xq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    a[p, p] = app - t * ab
                    a[q, q] = aqq + t * ab
                    for k in range(n):
                        xp = v[k, p]
                        xq = v[k, q]
                        v[k, p] = c * xp - (s * cph) * xq
                        v[k, q] = s * xp + (c * cph) * xq

    w = np.empty(n)
    for p in range(n):
        w[p] = a[p, p].real
    return w, varr


def batch_knowledge(chi_a, chi_b, bases):
    cdef const double complex[::1] ca = np.ascontiguousarray(chi_a, dtype=np.complex128)
    cdef const double complex[::1] cb = np.ascontiguousarray(chi_b, dtype=np.complex128)
    cdef const double complex[:, :, ::1] w = np.ascontiguousarray(bases, dtype=np.complex128)
    cdef Py_ssize_t T = w.shape[0], n = w.shape[1], d = w.shape[2]
    cdef Py_ssize_t t, i, k
    cdef double complex sa, sb, wc
    cdef double oa, ob, total
    out = np.empty(T)
    cdef double[::1] res = out
    with nogil:
        for t in range(T):
            total = 0.0
            for i in range(n):
                sa = 0.0
                sb = 0.0
                for k in range(d):
                    wc = w[t, i, k].conjugate()
                    sa = sa + wc * ca[k]
                    sb = sb + wc * cb[k]
                oa = _abs2(sa)
                ob = _abs2(sb)
                total += oa if oa > ob else ob
            res[t] = total - 1.0
    return out


def mc_tally(cdf, u_event, u_path, Py_ssize_t grid, post_a, guess_a, Py_ssize_t bins):
    cdef const double[::1] c = np.ascontiguousarray(cdf, dtype=np.float64)
    cdef const double[::1] ue = np.ascontiguousarray(u_event, dtype=np.float64)
    cdef const double[::1] up = np.ascontiguousarray(u_path, dtype=np.float64)
    cdef const double[::1] pa = np.ascontiguousarray(post_a, dtype=np.float64)
    cdef const unsigned char[::1] ga = np.ascontiguousarray(guess_a, dtype=np.uint8)
    n_arr = np.zeros(bins, dtype=np.int64)
    nc_arr = np.zeros(bins, dtype=np.int64)
    cdef cnp.int64_t[::1] n = n_arr
    cdef cnp.int64_t[::1] nc = nc_arr
    cdef Py_ssize_t size = c.shape[0], m = ue.shape[0]
    cdef Py_ssize_t e, lo, hi, mid, outcome, b
    cdef double u
    cdef bint path_a, guess
    with nogil:
        for e in range(m):
            u = ue[e]
            lo = 0
            hi = size
            while lo < hi:
                mid = (lo + hi) >> 1
                if c[mid] <= u:
                    lo = mid + 1
                else:
                    hi = mid
            if lo > size - 1:
                lo = size - 1
            outcome = lo // grid
            b = (lo % grid) * bins // grid
            path_a = up[e] < pa[outcome]
            guess = ga[outcome] != 0
            n[b] += 1
            if path_a == guess:
                nc[b] += 1
    return n_arr, nc_arr
