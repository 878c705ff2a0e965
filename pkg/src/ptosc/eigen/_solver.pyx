# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled eigensolver kernel: Hessenberg reduction + shifted QR.

Same algorithm and error contract as the pure numpy twin in
``_solver_py.py``; the inner loops run as C for roughly an order of
magnitude speedup on 100x100 matrices.
"""

import numpy as np

from ptosc.errors import EigenConvergenceError

from libc.math cimport fabs, hypot, sqrt

cdef double EPS = 2.220446049250313e-16


cdef inline double _cmag(double complex z) nogil:
    return hypot(z.real, z.imag)


cdef inline double complex _conj(double complex z) nogil:
    return z.conjugate()


cdef inline double complex _csqrt(double complex z) nogil:
    cdef double re = z.real
    cdef double im = z.imag
    cdef double r = hypot(re, im)
    cdef double t
    if r == 0.0:
        return 0.0
    if re >= 0.0:
        t = sqrt(0.5 * (r + re))
        return t + (im / (2.0 * t)) * 1j
    t = sqrt(0.5 * (r - re))
    if im >= 0.0:
        return (im / (2.0 * t)) + t * 1j
    return (-im / (2.0 * t)) - t * 1j


cdef void _hessenberg(double complex[:, ::1] a, double complex[::1] v) nogil:
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, k
    cdef double scale, ssq, t, norm, vnorm
    cdef double complex x0, phase, alpha, s
    for k in range(n - 2):
        scale = 0.0
        for i in range(k + 1, n):
            t = _cmag(a[i, k])
            if t > scale:
                scale = t
        if scale == 0.0:
            continue
        ssq = 0.0
        for i in range(k + 1, n):
            t = _cmag(a[i, k]) / scale
            ssq += t * t
        norm = scale * sqrt(ssq)
        x0 = a[k + 1, k]
        t = _cmag(x0)
        if t > 0.0:
            phase = x0 / t
        else:
            phase = 1.0
        alpha = -phase * norm
        v[k + 1] = x0 - alpha
        for i in range(k + 2, n):
            v[i] = a[i, k]
        scale = 0.0
        for i in range(k + 1, n):
            t = _cmag(v[i])
            if t > scale:
                scale = t
        if scale == 0.0:
            continue
        ssq = 0.0
        for i in range(k + 1, n):
            t = _cmag(v[i]) / scale
            ssq += t * t
        vnorm = scale * sqrt(ssq)
        for i in range(k + 1, n):
            v[i] = v[i] / vnorm
        # left reflection: rows k+1..n-1, columns k..n-1
        for j in range(k, n):
            s = 0.0
            for i in range(k + 1, n):
                s = s + _conj(v[i]) * a[i, j]
            s = 2.0 * s
            for i in range(k + 1, n):
                a[i, j] = a[i, j] - s * v[i]
        # right reflection: all rows, columns k+1..n-1
        for i in range(n):
            s = 0.0
            for j in range(k + 1, n):
                s = s + a[i, j] * v[j]
            s = 2.0 * s
            for j in range(k + 1, n):
                a[i, j] = a[i, j] - s * _conj(v[j])
        a[k + 1, k] = alpha
        for i in range(k + 2, n):
            a[i, k] = 0.0


cdef void _eig2x2(double complex a, double complex b,
                  double complex c, double complex d,
                  double complex *lam1, double complex *lam2) nogil:
    cdef double complex s = 0.5 * (a + d)
    cdef double complex z = 0.5 * (a - d)
    cdef double complex disc = _csqrt(z * z + b * c)
    cdef double complex l1 = s + disc
    cdef double complex l2 = s - disc
    cdef double complex det = a * d - b * c
    if _cmag(l1) >= _cmag(l2):
        if l1 != 0.0:
            l2 = det / l1
    else:
        if l2 != 0.0:
            l1 = det / l2
    lam1[0] = l1
    lam2[0] = l2


cdef void _qr_sweep(double complex[:, ::1] a, Py_ssize_t lo, Py_ssize_t hi,
                    double complex shift, double[::1] cs,
                    double complex[::1] sn) nogil:
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, k, top
    cdef double ax, ay, r, c
    cdef double complex x, y, s, t1, t2
    for j in range(lo, hi + 1):
        a[j, j] = a[j, j] - shift
    for k in range(lo, hi):
        x = a[k, k]
        y = a[k + 1, k]
        ay = _cmag(y)
        if ay == 0.0:
            c = 1.0
            s = 0.0
        else:
            ax = _cmag(x)
            if ax == 0.0:
                c = 0.0
                s = _conj(y) / ay
            else:
                r = hypot(ax, ay)
                c = ax / r
                s = (x / ax) * _conj(y) / r
        cs[k] = c
        sn[k] = s
        for j in range(k, n):
            t1 = a[k, j]
            t2 = a[k + 1, j]
            a[k, j] = c * t1 + s * t2
            a[k + 1, j] = -_conj(s) * t1 + c * t2
        a[k + 1, k] = 0.0
    for k in range(lo, hi):
        c = cs[k]
        s = sn[k]
        top = k + 2
        if top > hi:
            top = hi
        for i in range(top + 1):
            t1 = a[i, k]
            t2 = a[i, k + 1]
            a[i, k] = c * t1 + _conj(s) * t2
            a[i, k + 1] = -s * t1 + c * t2
    for j in range(lo, hi + 1):
        a[j, j] = a[j, j] + shift


def eigvals(a_arr, max_sweeps):
    """Eigenvalues of a general complex square matrix (destroys input).

    ``a_arr`` must be a C-contiguous complex128 array.  Raises
    EigenConvergenceError when the sweep budget runs out before the
    matrix deflates completely.
    """
    cdef double complex[:, ::1] a = a_arr
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t budget = int(max_sweeps)
    evs_arr = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] evs = evs_arr
    scratch = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] v = scratch
    sn_arr = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] sn = sn_arr
    cs_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] cs = cs_arr
    cdef Py_ssize_t hi, lo, m, i, j
    cdef Py_ssize_t sweeps = 0, stall = 0
    cdef double anorm, colsum, tst
    cdef double complex shift, lam1, lam2

    if n == 1:
        evs[0] = a[0, 0]
        return evs_arr
    _hessenberg(a, v)
    anorm = 0.0
    for j in range(n):
        colsum = 0.0
        for i in range(n):
            colsum += _cmag(a[i, j])
        if colsum > anorm:
            anorm = colsum
    if anorm == 0.0:
        anorm = 1.0
    hi = n - 1
    while hi >= 0:
        if hi == 0:
            evs[0] = a[0, 0]
            break
        lo = 0
        for m in range(hi, 0, -1):
            tst = _cmag(a[m - 1, m - 1]) + _cmag(a[m, m])
            if tst == 0.0:
                tst = anorm
            if _cmag(a[m, m - 1]) <= EPS * tst:
                a[m, m - 1] = 0.0
                lo = m
                break
        if lo == hi:
            evs[hi] = a[hi, hi]
            hi -= 1
            stall = 0
            continue
        if lo == hi - 1:
            _eig2x2(a[hi - 1, hi - 1], a[hi - 1, hi],
                    a[hi, hi - 1], a[hi, hi], &lam1, &lam2)
            evs[hi] = lam1
            evs[hi - 1] = lam2
            hi -= 2
            stall = 0
            continue
        if sweeps >= budget:
            raise EigenConvergenceError(lo, hi, sweeps)
        sweeps += 1
        stall += 1
        if stall % 10 == 0:
            shift = a[hi, hi] + 0.75 * _cmag(a[hi, hi - 1])
        else:
            _eig2x2(a[hi - 1, hi - 1], a[hi - 1, hi],
                    a[hi, hi - 1], a[hi, hi], &lam1, &lam2)
            if _cmag(lam1 - a[hi, hi]) <= _cmag(lam2 - a[hi, hi]):
                shift = lam1
            else:
                shift = lam2
        _qr_sweep(a, lo, hi, shift, cs, sn)
    return evs_arr
