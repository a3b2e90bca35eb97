# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled evaluation kernels.

Mirror of ``mlbiv._kernels_py`` (same Lanczos coefficients, same shell
order, same stopping rule); the hot loops run without the GIL so grid
evaluations can thread.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY, M_PI, fabs, log, round as c_round

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double complex clog(double complex)
    double complex csin(double complex)
    double cabs(double complex)
    double creal(double complex)
    double cimag(double complex)

BACKEND = "compiled"

cdef double LOG_SQRT_TWO_PI = 0.91893853320467274178
cdef double LOG_PI = 1.1447298858494001741
cdef double LANCZOS_G = 4.7421875
cdef double[15] LANCZOS_C
LANCZOS_C[0] = 0.99999999999999709182
LANCZOS_C[1] = 57.156235665862923517
LANCZOS_C[2] = -59.597960355475491248
LANCZOS_C[3] = 14.136097974741747174
LANCZOS_C[4] = -0.49191381609762019978
LANCZOS_C[5] = 3.3994649984811888699e-5
LANCZOS_C[6] = 4.6523628927048575665e-5
LANCZOS_C[7] = -9.8374475304879564677e-5
LANCZOS_C[8] = 1.5808870322491248884e-4
LANCZOS_C[9] = -2.1026444172410488319e-4
LANCZOS_C[10] = 2.1743961811521264320e-4
LANCZOS_C[11] = -1.6431810653676389022e-4
LANCZOS_C[12] = 8.4418223983852743293e-5
LANCZOS_C[13] = -2.6190838401581408670e-5
LANCZOS_C[14] = 3.6899182659531622704e-6

cdef double complex J = 1j
cdef double complex TWO_J = 2j


cdef double complex _lanczos_right(double complex z) nogil:
    cdef double complex zm = z - 1.0
    cdef double complex s = LANCZOS_C[0]
    cdef int i
    for i in range(1, 15):
        s = s + LANCZOS_C[i] / (zm + i)
    cdef double complex t = zm + LANCZOS_G + 0.5
    return LOG_SQRT_TWO_PI + (zm + 0.5) * clog(t) - t + clog(s)


cdef double complex _log_sin_pi(double complex z) nogil:
    cdef double complex w = M_PI * z
    if fabs(cimag(w)) < 20.0:
        return clog(csin(w))
    if cimag(w) > 0:
        return -J * w + clog(-(1.0 - cexp(TWO_J * w))) - clog(TWO_J)
    return J * w + clog(1.0 - cexp(-TWO_J * w)) - clog(TWO_J)


cdef double complex clgamma(double complex z) nogil:
    if creal(z) >= 0.5:
        return _lanczos_right(z)
    return LOG_PI - _log_sin_pi(z) - _lanczos_right(1.0 - z)


cdef inline bint _is_pole(double complex z) nogil:
    return cimag(z) == 0.0 and creal(z) <= 0.0 and creal(z) == c_round(creal(z))


def log_gamma(z):
    """log Gamma for a scalar complex z away from the poles."""
    return clgamma(z)


def log_gamma_arr(z):
    """Vectorised log Gamma over a complex ndarray (no pole entries allowed)."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] flat = np.ascontiguousarray(
        np.asarray(z, dtype=np.complex128).ravel()
    )
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty_like(flat)
    cdef Py_ssize_t i, n = flat.shape[0]
    with nogil:
        for i in range(n):
            out[i] = clgamma(flat[i])
    return out.reshape(np.shape(z))


cdef double _log_factorials(double[:] lf, int n) nogil:
    cdef int i
    lf[0] = 0.0
    for i in range(1, n + 1):
        lf[i] = lf[i - 1] + log(<double> i)
    return 0.0


def sum_bivariate(a, b, g, d, x, y, double tol, int max_shell, int quiet_shells):
    """Adaptive anti-diagonal shell summation of the double series at (x, y)."""
    cdef double complex ca = a, cb = b, cg = g, cd = d, cx = x, cy = y
    cdef bint x_zero = (cx == 0), y_zero = (cy == 0)
    cdef double complex lx = 0, ly = 0
    if not x_zero:
        lx = clog(cx)
    if not y_zero:
        ly = clog(cy)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] lf_arr = np.empty(max_shell + 1)
    cdef double[:] lf = lf_arr
    cdef double complex partial = 0, shell, logterm, zg, step
    cdef double complex log_poch = 0
    cdef double err = INFINITY
    cdef int n = 0, k, l, quiet = 0, shells = 0
    cdef bint converged = False, overflow = False, exact = False
    with nogil:
        _log_factorials(lf, max_shell)
        for n in range(max_shell + 1):
            shells = n + 1
            shell = 0
            for k in range(n + 1):
                l = n - k
                if (x_zero and k > 0) or (y_zero and l > 0):
                    continue
                zg = ca * k + cb * l + cg
                if _is_pole(zg):
                    continue
                logterm = log_poch - clgamma(zg) - lf[k] - lf[l]
                if k > 0:
                    logterm = logterm + k * lx
                if l > 0:
                    logterm = logterm + l * ly
                if creal(logterm) > 700.0:
                    overflow = True
                    break
                shell = shell + cexp(logterm)
            if overflow:
                break
            partial = partial + shell
            err = cabs(shell)
            if err <= tol * max(cabs(partial), 1.0):
                quiet += 1
            else:
                quiet = 0
            if quiet >= quiet_shells:
                converged = True
                break
            step = cd + n
            if step == 0:
                converged = True
                exact = True
                break
            log_poch = log_poch + clog(step)
    if exact:
        err = 0.0
    return complex(partial), err, shells, bool(converged)


def sum_univariate_batch(a, b, g, d, w1, w2, logt, double tol, int max_shell,
                         int quiet_shells):
    """Fused-exponent summation of the single-variable form on a batch of log(t)."""
    cdef double complex ca = a, cb = b, cg = g, cd = d, cw1 = w1, cw2 = w2
    cdef bint w1_zero = (cw1 == 0), w2_zero = (cw2 == 0)
    cdef double complex lw1 = 0, lw2 = 0
    if not w1_zero:
        lw1 = clog(cw1)
    if not w2_zero:
        lw2 = clog(cw2)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] lt_arr = np.ascontiguousarray(
        np.asarray(logt, dtype=np.float64)
    )
    cdef double[:] lt = lt_arr
    cdef Py_ssize_t T = lt_arr.shape[0], i
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] partial_arr = np.zeros(T, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] shell_arr = np.zeros(T, dtype=np.complex128)
    cdef double complex[:] partial = partial_arr
    cdef double complex[:] shell = shell_arr
    cdef cnp.ndarray[cnp.float64_t, ndim=1] lf_arr = np.empty(max_shell + 1)
    cdef double[:] lf = lf_arr
    cdef double complex base, zg, step, e, w
    cdef double complex log_poch = 0
    cdef double err = INFINITY, mag, m
    cdef int n = 0, k, l, quiet = 0, shells = 0
    cdef bint converged = False, overflow = False, exact = False, ok
    with nogil:
        _log_factorials(lf, max_shell)
        for n in range(max_shell + 1):
            shells = n + 1
            for i in range(T):
                shell[i] = 0
            for k in range(n + 1):
                l = n - k
                if (w1_zero and k > 0) or (w2_zero and l > 0):
                    continue
                zg = ca * k + cb * l + cg
                if _is_pole(zg):
                    continue
                base = log_poch - clgamma(zg) - lf[k] - lf[l]
                if k > 0:
                    base = base + k * lw1
                if l > 0:
                    base = base + l * lw2
                e = zg - 1.0
                for i in range(T):
                    w = base + e * lt[i]
                    if creal(w) > 700.0:
                        overflow = True
                        break
                    shell[i] = shell[i] + cexp(w)
                if overflow:
                    break
            if overflow:
                break
            err = 0.0
            ok = True
            for i in range(T):
                partial[i] = partial[i] + shell[i]
                mag = cabs(shell[i])
                if mag > err:
                    err = mag
                m = cabs(partial[i])
                if m < 1.0:
                    m = 1.0
                if mag > tol * m:
                    ok = False
            if ok:
                quiet += 1
            else:
                quiet = 0
            if quiet >= quiet_shells:
                converged = True
                break
            step = cd + n
            if step == 0:
                converged = True
                exact = True
                break
            log_poch = log_poch + clog(step)
    if exact:
        err = 0.0
    return partial_arr, err, shells, bool(converged)


def sum_prabhakar(a, g, d, x, double tol, int max_shell, int quiet_shells):
    """Single-series three-parameter sum; independent of the double series path."""
    cdef double complex ca = a, cg = g, cd = d, cx = x
    cdef bint x_zero = (cx == 0)
    cdef double complex lx = 0
    if not x_zero:
        lx = clog(cx)
    cdef double complex partial = 0, term, zg, w, step
    cdef double complex log_poch = 0
    cdef double lf = 0.0
    cdef double err = INFINITY
    cdef int n = 0, quiet = 0, shells = 0
    cdef bint converged = False, overflow = False, exact = False
    with nogil:
        for n in range(max_shell + 1):
            shells = n + 1
            zg = ca * n + cg
            if _is_pole(zg) or (x_zero and n > 0):
                term = 0
            else:
                w = log_poch - clgamma(zg) - lf
                if n > 0:
                    w = w + n * lx
                if creal(w) > 700.0:
                    overflow = True
                    break
                term = cexp(w)
            partial = partial + term
            err = cabs(term)
            if err <= tol * max(cabs(partial), 1.0):
                quiet += 1
            else:
                quiet = 0
            if quiet >= quiet_shells:
                converged = True
                break
            step = cd + n
            if step == 0:
                converged = True
                exact = True
                break
            log_poch = log_poch + clog(step)
            lf = lf + log(<double> (n + 1))
    if exact:
        err = 0.0
    return complex(partial), err, shells, bool(converged)
