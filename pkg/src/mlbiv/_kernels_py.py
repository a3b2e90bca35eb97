"""Pure-numpy evaluation kernels.

This is the fallback backend; ``mlbiv._kernels_c`` implements the same
functions in Cython.  Both must stay numerically identical: same Lanczos
coefficients, same shell order, same stopping rule.  The compiled module
is preferred at import time (see ``mlbiv._backend``).

All summation kernels work on log-magnitude representations of the terms
so that Gamma(alpha*k + beta*l + gamma) never overflows the term itself;
a term is materialised as a complex double only after its log-magnitude
is known to be representable.
"""

import cmath
import math

import numpy as np

BACKEND = "python"

# Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
# Relative accuracy ~1e-15 on Re(z) >= 0.5; the reflection formula covers
# the left half-plane.
_LANCZOS_G = 4.7421875
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
)
_LOG_SQRT_TWO_PI = 0.91893853320467274178
_LOG_PI = 1.1447298858494001741


def _lanczos_right(z):
    """log Gamma on Re(z) >= 0.5 (scalar, principal branch)."""
    zm = z - 1.0
    s = _LANCZOS_C[0]
    for i in range(1, 15):
        s += _LANCZOS_C[i] / (zm + i)
    t = zm + _LANCZOS_G + 0.5
    return _LOG_SQRT_TWO_PI + (zm + 0.5) * cmath.log(t) - t + cmath.log(s)


def _log_sin_pi(z):
    """log(sin(pi z)), stable for large |Im z| (scalar)."""
    w = cmath.pi * z
    if abs(w.imag) < 20.0:
        return cmath.log(cmath.sin(w))
    if w.imag > 0:
        # sin w = e^{-iw} (e^{2iw} - 1) / (2i), e^{2iw} tiny
        return -1j * w + cmath.log(-(1.0 - cmath.exp(2j * w))) - cmath.log(2j)
    return 1j * w + cmath.log(1.0 - cmath.exp(-2j * w)) - cmath.log(2j)


def log_gamma(z):
    """log Gamma(z) for scalar complex z, not a non-positive integer.

    Principal branch on Re(z) >= 0.5; continued to the left half-plane by
    the reflection formula (exactly exp-consistent, imaginary part may
    differ from the principal analytic continuation by multiples of 2*pi
    far off the real axis).
    """
    z = complex(z)
    if z.real >= 0.5:
        return _lanczos_right(z)
    return _LOG_PI - _log_sin_pi(z) - _lanczos_right(1.0 - z)


def log_gamma_arr(z):
    """Vectorised log Gamma over a complex ndarray (no pole entries allowed)."""
    z = np.asarray(z, dtype=np.complex128)
    out = np.empty_like(z)
    right = z.real >= 0.5
    zr = np.where(right, z, 1.0) - 1.0
    s = np.full_like(z, _LANCZOS_C[0])
    for i in range(1, 15):
        s += _LANCZOS_C[i] / (zr + i)
    t = zr + _LANCZOS_G + 0.5
    out[right] = (_LOG_SQRT_TWO_PI + (zr + 0.5) * np.log(t) - t + np.log(s))[right]
    if not right.all():
        zl = z[~right]
        out[~right] = np.array([_LOG_PI - _log_sin_pi(w) for w in zl]) - log_gamma_arr(
            1.0 - zl
        )
    return out


def _is_nonpos_int(z):
    return z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real)


def _log_factorials(n):
    lf = np.empty(n + 1)
    lf[0] = 0.0
    np.cumsum(np.log(np.arange(1, n + 1)), out=lf[1:])
    return lf


def _safe_log(w):
    """log of a complex scalar; -inf real part for zero."""
    w = complex(w)
    if w == 0:
        return complex(-math.inf, 0.0)
    return cmath.log(w)


def _shell_terms_log(n, a, b, g, lx, ly, lf, x_zero, y_zero):
    """Per-term log values along the anti-diagonal k + l = n.

    Returns (k indices kept, log-term array minus the Pochhammer part).
    Terms whose gamma argument sits on a pole, or that multiply a zero
    base to a positive power, are dropped (they are exactly zero).
    """
    k = np.arange(n + 1)
    if x_zero:
        k = k[k == 0]
    if y_zero:
        k = k[k == n]
    if k.size == 0:
        return k, np.empty(0, dtype=np.complex128)
    l = n - k
    zg = a * k + b * l + g
    pole = (zg.imag == 0.0) & (zg.real <= 0.0) & (zg.real == np.round(zg.real))
    k, l, zg = k[~pole], l[~pole], zg[~pole]
    if k.size == 0:
        return k, np.empty(0, dtype=np.complex128)
    logs = -log_gamma_arr(zg) - lf[k] - lf[l]
    if not x_zero:
        logs = logs + k * lx
    if not y_zero:
        logs = logs + l * ly
    return k, logs


def _run_double_series(a, b, g, d, lx, ly, x_zero, y_zero, tol, max_shell, quiet_shells,
                       extra_exponent=None, logt=None):
    """Shared shell-summation driver.

    With ``extra_exponent``/``logt`` set, evaluates the fused-power
    single-variable form on a batch of log(t) values; otherwise the plain
    bivariate series at a single point.  Returns (values, err, shells,
    converged) where values is scalar or an array matching logt.
    """
    batched = logt is not None
    if batched:
        partial = np.zeros(len(logt), dtype=np.complex128)
        scale_floor = np.ones(len(logt))
    else:
        partial = 0.0 + 0.0j
    lf = _log_factorials(max_shell)
    log_poch = 0.0 + 0.0j
    quiet = 0
    err = math.inf
    shells = 0
    for n in range(max_shell + 1):
        shells = n + 1
        k, logs = _shell_terms_log(n, a, b, g, lx, ly, lf, x_zero, y_zero)
        if k.size:
            logs = logs + log_poch
            if batched:
                e = a * k + b * (n - k) + extra_exponent
                w = logs[:, None] + np.outer(e, logt)
                if np.any(w.real > 700.0):
                    break
                shell = np.exp(w).sum(axis=0)
            else:
                if np.any(logs.real > 700.0):
                    break
                shell = complex(np.exp(logs).sum())
        else:
            shell = np.zeros(len(logt), dtype=np.complex128) if batched else 0.0 + 0.0j
        partial = partial + shell
        if batched:
            mag = np.abs(shell)
            err = float(mag.max())
            ok = np.all(mag <= tol * np.maximum(np.abs(partial), scale_floor))
        else:
            err = abs(shell)
            ok = err <= tol * max(abs(partial), 1.0)
        quiet = quiet + 1 if ok else 0
        if quiet >= quiet_shells:
            return partial, err, shells, True
        step = d + n
        if step == 0:
            # (d)_{k+l} = 0 for every remaining shell: the series has
            # terminated exactly (d a non-positive integer).
            return partial, 0.0, shells, True
        log_poch = log_poch + _safe_log(step)
    return partial, err, shells, False


def sum_bivariate(a, b, g, d, x, y, tol, max_shell, quiet_shells):
    """Adaptive anti-diagonal shell summation of the double series at (x, y)."""
    x, y = complex(x), complex(y)
    return _run_double_series(
        complex(a), complex(b), complex(g), complex(d),
        _safe_log(x), _safe_log(y), x == 0, y == 0,
        tol, max_shell, quiet_shells,
    )


def sum_univariate_batch(a, b, g, d, w1, w2, logt, tol, max_shell, quiet_shells):
    """Fused-exponent summation of the single-variable form on a batch of t.

    ``logt`` holds log(t) for strictly positive t; term exponents
    alpha*k + beta*l + gamma - 1 are fused into the log representation so
    that large Gamma values and large powers of t cancel before
    exponentiation.
    """
    w1, w2 = complex(w1), complex(w2)
    logt = np.asarray(logt, dtype=np.float64)
    g = complex(g)
    return _run_double_series(
        complex(a), complex(b), g, complex(d),
        _safe_log(w1), _safe_log(w2), w1 == 0, w2 == 0,
        tol, max_shell, quiet_shells,
        extra_exponent=g - 1.0, logt=logt,
    )


def sum_prabhakar(a, g, d, x, tol, max_shell, quiet_shells):
    """Single-series three-parameter sum; independent of the double series path."""
    a, g, d, x = complex(a), complex(g), complex(d), complex(x)
    lx = _safe_log(x)
    partial = 0.0 + 0.0j
    log_poch = 0.0 + 0.0j
    lf = 0.0
    quiet = 0
    err = math.inf
    for n in range(max_shell + 1):
        zg = a * n + g
        if _is_nonpos_int(zg):
            term = 0.0 + 0.0j
        elif x == 0 and n > 0:
            term = 0.0 + 0.0j
        else:
            w = log_poch - log_gamma(zg) - lf + (n * lx if n else 0.0)
            if w.real > 700.0:
                return partial, err, n + 1, False
            term = cmath.exp(w)
        partial += term
        err = abs(term)
        quiet = quiet + 1 if err <= tol * max(abs(partial), 1.0) else 0
        if quiet >= quiet_shells:
            return partial, err, n + 1, True
        step = d + n
        if step == 0:
            return partial, 0.0, n + 1, True
        log_poch += _safe_log(step)
        lf += math.log(n + 1)
    return partial, err, max_shell + 1, False
