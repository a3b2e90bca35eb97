"""Direct series evaluation: the bivariate double power series, its
single-variable form with fused fractional powers of t, the
three-parameter single-series reduction, and the associated finite
polynomial family.

Summation runs over anti-diagonal shells k + l = n.  Convergence is
declared once ``quiet_shells`` consecutive shells fall below the relative
tolerance; hitting ``max_shell`` without that raises
:class:`NonConvergenceError` rather than silently truncating.
"""

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from ._backend import impl as _impl
from .errors import DomainError, NonConvergenceError

__all__ = [
    "MLParams",
    "EvalOptions",
    "EvalResult",
    "eval_bivariate",
    "eval_univariate",
    "eval_univariate_many",
    "eval_prabhakar",
    "laguerre_bivariate",
    "laguerre_generating_sum",
]


@dataclass(frozen=True)
class MLParams:
    """Parameter tuple (alpha, beta, gamma, delta, omega1, omega2).

    Re(alpha) > 0 and Re(beta) > 0 are required for the double series to
    converge; the other parameters are unrestricted here (individual
    operations impose their own constraints, e.g. Re(gamma) > 0 for the
    integral operator).
    """

    alpha: complex
    beta: complex
    gamma: complex
    delta: complex
    omega1: complex = 0.0
    omega2: complex = 0.0

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta", "omega1", "omega2"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.alpha.real <= 0 or self.beta.real <= 0:
            raise DomainError(
                f"need Re(alpha) > 0 and Re(beta) > 0, got alpha={self.alpha}, beta={self.beta}"
            )


@dataclass(frozen=True)
class EvalOptions:
    """Truncation policy for adaptive shell summation."""

    tol: float = 1e-12
    max_shell: int = 500
    quiet_shells: int = 3

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError("tol must be positive")
        if self.max_shell < 1:
            raise DomainError("max_shell must be >= 1")
        if self.quiet_shells < 1:
            raise DomainError("quiet_shells must be >= 1")


@dataclass(frozen=True)
class EvalResult:
    """A value plus truncation-error estimate and convergence metadata.

    ``err_estimate`` is the magnitude of the last included shell; when
    ``converged`` is set it is bounded by tol * max(|value|, 1).
    """

    value: complex
    err_estimate: float
    shells_used: int
    converged: bool


_DEFAULT_OPTS = EvalOptions()


def _finish(what, value, err, shells, converged, opts):
    if not converged:
        raise NonConvergenceError(
            f"{what}: no {opts.quiet_shells} quiet shells within "
            f"max_shell={opts.max_shell} (last shell magnitude {err:.3e})",
            value=value,
            err_estimate=err,
            steps=shells,
        )
    return EvalResult(value, err, shells, converged)


def eval_bivariate(p, x, y, opts=None):
    """Evaluate the double series at independent arguments (x, y)."""
    opts = opts or _DEFAULT_OPTS
    value, err, shells, ok = _impl.sum_bivariate(
        p.alpha, p.beta, p.gamma, p.delta, complex(x), complex(y),
        opts.tol, opts.max_shell, opts.quiet_shells,
    )
    return _finish("bivariate series", value, err, shells, ok, opts)


def _univariate_at_zero(p):
    g = p.gamma
    if g.real > 1.0:
        return 0.0 + 0.0j
    if g == 1.0:
        return 1.0 + 0.0j
    if g.real == 1.0:
        raise DomainError("t = 0 with Re(gamma) = 1 but Im(gamma) != 0: no limit")
    raise DomainError("t = 0 requires Re(gamma) >= 1")


def eval_univariate(p, t, opts=None):
    """Evaluate t**(gamma-1) * E(omega1 t**alpha, omega2 t**beta) at real t >= 0.

    The power of t is fused into each term's exponent (the series is
    summed in t**(alpha k + beta l + gamma - 1)), so large t and shifted
    gamma never overflow intermediate terms.  t**z for t > 0 uses the
    real logarithm.
    """
    opts = opts or _DEFAULT_OPTS
    t = float(t)
    if t < 0:
        raise DomainError("the single-variable form is defined on t >= 0")
    if t == 0:
        return EvalResult(_univariate_at_zero(p), 0.0, 1, True)
    values, err, shells, ok = _impl.sum_univariate_batch(
        p.alpha, p.beta, p.gamma, p.delta, p.omega1, p.omega2,
        np.array([math.log(t)]),
        opts.tol, opts.max_shell, opts.quiet_shells,
    )
    return _finish("univariate series", complex(values[0]), err, shells, ok, opts)


def eval_univariate_many(p, t, opts=None):
    """Vectorised :func:`eval_univariate` over an array of strictly positive t."""
    opts = opts or _DEFAULT_OPTS
    t = np.asarray(t, dtype=np.float64)
    if t.size == 0:
        return np.empty(0, dtype=np.complex128)
    if np.any(t <= 0):
        raise DomainError("batched evaluation needs strictly positive t")
    values, err, shells, ok = _impl.sum_univariate_batch(
        p.alpha, p.beta, p.gamma, p.delta, p.omega1, p.omega2,
        np.log(t), opts.tol, opts.max_shell, opts.quiet_shells,
    )
    if not ok:
        raise NonConvergenceError(
            f"univariate series on {t.size} nodes: no {opts.quiet_shells} quiet shells "
            f"within max_shell={opts.max_shell} (last shell magnitude {err:.3e})",
            err_estimate=err,
            steps=shells,
        )
    return np.asarray(values)


def eval_prabhakar(alpha, gamma, delta, x, opts=None):
    """Single-series three-parameter function, the reduction oracle.

    eval_bivariate(p, x, 0) must agree with this for matching parameters;
    the two deliberately share no summation code.
    """
    alpha = complex(alpha)
    if alpha.real <= 0:
        raise DomainError("need Re(alpha) > 0")
    opts = opts or _DEFAULT_OPTS
    value, err, shells, ok = _impl.sum_prabhakar(
        alpha, complex(gamma), complex(delta), complex(x),
        opts.tol, opts.max_shell, opts.quiet_shells,
    )
    return _finish("three-parameter series", value, err, shells, ok, opts)


def laguerre_bivariate(n, alpha, beta, gamma, x, y):
    """Degree-n member of the polynomial family: exact finite double sum.

    Equals the double series with delta = -n, but is evaluated directly
    from the terminating definition (no adaptive machinery).
    """
    if n < 0 or n != int(n):
        raise DomainError("degree n must be a non-negative integer")
    n = int(n)
    alpha, beta, gamma = complex(alpha), complex(beta), complex(gamma)
    if alpha.real <= 0 or beta.real <= 0:
        raise DomainError("need Re(alpha) > 0 and Re(beta) > 0")
    x, y = complex(x), complex(y)
    ll, kk = np.meshgrid(np.arange(n + 1), np.arange(n + 1), indexing="ij")
    keep = kk + ll <= n
    kk, ll = kk[keep], ll[keep]
    if x == 0:
        m0 = kk == 0
        kk, ll = kk[m0], ll[m0]
    if y == 0:
        m0 = ll == 0
        kk, ll = kk[m0], ll[m0]
    m = kk + ll
    zg = alpha * kk + beta * ll + gamma
    pole = (zg.imag == 0) & (zg.real <= 0) & (zg.real == np.round(zg.real))
    kk, ll, m, zg = kk[~pole], ll[~pole], m[~pole], zg[~pole]
    if kk.size == 0:
        return 0.0 + 0.0j
    lf = np.concatenate(([0.0], np.cumsum(np.log(np.arange(1.0, n + 1)))))
    # |(-n)_m| = n! / (n-m)!, sign (-1)^m
    logs = (lf[n] - lf[n - m]) - _impl.log_gamma_arr(zg) - lf[kk] - lf[ll]
    if x != 0:
        logs = logs + kk * cmath.log(x)
    if y != 0:
        logs = logs + ll * cmath.log(y)
    signs = np.where(m % 2 == 0, 1.0, -1.0)
    return complex(np.sum(signs * np.exp(logs)))


def laguerre_generating_sum(N, delta, alpha, beta, gamma, x, y, t):
    """Partial sum sum_{n=0}^{N} (delta)_n / n! * L_n(x, y) * t**n, |t| < 1.

    Property tests compare this against the closed form
    (1-t)**(-delta) * E(-x t/(1-t), -y t/(1-t)).
    """
    t = complex(t)
    if abs(t) >= 1:
        raise DomainError("the generating series requires |t| < 1")
    if N < 0 or N != int(N):
        raise DomainError("N must be a non-negative integer")
    delta = complex(delta)
    total = 0.0 + 0.0j
    coeff = 1.0 + 0.0j  # (delta)_n t^n / n!
    prev_mag = None
    last_mag = None
    for n in range(int(N) + 1):
        term = coeff * laguerre_bivariate(n, alpha, beta, gamma, x, y)
        total += term
        prev_mag, last_mag = last_mag, abs(term)
        coeff *= (delta + n) * t / (n + 1)
        if coeff == 0:
            break
    if prev_mag is not None and last_mag > prev_mag > 0:
        warnings.warn(
            f"generating-series terms still growing at n = N = {N}; "
            "partial sum may be far from the closed form",
            RuntimeWarning,
            stacklevel=2,
        )
    return total
