"""Independent reference implementations used to generate and check expected values.

Everything here deliberately avoids the library's own code paths: gamma
functions come from mpmath or scipy, double sums are taken over fixed
rectangles (not adaptive shells), and quadrature weights are assembled
panel by panel instead of by convolution.  Keep it that way — these are
the oracles the fast implementations are judged against.
"""

import math

import mpmath
import numpy as np
import scipy.special as sp


def mp_bivariate_rect(alpha, beta, gamma, delta, x, y, kmax=200, lmax=200, dps=40):
    """Rectangle sum of the double series over 0 <= k <= kmax, 0 <= l <= lmax.

    High-precision mpmath evaluation; slow, use for single golden values.
    """
    with mpmath.workdps(dps):
        a, b, g, d = (mpmath.mpmathify(v) for v in (alpha, beta, gamma, delta))
        xx, yy = mpmath.mpmathify(x), mpmath.mpmathify(y)
        total = mpmath.mpc(0)
        for k in range(kmax + 1):
            xk = xx**k / mpmath.factorial(k)
            if xk == 0 and k > 0:
                break
            for l in range(lmax + 1):
                term = (
                    mpmath.rf(d, k + l)
                    * xk
                    * yy**l
                    / mpmath.factorial(l)
                    * mpmath.rgamma(a * k + b * l + g)
                )
                total += term
        return complex(total)


def mp_univariate(alpha, beta, gamma, delta, w1, w2, t, kmax=200, lmax=200, dps=40):
    """t**(gamma-1) * E(w1*t**alpha, w2*t**beta) by high-precision rectangle sum."""
    with mpmath.workdps(dps):
        a, b, g, d = (mpmath.mpmathify(v) for v in (alpha, beta, gamma, delta))
        o1, o2 = mpmath.mpmathify(w1), mpmath.mpmathify(w2)
        tt = mpmath.mpf(t)
        total = mpmath.mpc(0)
        for k in range(kmax + 1):
            for l in range(lmax + 1):
                expo = a * k + b * l + g - 1
                term = (
                    mpmath.rf(d, k + l)
                    * o1**k
                    * o2**l
                    / (mpmath.factorial(k) * mpmath.factorial(l))
                    * mpmath.rgamma(a * k + b * l + g)
                    * mpmath.exp(expo * mpmath.log(tt))
                )
                total += term
        return complex(total)


def mp_prabhakar(alpha, gamma, delta, x, nterms=400, dps=40):
    """Three-parameter (single-series) function by direct high-precision sum."""
    with mpmath.workdps(dps):
        a, g, d = (mpmath.mpmathify(v) for v in (alpha, gamma, delta))
        xx = mpmath.mpmathify(x)
        total = mpmath.mpc(0)
        for n in range(nterms + 1):
            total += (
                mpmath.rf(d, n)
                * xx**n
                / mpmath.factorial(n)
                * mpmath.rgamma(a * n + g)
            )
        return complex(total)


def mp_bound_constant(alpha, beta, gamma, delta, w1, w2, span, kmax=100, lmax=100, dps=40):
    """Brute-force rectangle sum for the L1 operator-norm constant."""
    with mpmath.workdps(dps):
        a, b, g, d = (mpmath.mpmathify(v) for v in (alpha, beta, gamma, delta))
        total = mpmath.mpf(0)
        for k in range(kmax + 1):
            for l in range(lmax + 1):
                mu = a * k + b * l + g
                re_mu = mpmath.re(mu)
                total += (
                    abs(mpmath.rf(d, k + l))
                    * abs(w1) ** k
                    * abs(w2) ** l
                    * mpmath.mpf(span) ** re_mu
                    / (
                        re_mu
                        * abs(mpmath.gamma(mu))
                        * mpmath.factorial(k)
                        * mpmath.factorial(l)
                    )
                )
        return float(total)


def rect_bivariate(alpha, beta, gamma, delta, x, y, kmax=200, lmax=200):
    """Double-precision rectangle sum using scipy's loggamma and fsum accumulation.

    Independent of the package: scipy gamma, fixed rectangle, compensated
    row accumulation.  Fast enough for parameter grids.
    """
    a, b, g, d = complex(alpha), complex(beta), complex(gamma), complex(delta)
    k = np.arange(kmax + 1)
    l = np.arange(lmax + 1)
    kk, ll = np.meshgrid(k, l, indexing="ij")
    logpoch = sp.loggamma(d + kk + ll) - sp.loggamma(d) if d != 0 else None
    with np.errstate(divide="ignore", invalid="ignore"):
        logx = np.log(complex(x)) if x != 0 else -np.inf
        logy = np.log(complex(y)) if y != 0 else -np.inf
    logterm = (
        -sp.loggamma(a * kk + b * ll + g)
        - sp.gammaln(kk + 1.0)
        - sp.gammaln(ll + 1.0)
        + np.where(kk == 0, 0.0, kk * logx)
        + np.where(ll == 0, 0.0, ll * logy)
    )
    if logpoch is not None:
        logterm = logterm + logpoch
        terms = np.exp(logterm)
    else:
        # delta = 0: only the (0, 0) term survives
        terms = np.zeros_like(logterm)
        terms[0, 0] = np.exp(logterm[0, 0])
    # poles of the gamma argument give vanishing terms
    terms[~np.isfinite(terms)] = 0.0
    re = math.fsum(terms.real.ravel())
    im = math.fsum(terms.imag.ravel())
    return complex(re, im)


def rect_univariate(alpha, beta, gamma, delta, w1, w2, t, kmax=200, lmax=200):
    """Double-precision rectangle sum of the single-variable form at t > 0."""
    a, b, g, d = complex(alpha), complex(beta), complex(gamma), complex(delta)
    k = np.arange(kmax + 1)
    l = np.arange(lmax + 1)
    kk, ll = np.meshgrid(k, l, indexing="ij")
    lt = math.log(t)
    with np.errstate(divide="ignore", invalid="ignore"):
        lw1 = np.log(complex(w1)) if w1 != 0 else -np.inf
        lw2 = np.log(complex(w2)) if w2 != 0 else -np.inf
    logterm = (
        sp.loggamma(d + kk + ll)
        - sp.loggamma(d)
        - sp.loggamma(a * kk + b * ll + g)
        - sp.gammaln(kk + 1.0)
        - sp.gammaln(ll + 1.0)
        + np.where(kk == 0, 0.0, kk * lw1)
        + np.where(ll == 0, 0.0, ll * lw2)
        + (a * kk + b * ll + g - 1) * lt
    )
    terms = np.exp(logterm)
    terms[~np.isfinite(terms)] = 0.0
    return complex(math.fsum(terms.real.ravel()), math.fsum(terms.imag.ravel()))


def laguerre_direct(n, alpha, beta, gamma, x, y):
    """Finite double sum for the degree-n polynomial, straight from the definition."""
    total = 0j
    for l in range(n + 1):
        for k in range(n - l + 1):
            m = k + l
            # (-n)_m = (-1)^m n! / (n-m)!
            poch = (-1) ** m * math.factorial(n) / math.factorial(n - m)
            total += (
                poch
                * complex(x) ** k
                * complex(y) ** l
                * complex(sp.rgamma(complex(alpha) * k + complex(beta) * l + complex(gamma)))
                / (math.factorial(k) * math.factorial(l))
            )
    return total


def rl_integral_reference(values, mu, h):
    """Piecewise-linear product integration of the fractional integral, panel by panel.

    Direct O(M^2) assembly from the per-panel closed-form moments; no
    convolution tricks.  values[j] = f(c + j*h).
    """
    mu = complex(mu)
    M = len(values) - 1
    out = np.zeros(M + 1, dtype=complex)
    rg = complex(sp.rgamma(mu))
    for n in range(1, M + 1):
        s = 0j
        for j in range(n):
            sa = (n - j) * h
            sb = (n - j - 1) * h
            pa, pb = sa**mu, sb**mu if n - j - 1 > 0 else 0.0 * 1j
            qa = sa ** (mu + 1)
            qb = sb ** (mu + 1) if n - j - 1 > 0 else 0.0 * 1j
            base = (pa - pb) / mu
            lin = sa * base - (qa - qb) / (mu + 1)
            s += values[j] * base + (values[j + 1] - values[j]) * lin / h
        out[n] = rg * s
    return out
