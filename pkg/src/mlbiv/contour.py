"""Independent evaluation routes through the complex plane.

Three mutually checking oracles for the single-variable function:

* :func:`eval_univariate_contour` — trapezoidal quadrature of the
  deformed-Hankel integral (1/2 pi i) * integral of
  e^(t z) z^(-gamma) (1 - w1 z^(-alpha) - w2 z^(-beta))^(-delta),
* :func:`laplace_closed_form` — the transform
  s^(-gamma) (1 - w1 s^(-alpha) - w2 s^(-beta))^(-delta),
* :func:`laplace_numeric` — forward quadrature of the transform integral
  against the series evaluator.

All fractional powers use the principal branch with cut (-inf, 0].  The
outer -delta power additionally needs its base away from that cut, which
is enforced node by node: |w1 z^(-alpha) + w2 z^(-beta)| < 1 must hold on
the whole discretised contour or a :class:`BranchError` is raised.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import BranchError, DomainError, NonConvergenceError, TailError
from .series import EvalOptions, EvalResult, eval_univariate, eval_univariate_many

__all__ = [
    "ContourSpec",
    "eval_univariate_contour",
    "laplace_closed_form",
    "laplace_numeric",
]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class ContourSpec:
    """Discretisation of the deformed Hankel contour.

    The contour is z = lam * sigma(theta) with lam = scale * nodes / t,
    so the geometry adapts to the evaluation point; node doubling refines
    the quadrature on that fixed contour.
    """

    nodes: int = 64
    shape: str = "talbot"
    scale: float = 1.0

    def __post_init__(self):
        if self.nodes < 8:
            raise DomainError("need at least 8 quadrature nodes")
        if self.shape not in ("talbot", "parabolic"):
            raise DomainError(f"unknown contour shape {self.shape!r}")
        if not self.scale > 0:
            raise DomainError("contour scale must be positive")


def _sigma(shape, theta):
    """Reference contour sigma(theta) and derivative on theta in (-pi, pi)."""
    if shape == "talbot":
        c = 0.6407 * theta
        small = np.abs(theta) < 1e-8
        cs = np.where(small, 1.0, np.cos(c))
        sn = np.where(small, 1.0, np.sin(c))
        tcot = np.where(small, 1.0 / 0.6407, theta * cs / sn)
        sig = -0.6122 + 0.5017 * tcot + 0.2645j * theta
        dsig = np.where(
            small,
            0.2645j,
            0.5017 * (cs / sn) - 0.5017 * 0.6407 * theta / sn**2 + 0.2645j,
        )
        return sig, dsig
    sig = 0.1309 - 0.1194 * theta**2 + 0.25j * theta
    dsig = -0.2388 * theta + 0.25j * np.ones_like(theta)
    return sig, dsig


def _branch_base(p, z):
    """1 - w1 z^(-alpha) - w2 z^(-beta), checking the node-wise branch condition."""
    logz = np.log(z)
    q = p.omega1 * np.exp(-p.alpha * logz) + p.omega2 * np.exp(-p.beta * logz)
    bad = np.abs(q) >= 1.0
    if np.any(bad):
        j = int(np.argmax(np.abs(q)))
        raise BranchError(
            f"|w1 z^-alpha + w2 z^-beta| = {abs(q[j]):.4f} >= 1 at contour node z = {z[j]:.6g}; "
            "the -delta power would cross its branch cut (increase the contour scale)"
        )
    return 1.0 - q


def _contour_pass(p, t, shape, lam, n):
    """One midpoint-rule pass with n nodes; returns (value, roundoff floor)."""
    h = 2.0 * math.pi / n
    theta = -math.pi + (np.arange(n) + 0.5) * h
    sig, dsig = _sigma(shape, theta)
    z = lam * sig
    base = _branch_base(p, z)
    integrand = np.exp(t * z - p.gamma * np.log(z) - p.delta * np.log(base)) * (lam * dsig)
    scale = h / (2.0 * math.pi)
    value = scale * integrand.sum() / 1j
    # rounding of the exponent dominates for large |t z|: e^w carries a
    # relative error of about |w| * eps
    floor = _EPS * scale * float(np.sum(np.abs(integrand) * (2.0 + np.abs(t * z))))
    return complex(value), float(floor)


def eval_univariate_contour(p, t, cspec=None, opts=None, max_doublings=4):
    """Contour evaluation of t**(gamma-1) * E(w1 t**alpha, w2 t**beta), t > 0.

    Runs the quadrature at the requested node count, then doubles nodes on
    the same contour until the change drops below tolerance; the reported
    error estimate is that change plus a rounding floor from the summed
    term magnitudes.
    """
    cspec = cspec or ContourSpec()
    opts = opts or EvalOptions()
    t = float(t)
    if t <= 0:
        raise DomainError("contour evaluation requires t > 0")
    if p.alpha.real <= 0 or p.beta.real <= 0 or p.gamma.real <= 0:
        raise DomainError("contour route requires Re(alpha), Re(beta), Re(gamma) > 0")
    lam = cspec.scale * cspec.nodes / t
    n = cspec.nodes
    value, floor = _contour_pass(p, t, cspec.shape, lam, n)
    for _ in range(max_doublings):
        n *= 2
        new, floor = _contour_pass(p, t, cspec.shape, lam, n)
        delta = abs(new - value)
        value = new
        if delta <= max(opts.tol * max(abs(new), 1.0), 4.0 * floor):
            return EvalResult(value, max(delta, floor), n, True)
    raise NonConvergenceError(
        f"contour quadrature still changing by {delta:.3e} at {n} nodes",
        value=value,
        err_estimate=delta,
        steps=n,
    )


def laplace_closed_form(p, s):
    """The transform s**(-gamma) * (1 - w1 s**(-alpha) - w2 s**(-beta))**(-delta).

    Principal branches throughout; raises :class:`BranchError` when the
    base of the -delta power lands on (-inf, 0].
    """
    s = complex(s)
    if s.real <= 0:
        raise DomainError("the transform is evaluated for Re(s) > 0")
    logs = cmath.log(s)
    base = 1.0 - p.omega1 * cmath.exp(-p.alpha * logs) - p.omega2 * cmath.exp(-p.beta * logs)
    if base.imag == 0.0 and base.real <= 0.0:
        raise BranchError(f"1 - w1 s^-alpha - w2 s^-beta = {base} lies on the branch cut")
    return cmath.exp(-p.gamma * logs - p.delta * cmath.log(base))


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


def _breakpoints(upper, panels):
    """Geometrically graded panel edges on (0, upper], finest near 0."""
    edges = upper * 2.0 ** (-np.arange(panels, 0, -1, dtype=float))
    return np.concatenate(([0.0], edges[:-1], [upper]))


def _forward_quad(p, s, upper, panels, power_sub):
    """Composite Gauss-Legendre pass of the damped integrand on (0, upper]."""
    edges = _breakpoints(upper, panels)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    u = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    w = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()
    if power_sub is None:
        t = u
        jac = np.ones_like(u)
    else:
        # t = u**(1/r) regularises the t**(gamma-1) endpoint when r = Re(gamma) < 1
        r = power_sub
        t = u ** (1.0 / r)
        jac = (1.0 / r) * u ** (1.0 / r - 1.0)
    f = eval_univariate_many(p, t, EvalOptions(tol=1e-13, max_shell=2000))
    return complex(np.sum(w * np.exp(-s * t) * jac * f))


def laplace_numeric(p, s, T, steps=None, qtol=1e-8, tail_tol=1e-9, max_refine=3):
    """Forward quadrature of the transform integral over (0, T].

    Checks that the discarded tail is negligible (|e^(-sT) f(T)| below
    ``tail_tol``) before integrating; when Re(gamma) < 1 the endpoint
    behaviour t**(gamma-1) is absorbed by the substitution t = u**(1/Re(gamma)).
    Panel halving continues until the value is stable to ``qtol``.
    """
    s = float(s)
    T = float(T)
    if s <= 0 or T <= 0:
        raise DomainError("need s > 0 and T > 0")
    if p.gamma.real <= 0:
        raise DomainError("forward transform requires Re(gamma) > 0")
    f_end = eval_univariate(p, T).value
    tail = math.exp(-s * T) * abs(f_end)
    if tail >= tail_tol:
        raise TailError(
            f"e^(-sT) |f(T)| = {tail:.3e} >= {tail_tol:.1e}: "
            "increase the horizon T or the transform variable s"
        )
    r = p.gamma.real
    power_sub = r if r < 1.0 else None
    upper = T**r if power_sub is not None else T
    panels = steps or max(10, int(math.ceil(math.log2(max(s * T, 4.0)))) + 6)
    value = _forward_quad(p, s, upper, panels, power_sub)
    for _ in range(max_refine):
        panels *= 2
        new = _forward_quad(p, s, upper, panels, power_sub)
        delta = abs(new - value)
        value = new
        if delta <= qtol * max(abs(new), 1.0):
            return value
    raise NonConvergenceError(
        f"forward transform quadrature still changing by {delta:.3e} with {panels} panels",
        value=value,
        err_estimate=delta,
        steps=panels,
    )
