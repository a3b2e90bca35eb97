"""Analytic verification that the single-variable function solves the
two-order fractional differential equations.

Every fractional derivative here is an exact function evaluation through
the shift rule (differintegrating the series shifts the third parameter),
so the residuals are quadrature-free: they measure only series truncation.
The discretised operators are validated against these values, not the
other way round.
"""

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError
from .kernel import recip_gamma
from .series import EvalOptions, MLParams, eval_univariate, eval_univariate_many

__all__ = ["FdeInstance", "shifted_differint", "rl_fde_residual", "caputo_fde_residual"]

_FDE_OPTS = EvalOptions(tol=1e-13)


@dataclass(frozen=True)
class FdeInstance:
    """Data of one two-order fractional ODE check."""

    alpha: complex
    beta: complex
    gamma: complex
    omega1: complex
    omega2: complex
    t_grid: np.ndarray

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "omega1", "omega2"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        t = np.asarray(self.t_grid, dtype=np.float64)
        t.setflags(write=False)
        object.__setattr__(self, "t_grid", t)
        if self.alpha.real <= 0 or self.beta.real <= 0:
            raise DomainError("need Re(alpha) > 0 and Re(beta) > 0")
        if np.any(t <= 0):
            raise DomainError("residuals are evaluated at strictly positive t")

    def params(self, delta=1.0):
        return MLParams(self.alpha, self.beta, self.gamma, delta, self.omega1, self.omega2)


def shifted_differint(p, mu, t):
    """Riemann-Liouville differintegral of order mu of the single-variable
    function at t > 0, via the third-parameter shift (gamma -> gamma - mu)."""
    if not t > 0:
        raise DomainError("the shift rule is evaluated at t > 0")
    return eval_univariate(replace(p, gamma=p.gamma - mu), t, _FDE_OPTS).value


def _shifted_many(p, mu, t):
    return eval_univariate_many(replace(p, gamma=p.gamma - mu), t, _FDE_OPTS)


def _power_term(exponent, t):
    """t**exponent / Gamma(exponent + 1) on an array, exact 0 at Gamma poles."""
    rg = recip_gamma(exponent + 1.0)
    if rg == 0:
        return np.zeros_like(t, dtype=np.complex128)
    return rg * np.exp(complex(exponent) * np.log(t))


def rl_fde_residual(inst):
    """Pointwise residual magnitude of the Riemann-Liouville-type equation

    D^(a+b) u - w2 D^a u - w1 D^b u = t^(g-a-b-1) / Gamma(g-a-b),  delta = 1.

    Returns the raw |residual| per grid node; thresholds are the caller's
    business.  A Gamma pole in the forcing term yields an exact zero.
    """
    p = inst.params(delta=1.0)
    t = inst.t_grid
    a, b, g = inst.alpha, inst.beta, inst.gamma
    res = (
        _shifted_many(p, a + b, t)
        - inst.omega2 * _shifted_many(p, a, t)
        - inst.omega1 * _shifted_many(p, b, t)
        - _power_term(g - a - b - 1.0, t)
    )
    return np.abs(res)


def caputo_fde_residual(inst):
    """Pointwise residual magnitude of the Caputo-type equation (gamma = 1,
    0 < Re(alpha + beta) < 1)

    C-D^(a+b) u - w2 C-D^a u - w1 C-D^b u = w2 t^-a / Gamma(1-a) + w1 t^-b / Gamma(1-b),

    with each Caputo derivative obtained from the Riemann-Liouville one by
    removing the constant-term power (u(0) = 1).  Note the pairing: the
    weight that multiplies the order-a derivative also multiplies that
    derivative's constant-term correction t^-a.  The u(0) = 1 limit is
    checked exactly before anything else.
    """
    a, b = inst.alpha, inst.beta
    if inst.gamma != 1.0:
        raise DomainError("the Caputo-form check requires gamma = 1")
    s = (a + b).real
    if not 0.0 < s < 1.0:
        raise DomainError("the Caputo-form check requires 0 < Re(alpha+beta) < 1")
    p = inst.params(delta=1.0)
    u0 = eval_univariate(p, 0.0).value
    if u0 != 1.0:
        raise AssertionError(f"series limit u(0) = {u0} != 1")
    t = inst.t_grid

    def caputo(mu):
        # C-D^mu u = RL-D^mu u - t^-mu / Gamma(1 - mu) for orders in (0, 1)
        return _shifted_many(p, mu, t) - _power_term(-mu, t)

    res = (
        caputo(a + b)
        - inst.omega2 * caputo(a)
        - inst.omega1 * caputo(b)
        - inst.omega2 * _power_term(-a, t)
        - inst.omega1 * _power_term(-b, t)
    )
    return np.abs(res)
