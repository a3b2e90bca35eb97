"""Numerical verification suites.

Every identity the library claims is checked against an independent
route: series vs contour, forward vs closed-form transform, adaptive
shells vs brute-force rectangle, discretised operators vs analytic shift
rule.  Draws are seeded, so reports are deterministic.

Each suite returns a :class:`VerifyReport`; the CLI serialises them as
JSON rows {suite, cases, max_error, tolerance, pass}.
"""

import cmath
import itertools
import math
from dataclasses import dataclass, replace

import numpy as np
import scipy.special as sp

from .contour import ContourSpec, eval_univariate_contour, laplace_closed_form, laplace_numeric
from .errors import TailError
from .fde import FdeInstance, caputo_fde_residual, rl_fde_residual, shifted_differint
from .grids import bivariate_table, preset_params, univariate_table
from .kernel import LogMagnitude, log_gamma, pochhammer, recip_gamma
from .operators import (
    OperatorRequest,
    SampledFunction,
    bound_constant,
    ml_derivative_caputo,
    ml_derivative_rl,
    ml_derivative_via_zeta,
    ml_integral_apply,
    rl_caputo_correction,
    rl_derivative_sampled,
    rl_integral_sampled,
)
from .series import (
    EvalOptions,
    MLParams,
    eval_bivariate,
    eval_prabhakar,
    eval_univariate,
    eval_univariate_many,
    laguerre_bivariate,
    laguerre_generating_sum,
)

__all__ = ["VerifyReport", "SUITES", "run_suites", "suite_names"]

# fraction of the span excluded next to the lower limit when comparing
# derivative-type operator outputs (they are genuinely singular at c)
INTERIOR_MARGIN = 0.05


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    cases: int
    max_error: float
    tolerance: float
    passed: bool

    def to_dict(self):
        return {
            "suite": self.suite,
            "cases": self.cases,
            "max_error": self.max_error,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


def _report(suite, errors, tolerance, extra_ok=True):
    worst = float(np.max(errors)) if len(errors) else 0.0
    return VerifyReport(suite, len(errors), worst, tolerance, bool(worst <= tolerance and extra_ok))


def _interior(grid, c, d):
    return grid >= c + INTERIOR_MARGIN * (d - c)


def _rect_oracle(alpha, beta, gamma, delta, x, y, kmax=110):
    """Brute-force rectangle sum with scipy's gamma: independent of the
    adaptive shell evaluator (different gamma route, different order)."""
    k = np.arange(kmax + 1)
    kk, ll = np.meshgrid(k, k, indexing="ij")
    with np.errstate(divide="ignore", invalid="ignore"):
        logx = np.log(complex(x)) if x != 0 else -np.inf
        logy = np.log(complex(y)) if y != 0 else -np.inf
    logterm = (
        sp.loggamma(complex(delta) + kk + ll)
        - sp.loggamma(complex(delta))
        - sp.loggamma(complex(alpha) * kk + complex(beta) * ll + complex(gamma))
        - sp.gammaln(kk + 1.0)
        - sp.gammaln(ll + 1.0)
        + np.where(kk == 0, 0.0, kk * logx)
        + np.where(ll == 0, 0.0, ll * logy)
    )
    terms = np.exp(logterm)
    terms[~np.isfinite(terms)] = 0.0
    return complex(math.fsum(terms.real.ravel()), math.fsum(terms.imag.ravel()))


def _rect_bound_oracle(params, span, kmax=140):
    k = np.arange(kmax + 1)
    kk, ll = np.meshgrid(k, k, indexing="ij")
    mu = params.alpha * kk + params.beta * ll + params.gamma
    with np.errstate(divide="ignore"):
        lw1 = math.log(abs(params.omega1)) if params.omega1 != 0 else -np.inf
        lw2 = math.log(abs(params.omega2)) if params.omega2 != 0 else -np.inf
    logterm = (
        sp.loggamma(params.delta + kk + ll).real
        - sp.loggamma(params.delta).real
        + mu.real * math.log(span)
        - np.log(mu.real)
        - sp.loggamma(mu).real
        - sp.gammaln(kk + 1.0)
        - sp.gammaln(ll + 1.0)
        + np.where(kk == 0, 0.0, kk * lw1)
        + np.where(ll == 0, 0.0, ll * lw2)
    )
    terms = np.exp(logterm)
    terms[~np.isfinite(terms)] = 0.0
    return math.fsum(terms.ravel())


# ---------------------------------------------------------------------------
# scalar kernel


def suite_kernel():
    """recip_gamma * exp(log_gamma) = 1 (tol 1e-12), the reflection identity
    (1e-11), real-axis log-gamma accuracy (1e-13), and exact rising-factorial
    additivity.  Errors are reported as fractions of each check's own
    tolerance, so the suite tolerance is 1."""
    errors = []
    # recip * exp(log) on |z| <= 50, away from the poles
    for x in np.arange(-10.0, 10.5, 1.3):
        for y in (0.0, 0.5, -2.0, 10.0, 40.0):
            z = complex(x, y)
            if abs(z) > 50 or (y == 0 and abs(x - round(x)) < 0.1 and x <= 0):
                continue
            errors.append(abs(recip_gamma(z) * cmath.exp(log_gamma(z)) - 1.0) / 1e-12)
    # reflection on real non-integer z in (-5, 5)
    for z in np.arange(-4.75, 5.0, 0.5):
        lhs = cmath.exp(log_gamma(z)) * cmath.exp(log_gamma(1.0 - z))
        rhs = math.pi / cmath.sin(math.pi * z)
        errors.append(abs(lhs - rhs) / abs(rhs) / 1e-11)
    # real-axis accuracy against an independent implementation
    for z in np.geomspace(0.1, 100.0, 40):
        ours = log_gamma(z)
        ref = sp.loggamma(z)
        errors.append(abs(ours - ref) / max(abs(ref), 1.0) / 1e-13)
    # pochhammer additivity is exact in the log representation
    rng = np.random.default_rng(7)
    for _ in range(25):
        a = complex(rng.uniform(-3, 3), rng.uniform(-2, 2))
        m = int(rng.integers(0, 12))
        left = pochhammer(a, m + 1)
        right = pochhammer(a, m).times(a + m)
        errors.append(0.0 if left == right else 2.0)
    return _report("kernel", errors, 1.0)


# ---------------------------------------------------------------------------
# series


def suite_exp_reduction():
    """All parameters 1: the double series is the exponential of x + y."""
    p = MLParams(1, 1, 1, 1)
    errors = []
    for x in np.linspace(-1.0, 2.0, 5):
        for y in np.linspace(-1.0, 2.0, 5):
            got = eval_bivariate(p, x, y).value
            want = cmath.exp(x + y)
            errors.append(abs(got - want) / abs(want))
    return _report("exp-reduction", errors, 1e-10)


def _draw_series_params(rng, complex_part=0.2):
    alpha = complex(rng.uniform(0.3, 2.0), rng.uniform(-complex_part, complex_part))
    beta = complex(rng.uniform(0.3, 2.0), rng.uniform(-complex_part, complex_part))
    gamma = complex(rng.uniform(0.4, 1.6), rng.uniform(-complex_part, complex_part))
    delta = complex(rng.uniform(-1.5, 2.0), 0.0)
    return alpha, beta, gamma, delta


def suite_prabhakar():
    """Reduction oracle: the double series at (x, 0) equals the independent
    single-series three-parameter function."""
    rng = np.random.default_rng(101)
    errors = []
    for _ in range(50):
        alpha, beta, gamma, delta = _draw_series_params(rng)
        x = rng.uniform(0.05, 1.0) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        p = MLParams(alpha, beta, gamma, delta)
        a = eval_bivariate(p, x, 0.0).value
        b = eval_prabhakar(alpha, gamma, delta, x).value
        errors.append(abs(a - b) / max(abs(b), 1e-30))
    return _report("prabhakar", errors, 1e-10)


def suite_symmetry():
    """The double series is symmetric under (alpha, x) <-> (beta, y)."""
    rng = np.random.default_rng(102)
    errors = []
    for _ in range(40):
        alpha, beta, gamma, delta = _draw_series_params(rng, complex_part=0.3)
        x = rng.uniform(0, 1.2) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        y = rng.uniform(0, 1.2) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        a = eval_bivariate(MLParams(alpha, beta, gamma, delta), x, y).value
        b = eval_bivariate(MLParams(beta, alpha, gamma, delta), y, x).value
        errors.append(abs(a - b) / max(abs(a), 1.0))
    return _report("symmetry", errors, 1e-12)


def suite_laguerre():
    """The finite polynomial sum equals the double series with delta = -n."""
    rng = np.random.default_rng(103)
    errors = []
    for _ in range(20):
        alpha, beta, gamma, _ = _draw_series_params(rng)
        n = int(rng.integers(0, 9))
        x = rng.uniform(0, 1.5) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        y = rng.uniform(0, 1.5) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        direct = laguerre_bivariate(n, alpha, beta, gamma, x, y)
        viaseries = eval_bivariate(MLParams(alpha, beta, gamma, -n), x, y).value
        errors.append(abs(direct - viaseries) / max(abs(direct), 1.0))
        at_zero = laguerre_bivariate(n, alpha, beta, gamma, 0.0, 0.0)
        errors.append(abs(at_zero - recip_gamma(gamma)))
    return _report("laguerre", errors, 1e-13)


def suite_laguerre_generating():
    """N = 60 partial sum of the generating series against its closed form."""
    rng = np.random.default_rng(104)
    errors = []
    for i in range(10):
        alpha = rng.uniform(0.5, 1.8)
        beta = rng.uniform(0.5, 1.8)
        gamma = rng.uniform(0.5, 1.6)
        delta = rng.uniform(-1.0, 2.0)
        x = rng.uniform(0, 1.0) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        y = rng.uniform(0, 1.0) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        for t in (-0.6, rng.uniform(-0.5, 0.5), 0.6):
            partial = laguerre_generating_sum(60, delta, alpha, beta, gamma, x, y, t)
            arg = -t / (1.0 - t)
            closed = (1.0 - t) ** (-delta) * eval_bivariate(
                MLParams(alpha, beta, gamma, delta), arg * x, arg * y
            ).value
            errors.append(abs(partial - closed) / max(abs(closed), 1.0))
    return _report("laguerre-generating", errors, 1e-8)


def suite_series_oracle():
    """Adaptive shell evaluator against the brute-force rectangle oracle on a
    5 x 5 x 5 grid of (alpha, beta, |x| = |y|)."""
    errors = []
    gamma, delta = 1.1, 1.3
    for alpha in (0.5, 0.8, 1.1, 1.5, 2.0):
        for beta in (0.5, 0.8, 1.1, 1.5, 2.0):
            for r in (0.2, 0.4, 0.6, 0.8, 1.0):
                x = r * cmath.exp(0.7j)
                y = r * cmath.exp(-1.9j)
                got = eval_bivariate(MLParams(alpha, beta, gamma, delta), x, y).value
                want = _rect_oracle(alpha, beta, gamma, delta, x, y)
                errors.append(abs(got - want) / max(abs(want), 1e-30))
    return _report("series-oracle", errors, 1e-10)


# ---------------------------------------------------------------------------
# contour and Laplace


def _draw_contour_params(rng):
    alpha = rng.uniform(0.4, 1.6)
    beta = rng.uniform(0.4, 1.6)
    gamma = rng.uniform(0.5, 2.0)
    delta = rng.choice([0.5, 1.0, 2.0])
    w1 = rng.uniform(-0.8, 0.8)
    w2 = rng.uniform(-0.8, 0.8)
    return MLParams(alpha, beta, gamma, delta, w1, w2)


def suite_contour():
    """Contour quadrature against the series on 30 draws, plus the
    node-doubling consistency of the reported error estimate."""
    rng = np.random.default_rng(201)
    errors = []
    draws = [_draw_contour_params(rng) for _ in range(30)]
    for p in draws:
        for t in (0.25, 1.0, 2.0):
            c = eval_univariate_contour(p, t)
            s = eval_univariate(p, t)
            errors.append(abs(c.value - s.value) / max(abs(s.value), 1.0))
    doubling_ok = True
    for p in draws[:5]:
        a = eval_univariate_contour(p, 1.0, ContourSpec(nodes=64))
        b = eval_univariate_contour(p, 1.0, ContourSpec(nodes=128))
        # doubling nodes also rescales the contour, so each run's claimed
        # accuracy must cover the difference
        doubling_ok &= abs(a.value - b.value) <= max(a.err_estimate, b.err_estimate)
    return _report("contour", errors, 1e-8, extra_ok=doubling_ok)


def suite_laplace():
    """Forward quadrature of the transform against the closed form, s in the
    geometric-series safe region."""
    rng = np.random.default_rng(202)
    errors = []
    for _ in range(30):
        p = _draw_contour_params(rng)
        s = 2.0 + 2.0 * max(abs(p.omega1), abs(p.omega2)) + rng.uniform(0.0, 2.0)
        closed = laplace_closed_form(p, s)
        T = 40.0
        while True:
            try:
                numeric = laplace_numeric(p, s, T)
                break
            except TailError:
                T *= 1.5
                if T > 200.0:
                    raise
        errors.append(abs(numeric - closed) / abs(closed))
    return _report("laplace", errors, 1e-6)


# ---------------------------------------------------------------------------
# fractional ODE residuals


def suite_fde_rl():
    """Residual of the Riemann-Liouville-type two-order equation over the
    (alpha, beta) grid, relative to max(1, |u|)."""
    errors = []
    t = np.array([0.25, 1.0, 2.0])
    for a, b in itertools.product((0.5, 0.8, 1.2), repeat=2):
        for g in (1.0, 1.5):
            inst = FdeInstance(a, b, g, 0.5, -0.3, t)
            res = rl_fde_residual(inst)
            u = np.abs(eval_univariate_many(inst.params(), t))
            errors.extend(res / np.maximum(1.0, u))
    return _report("fde-rl", errors, 1e-9)


def suite_fde_caputo():
    """Residual of the Caputo-form equation (gamma = 1, Re(alpha+beta) < 1)."""
    errors = []
    t = np.array([0.5, 1.0, 3.0])
    for a, b in ((0.3, 0.4), (0.45, 0.45), (0.2, 0.7)):
        inst = FdeInstance(a, b, 1.0, 0.4, -0.3, t)
        errors.extend(caputo_fde_residual(inst))
    return _report("fde-caputo", errors, 1e-9)


def suite_classical_reduction():
    """Single-order reduction: RL-D^a applied to the one-parameter function
    E_a(w t^a) reproduces the classical identity with forcing t^-a/Gamma(1-a)."""
    errors = []
    for alpha in (0.3, 0.6, 1.4):
        for w in (0.8, -0.5):
            p = MLParams(alpha, 1.0, 1.0, 1.0, w, 0.0)
            for t in (0.5, 1.0, 2.0):
                lhs = shifted_differint(p, alpha, t) - w * eval_univariate(p, t).value
                rhs = recip_gamma(1.0 - alpha) * t ** (-alpha)
                errors.append(abs(lhs - rhs))
    return _report("classical-reduction", errors, 1e-10)


def suite_shift_rule():
    """Cross-validation: the analytic shift rule against the discretised
    Riemann-Liouville derivative of the sampled function."""
    errors = []
    M = 2048
    grid = np.linspace(0.0, 1.0, M + 1)
    for mu in (0.6, 1.3):
        # gamma chosen so the sampled function is finite at t = 0
        p = MLParams(0.6, 0.8, 2.0 if mu > 1 else 1.0, 1.0, 0.5, 0.3)
        values = np.concatenate(
            ([eval_univariate(p, 0.0).value], eval_univariate_many(p, grid[1:]))
        )
        f = SampledFunction(0.0, 1.0, values)
        sampled = rl_derivative_sampled(f, mu)
        analytic = np.array([shifted_differint(p, mu, t) for t in grid[1:]])
        mask = _interior(grid[1:], 0.0, 1.0)
        err = np.abs(sampled.values[1:] - analytic)[mask]
        errors.append(float(err.max()))
    return _report("shift-rule", errors, 5e-4)


# ---------------------------------------------------------------------------
# operator identities


def _draw_operator_params(rng, gamma_range=(0.6, 1.2)):
    return dict(
        alpha=rng.uniform(0.5, 1.4),
        beta=rng.uniform(0.5, 1.4),
        omega1=rng.uniform(-0.8, 0.8),
        omega2=rng.uniform(-0.8, 0.8),
        gamma=rng.uniform(*gamma_range),
    )


def _cos_sample(M):
    grid = np.linspace(0.0, 1.0, M + 1)
    return SampledFunction(0.0, 1.0, np.cos(grid))


def _semigroup_error(draw, d1, d2, M):
    base = MLParams(draw["alpha"], draw["beta"], 1.0, 1.0, draw["omega1"], draw["omega2"])
    f = _cos_sample(M)
    inner = ml_integral_apply(
        OperatorRequest(replace(base, gamma=draw["gamma2"], delta=d2)), f
    )
    lhs = ml_integral_apply(
        OperatorRequest(replace(base, gamma=draw["gamma1"], delta=d1)), inner
    )
    rhs = ml_integral_apply(
        OperatorRequest(
            replace(base, gamma=draw["gamma1"] + draw["gamma2"], delta=d1 + d2)
        ),
        f,
    )
    return float(np.max(np.abs(lhs.values - rhs.values)))


def _draw_semigroup(rng):
    # gammas kept >= 0.9: the inner output behaves like (x-c)^gamma2 near c,
    # whose interpolation limits the observed order to about 1 + gamma2
    d = _draw_operator_params(rng)
    d.pop("gamma")
    d["gamma1"] = rng.uniform(0.9, 1.2)
    d["gamma2"] = rng.uniform(0.9, 1.2)
    return d


def suite_semigroup():
    """Composition in the third and fourth parameters: two applications
    collapse to one with summed parameters; quadrature part shrinks at
    observed order >= 1.8 under grid halving."""
    rng = np.random.default_rng(301)
    M = 2**10
    tol = max(1e-8, 5.0 / M**2)
    errors = []
    order_ok = True
    for _ in range(3):
        draw = _draw_semigroup(rng)
        d1, d2 = rng.uniform(-1.0, 1.5), rng.uniform(-1.0, 1.5)
        e1 = _semigroup_error(draw, d1, d2, M)
        e2 = _semigroup_error(draw, d1, d2, 2 * M)
        errors.append(e1)
        order_ok &= e1 / max(e2, 1e-300) >= 2.0**1.8
    return _report("semigroup", errors, tol, extra_ok=order_ok)


def suite_special_inversion():
    """Opposite fourth parameters cancel: the composition is the plain
    Riemann-Liouville integral of the summed order."""
    rng = np.random.default_rng(302)
    M = 2**10
    tol = max(1e-8, 5.0 / M**2)
    errors = []
    for _ in range(3):
        draw = _draw_semigroup(rng)
        d = rng.uniform(0.4, 1.5)
        base = MLParams(draw["alpha"], draw["beta"], 1.0, 1.0, draw["omega1"], draw["omega2"])
        f = _cos_sample(M)
        inner = ml_integral_apply(
            OperatorRequest(replace(base, gamma=draw["gamma2"], delta=-d)), f
        )
        lhs = ml_integral_apply(
            OperatorRequest(replace(base, gamma=draw["gamma1"], delta=d)), inner
        )
        rhs = rl_integral_sampled(f, draw["gamma1"] + draw["gamma2"])
        errors.append(float(np.max(np.abs(lhs.values - rhs.values))))
    return _report("special-inversion", errors, tol)


def suite_rl_interplay():
    """The plain Riemann-Liouville integral composes with the operator by
    shifting the third parameter, on either side.

    Tolerance pinned at 1e-4 for M = 2**10: the composed quantities carry a
    (x-c)^gamma endpoint structure, so the max-norm error is O(h^(1+gamma)),
    not O(h^2)."""
    rng = np.random.default_rng(303)
    M = 2**10
    tol = 1e-4
    errors = []
    for mu in (0.4, 1.2):
        draw = _draw_operator_params(rng)
        p = MLParams(
            draw["alpha"], draw["beta"], draw["gamma"], 1.2, draw["omega1"], draw["omega2"]
        )
        f = _cos_sample(M)
        jf = ml_integral_apply(OperatorRequest(p), f)
        left = rl_integral_sampled(jf, mu)
        both = ml_integral_apply(OperatorRequest(replace(p, gamma=p.gamma + mu)), f)
        errors.append(float(np.max(np.abs(left.values - both.values))))
        imf = rl_integral_sampled(f, mu)
        right = ml_integral_apply(OperatorRequest(p), imf)
        errors.append(float(np.max(np.abs(right.values - both.values))))
    return _report("rl-interplay", errors, tol)


_INVERSION_GAMMAS = (0.35, 0.42, 1.3)


def _inversion_draw(rng, gamma):
    return MLParams(
        rng.uniform(0.6, 1.4), rng.uniform(0.6, 1.4), gamma,
        rng.uniform(0.6, 1.5), rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6),
    )


def suite_left_inverse():
    """The Riemann-Liouville-type derivative operator inverts the integral
    operator from the left; interior error at M = 2**12 and observed order."""
    rng = np.random.default_rng(304)
    errors = []
    order_ok = True
    for gamma in _INVERSION_GAMMAS:
        p = _inversion_draw(rng, gamma)
        errs = []
        for M in (2**10, 2**11, 2**12):
            grid = np.linspace(0.0, 1.0, M + 1)
            f = SampledFunction(0.0, 1.0, np.sin(grid))
            req = OperatorRequest(p)
            out = ml_derivative_rl(req, ml_integral_apply(req, f))
            mask = _interior(grid, 0.0, 1.0)
            errs.append(float(np.max(np.abs(out.values - f.values)[mask])))
        errors.append(errs[-1])
        order_ok &= math.log2(errs[0] / max(errs[-1], 1e-300)) / 2.0 >= 1.5
    return _report("left-inverse", errors, 1e-4, extra_ok=order_ok)


def suite_caputo_composition():
    """Integral of the Caputo-type derivative recovers f minus its Taylor
    part at c; interior error at M = 2**12 and observed order."""
    rng = np.random.default_rng(305)
    errors = []
    order_ok = True
    for gamma in _INVERSION_GAMMAS:
        p = _inversion_draw(rng, gamma)
        n = int(math.floor(gamma)) + 1
        errs = []
        for M in (2**10, 2**11, 2**12):
            grid = np.linspace(0.0, 1.0, M + 1)
            f = SampledFunction(0.0, 1.0, np.sin(grid))
            req = OperatorRequest(p)
            out = ml_integral_apply(req, ml_derivative_caputo(req, f))
            taylor = np.zeros_like(grid, dtype=complex)
            sin_derivs = (0.0, 1.0, 0.0)  # sin at 0: f, f', f''
            for kk in range(n):
                taylor += grid**kk * sin_derivs[kk] / math.factorial(kk)
            mask = _interior(grid, 0.0, 1.0)
            errs.append(float(np.max(np.abs(out.values - (f.values - taylor))[mask])))
        errors.append(errs[-1])
        order_ok &= math.log2(errs[0] / max(errs[-1], 1e-300)) / 2.0 >= 1.5
    return _report("caputo-composition", errors, 1e-4, extra_ok=order_ok)


def suite_rl_caputo():
    """The two derivative types differ by the initial-value correction sum."""
    rng = np.random.default_rng(306)
    errors = []
    M = 2**12
    grid = np.linspace(0.0, 1.0, M + 1)
    f = SampledFunction(0.0, 1.0, np.exp(grid))
    for gamma in (0.4, 0.7):
        p = _inversion_draw(rng, gamma)
        req = OperatorRequest(p)
        cf = ml_derivative_caputo(req, f)
        df = ml_derivative_rl(req, f)
        corr = rl_caputo_correction(req, f)
        mask = _interior(grid, 0.0, 1.0)
        errors.append(
            float(np.max(np.abs(cf.values - (df.values - corr.values))[mask]))
        )
    return _report("rl-caputo", errors, 1e-4)


def suite_boundedness():
    """L1 boundedness with the explicit constant, and the constant against
    its brute-force rectangle oracle."""
    rng = np.random.default_rng(307)
    ratio_errors = []
    M = 512
    grid = np.linspace(0.0, 1.0, M + 1)
    for _ in range(20):
        draw = _draw_operator_params(rng, gamma_range=(0.4, 1.4))
        p = MLParams(
            draw["alpha"], draw["beta"], draw["gamma"],
            rng.uniform(-1.0, 1.5), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
        )
        knots = np.linspace(0.0, 1.0, 9)
        vals = rng.uniform(-1, 1, 9) + 1j * rng.uniform(-1, 1, 9)
        f = SampledFunction(
            0.0, 1.0, np.interp(grid, knots, vals.real) + 1j * np.interp(grid, knots, vals.imag)
        )
        req = OperatorRequest(p)
        jf = ml_integral_apply(req, f)
        A = bound_constant(req, 1.0)
        ratio_errors.append(jf.norm_l1() / (A * f.norm_l1()))
    # constant against the rectangle oracle
    oracle_errors = []
    cases = [MLParams(1, 1, 1, 1, 1, 1)]
    for _ in range(2):
        d = _draw_operator_params(rng, gamma_range=(0.4, 1.4))
        cases.append(
            MLParams(d["alpha"], d["beta"], d["gamma"], rng.uniform(-1, 1.5),
                     d["omega1"], d["omega2"])
        )
    for p in cases:
        A = bound_constant(OperatorRequest(p), 1.0)
        Aref = _rect_bound_oracle(p, 1.0)
        oracle_errors.append(abs(A - Aref) / Aref)
    inequality_ok = max(ratio_errors) <= 1.01
    return _report("boundedness", oracle_errors, 1e-10, extra_ok=inequality_ok)


def suite_zeta_independence():
    """The derivative operator defined through an auxiliary order zeta does
    not depend on zeta; checked against the series form for the two
    integer-order choices.  The gamma+zeta = 2 route runs through three
    finite differences and is intrinsically noisier."""
    rng = np.random.default_rng(308)
    errors = []
    M = 2**11
    grid = np.linspace(0.0, 1.0, M + 1)
    f = SampledFunction(0.0, 1.0, np.sin(grid))
    mask = _interior(grid, 0.0, 1.0)
    for gamma in (0.7, 0.4):
        p = _inversion_draw(rng, gamma)
        req = OperatorRequest(p)
        jf = ml_integral_apply(req, f)
        via_series = ml_derivative_rl(req, jf)
        for target in (1.0, 2.0):
            via_zeta = ml_derivative_via_zeta(req, jf, target - gamma)
            errors.append(
                float(np.max(np.abs(via_zeta.values - via_series.values)[mask]))
            )
    return _report("zeta-independence", errors, 2e-3)


def suite_figures():
    """The pinned figure presets: the all-ones preset column is e^(2t); the
    value at the origin is 1; raising alpha slows growth in x."""
    errors = []
    kind, p2a = preset_params("fig2a")
    ts = np.arange(0.0, 2.0001, 0.05)
    rows = univariate_table(p2a, ts)
    for t, re, im, _err in rows:
        want = math.exp(2.0 * t)
        errors.append(abs(complex(re, im) - want) / want)
    _, p1a = preset_params("fig1a")
    origin = bivariate_table(p1a, [0.0], [0.0])[0]
    errors.append(abs(complex(origin[2], origin[3]) - 1.0))
    _, p1d = preset_params("fig1d")
    va = bivariate_table(p1a, [2.0], [1.0])[0]
    vd = bivariate_table(p1d, [2.0], [1.0])[0]
    slower = vd[2] < va[2]
    return _report("figures", errors, 1e-10, extra_ok=slower)


SUITES = {
    "kernel": suite_kernel,
    "exp-reduction": suite_exp_reduction,
    "prabhakar": suite_prabhakar,
    "symmetry": suite_symmetry,
    "laguerre": suite_laguerre,
    "laguerre-generating": suite_laguerre_generating,
    "series-oracle": suite_series_oracle,
    "contour": suite_contour,
    "laplace": suite_laplace,
    "fde-rl": suite_fde_rl,
    "fde-caputo": suite_fde_caputo,
    "classical-reduction": suite_classical_reduction,
    "shift-rule": suite_shift_rule,
    "semigroup": suite_semigroup,
    "special-inversion": suite_special_inversion,
    "rl-interplay": suite_rl_interplay,
    "left-inverse": suite_left_inverse,
    "caputo-composition": suite_caputo_composition,
    "rl-caputo": suite_rl_caputo,
    "boundedness": suite_boundedness,
    "zeta-independence": suite_zeta_independence,
    "figures": suite_figures,
}


def suite_names():
    return list(SUITES)


def run_suites(selector="all"):
    """Run one named suite or all of them; returns a list of reports."""
    if selector == "all":
        names = suite_names()
    elif selector in SUITES:
        names = [selector]
    else:
        raise KeyError(
            f"unknown suite {selector!r}; choose 'all' or one of {', '.join(SUITES)}"
        )
    return [SUITES[name]() for name in names]
