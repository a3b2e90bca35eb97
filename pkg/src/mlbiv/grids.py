"""Parameter-grid tables and the named figure presets.

The presets pin the exact parameter tuples used in the reference plots
(gamma = delta = 1 throughout): fig1a-fig1e vary (alpha, beta) for the
two-argument function, fig2a-fig2d vary them for the single-variable
form with omega1 = omega2 = 1.  Tables are plain row lists so the CLI
can serialise them as CSV or JSON.
"""

import os
from concurrent.futures import ThreadPoolExecutor

from .series import EvalOptions, MLParams, eval_bivariate, eval_univariate

__all__ = ["PRESETS", "preset_params", "bivariate_table", "univariate_table"]

# name -> (kind, alpha, beta)
PRESETS = {
    "fig1a": ("bivariate", 1.0, 1.0),
    "fig1b": ("bivariate", 0.9, 1.0),
    "fig1c": ("bivariate", 1.0, 0.9),
    "fig1d": ("bivariate", 1.5, 1.0),
    "fig1e": ("bivariate", 1.0, 1.5),
    "fig2a": ("univariate", 1.0, 1.0),
    "fig2b": ("univariate", 1.5, 1.5),
    "fig2c": ("univariate", 0.25, 0.25),
    "fig2d": ("univariate", 10.0, 10.0),
}


def preset_params(name):
    """(kind, MLParams) for a named figure preset."""
    try:
        kind, alpha, beta = PRESETS[name]
    except KeyError:
        raise KeyError(
            f"unknown preset {name!r}; choose from {', '.join(sorted(PRESETS))}"
        ) from None
    omega = 1.0 if kind == "univariate" else 0.0
    return kind, MLParams(alpha, beta, 1.0, 1.0, omega, omega)


def _thread_count():
    raw = os.environ.get("MLBIV_THREADS", "").strip()
    if not raw:
        return 1
    n = int(raw)
    if n < 1:
        raise ValueError("MLBIV_THREADS must be a positive integer")
    return n


def _ordered_map(fn, items):
    threads = _thread_count()
    if threads == 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def bivariate_table(params, xs, ys, opts=None):
    """Rows (x, y, re, im, err) over the cartesian grid xs × ys."""
    opts = opts or EvalOptions()
    points = [(x, y) for x in xs for y in ys]

    def one(pt):
        x, y = pt
        r = eval_bivariate(params, x, y, opts)
        return (x, y, r.value.real, r.value.imag, r.err_estimate)

    return _ordered_map(one, points)


def univariate_table(params, ts, opts=None):
    """Rows (t, re, im, err) over the given t values."""
    opts = opts or EvalOptions()

    def one(t):
        r = eval_univariate(params, t, opts)
        return (t, r.value.real, r.value.imag, r.err_estimate)

    return _ordered_map(one, ts)
