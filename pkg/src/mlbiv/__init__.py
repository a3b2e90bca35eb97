"""Bivariate Mittag-Leffler function and associated fractional-calculus operators.

Evaluation routes (double series, complex contour quadrature, Laplace
transforms), the convolution-kernel fractional integral operator with its
Riemann-Liouville-type and Caputo-type inverses, analytic verification of
the two-order fractional ODEs, and a CLI (``mlbiv``).

The hot series kernels live in a compiled extension with a pure-numpy
fallback selected at import time; see ``mlbiv.backend_name()``.
"""

from ._backend import BACKEND as _BACKEND
from ._backend import available_backends
from .errors import (
    BranchError,
    DomainError,
    GridError,
    MlbivError,
    NonConvergenceError,
    PoleError,
    TailError,
)
from .kernel import LogMagnitude, log_gamma, pochhammer, recip_gamma
from .series import (
    EvalOptions,
    EvalResult,
    MLParams,
    eval_bivariate,
    eval_prabhakar,
    eval_univariate,
    eval_univariate_many,
    laguerre_bivariate,
    laguerre_generating_sum,
)

__version__ = "0.1.0"


def backend_name():
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return _BACKEND


__all__ = [
    "MlbivError",
    "DomainError",
    "PoleError",
    "BranchError",
    "GridError",
    "TailError",
    "NonConvergenceError",
    "LogMagnitude",
    "log_gamma",
    "recip_gamma",
    "pochhammer",
    "MLParams",
    "EvalOptions",
    "EvalResult",
    "eval_bivariate",
    "eval_univariate",
    "eval_univariate_many",
    "eval_prabhakar",
    "laguerre_bivariate",
    "laguerre_generating_sum",
    "backend_name",
    "available_backends",
]
