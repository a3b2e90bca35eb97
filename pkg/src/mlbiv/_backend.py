"""Backend selection: compiled Cython kernels when available, numpy otherwise.

``MLBIV_BACKEND=python`` or ``MLBIV_BACKEND=compiled`` forces a choice
(the latter raises if the extension did not build).  The selected module
is exposed as ``mlbiv._backend.impl``.
"""

import os

from . import _kernels_py

_forced = os.environ.get("MLBIV_BACKEND", "").strip().lower()

if _forced == "python":
    impl = _kernels_py
elif _forced == "compiled":
    from . import _kernels_c as impl  # noqa: F401  (ImportError is the point)
else:
    try:
        from . import _kernels_c as impl
    except ImportError:
        impl = _kernels_py

BACKEND = impl.BACKEND


def available_backends():
    names = ["python"]
    try:
        from . import _kernels_c  # noqa: F401
        names.insert(0, "compiled")
    except ImportError:
        pass
    return names
