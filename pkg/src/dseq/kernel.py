"""Kernel selection: compiled ``_ckernel`` when importable, else ``_pykernel``.

Set ``DSEQ_PURE_PYTHON=1`` to force the fallback.
"""

import os

from ._pykernel import Reducer as PyReducer

CReducer = None
if not os.environ.get("DSEQ_PURE_PYTHON"):
    try:
        from ._ckernel import Reducer as CReducer
    except ImportError:  # extension not built
        CReducer = None

HAVE_COMPILED = CReducer is not None
BACKEND = "compiled" if HAVE_COMPILED else "python"


def make_reducer(nvars, weights, p, prefer_compiled=True):
    """Return a fresh reducer; the compiled one handles up to 16 variables."""
    if prefer_compiled and CReducer is not None and nvars <= 16:
        return CReducer(nvars, weights, p)
    return PyReducer(nvars, weights, p)
