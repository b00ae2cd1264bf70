"""Pick the compiled elimination kernel when available.

Set QHKIT_PURE=1 to force the pure-Python implementation.
"""
import os

from . import _rref_py

BACKEND = "python"
rref_modp = _rref_py.rref_modp
rref_exact = _rref_py.rref_exact

if not os.environ.get("QHKIT_PURE"):
    try:
        from . import _rref
    except ImportError:
        pass
    else:
        rref_modp = _rref.rref_modp
        rref_exact = _rref.rref_exact
        BACKEND = "cython"
