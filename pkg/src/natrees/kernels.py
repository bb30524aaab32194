"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``NATREES_PURE_PYTHON=1`` to force the fallback.
"""

import os

from natrees import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("NATREES_PURE_PYTHON"):
    try:
        from natrees import _kernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_impl = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

valid_labellings = _impl.valid_labellings
count_valid = _impl.count_valid
brute_force_labellings = _impl.brute_force_labellings
inversions = _impl.inversions
imaj = _impl.imaj
