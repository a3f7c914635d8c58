"""Hot numeric kernels with two interchangeable backends.

The numba backend is the default. Setting the environment variable
``REGCENT_NO_NUMBA=1`` (or any non-empty value) selects the pure
numpy/Python implementations instead; the two backends compute identical
results and are compared by the test suite and by benchmarks/bench_kernels.py.
"""

import os

from . import py_impl

_DISABLED = bool(os.environ.get("REGCENT_NO_NUMBA"))

if not _DISABLED:
    try:
        from . import jit_impl as _impl
        BACKEND = "numba"
    except ImportError:  # pragma: no cover - numba is a hard dep, but stay usable
        _impl = py_impl
        BACKEND = "python"
else:
    _impl = py_impl
    BACKEND = "python"

all_pairs_distances = _impl.all_pairs_distances
single_source_distances = _impl.single_source_distances
girth_value = _impl.girth_value
brandes_float = _impl.brandes_float
diag_powers_int64 = _impl.diag_powers_int64
