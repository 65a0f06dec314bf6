"""Kernel selection: compiled extension if built, else the Python fallback."""

from . import _kernels_py as python

try:
    from . import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

backend = compiled if compiled is not None else python
BACKEND_NAME = "cython" if compiled is not None else "python"


def state_histogram(crossings, n_labels):
    return backend.state_histogram(crossings, n_labels)
