"""Pick the compiled kernels when available, NumPy otherwise.

Set ``SLIDEOCAM_PURE=1`` to force the NumPy kernels.
"""

import os

from . import _pykernels

if os.environ.get("SLIDEOCAM_PURE", "") not in ("", "0"):
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        kernels = _pykernels

BACKEND = "cython" if kernels is not _pykernels else "python"


def get_kernels(name=None):
    """Return a kernel module by name ('cython' or 'python'); default is the active one."""
    if name is None:
        return kernels
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
