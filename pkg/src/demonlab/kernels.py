"""Kernel backend selection.

The compiled extension is preferred when it is built; otherwise the numpy
fallback is used.  Set ``DEMONLAB_KERNELS=python`` or ``=cython`` to force a
backend (forcing ``cython`` raises if the extension is missing).
"""

import os

from . import _kernels_py

_choice = os.environ.get("DEMONLAB_KERNELS", "").strip().lower()
if _choice not in ("", "python", "cython"):
    raise RuntimeError(
        f"DEMONLAB_KERNELS must be 'python' or 'cython', got {_choice!r}"
    )

_impl = None
if _choice != "python":
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        if _choice == "cython":
            raise RuntimeError(
                "DEMONLAB_KERNELS=cython but the compiled kernels are not built; "
                "reinstall with a C compiler and Cython available"
            ) from None

if _impl is None:
    _impl = _kernels_py
    BACKEND = "python"
else:
    BACKEND = "cython"

ZERO_DENSITY = _kernels_py.ZERO_DENSITY

entropy_sum = _impl.entropy_sum
moments = _impl.moments
abs2 = _impl.abs2


def available_backends():
    """Names of importable kernel backends, fallback first."""
    names = ["python"]
    try:
        from . import _kernels  # noqa: F401
    except ImportError:
        pass
    else:
        names.append("cython")
    return names


def backend_module(name):
    """Return the implementation module for ``name`` (for tests/benchmarks)."""
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _kernels
        return _kernels
    raise ValueError(f"unknown kernel backend {name!r}")
