"""Pick the compiled kernels when they are importable, else the pure-Python ones.

Set ``SCATLIB_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

pykernels = _pykernels

if os.environ.get("SCATLIB_PURE_PYTHON"):
    ckernels = None
else:
    try:
        from . import _ckernels as ckernels
    except ImportError:  # extension not built
        ckernels = None

kernels = ckernels if ckernels is not None else pykernels
BACKEND = kernels.BACKEND


def use(name: str):
    """Switch the active kernels at runtime ("cython" or "python"); returns the previous name."""
    global kernels, BACKEND
    previous = BACKEND
    if name == "python":
        kernels = pykernels
    elif name == "cython":
        if ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        kernels = ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = kernels.BACKEND
    return previous


def available() -> list[str]:
    return ["python"] + (["cython"] if ckernels is not None else [])
