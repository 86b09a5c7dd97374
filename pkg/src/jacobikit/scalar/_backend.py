"""Pick the kernel implementation at import time.

The compiled kernels are used when the extension was built; set
``JACOBIKIT_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

if os.environ.get("JACOBIKIT_PURE_PYTHON"):
    from . import _pykernels as kernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        from . import _pykernels as kernels

BACKEND = kernels.BACKEND

__all__ = ["kernels", "BACKEND"]
