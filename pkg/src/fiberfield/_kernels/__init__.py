"""Integer polynomial kernels with a compiled implementation when available.

Set ``FIBERFIELD_PURE_PYTHON=1`` to force the pure-Python versions.
"""

import os

from . import _pykernels

BACKEND = "python"
poly_mul = _pykernels.poly_mul
hom_eval = _pykernels.hom_eval

if os.environ.get("FIBERFIELD_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        pass
    else:
        BACKEND = "gmp"
        poly_mul = _ckernels.poly_mul
        hom_eval = _ckernels.hom_eval

__all__ = ["BACKEND", "poly_mul", "hom_eval"]
