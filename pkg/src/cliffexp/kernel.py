"""Select the blade kernel at import time.

The compiled ``_kernel`` extension is used when it was built; otherwise the
pure-Python ``_kernel_py`` module.  Setting ``CLIFFEXP_PURE_PYTHON=1`` forces
the fallback.
"""
import os

from . import _kernel_py

if os.environ.get("CLIFFEXP_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl
    except ImportError:
        _impl = _kernel_py

BACKEND = "compiled" if _impl is not _kernel_py else "python"

blade_sign = _impl.blade_sign
geometric_product = _impl.geometric_product
outer_product = _impl.outer_product
