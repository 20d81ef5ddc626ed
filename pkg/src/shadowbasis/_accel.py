"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``SHADOWBASIS_PURE=1`` to force the fallback.
"""
import os

from . import _fallback

BACKEND = "python"
impl = _fallback
if os.environ.get("SHADOWBASIS_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as impl  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        impl = _fallback

lis = impl.lis
rsk = impl.rsk
stat_histogram = impl.stat_histogram

BACKENDS = {"python": _fallback}
try:
    from . import _kernels as _compiled

    BACKENDS["cython"] = _compiled
except ImportError:
    pass
