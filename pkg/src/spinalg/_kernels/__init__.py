"""Kernel selection: compiled extension when available, pure Python otherwise.

Set SPINALG_PURE=1 to force the pure-Python kernels (used by the test
suite and the benchmark to exercise both implementations).
"""

import os

if os.environ.get("SPINALG_PURE") == "1":
    from spinalg._kernels import pure as _impl
else:
    try:
        from spinalg._kernels import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        from spinalg._kernels import pure as _impl

IMPL = _impl.IMPL
matmul = _impl.matmul
add_scaled = _impl.add_scaled
scale = _impl.scale
