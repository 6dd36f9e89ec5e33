"""Kernel backend selection.

Imports the compiled check-character kernels when the extension built,
otherwise falls back to the pure-Python twin. Setting ARKVOC_PURE=1 in
the environment forces the fallback regardless.
"""

import os

if os.environ.get("ARKVOC_PURE"):
    from arkvoc import _kernels_py as _impl
else:
    try:
        from arkvoc import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from arkvoc import _kernels_py as _impl

BACKEND = _impl.BACKEND
ALPHABET = _impl.ALPHABET
weighted_sum = _impl.weighted_sum
check_char = _impl.check_char
verify_check = _impl.verify_check
corruption_sweep = _impl.corruption_sweep
