"""Hot-kernel backend selection.

The compiled Cython extension is used when it was built; otherwise the numpy
implementations take over transparently.  Set the environment variable
``MASENSE_PURE_PYTHON=1`` before import to force the numpy backend.
"""

import os

from . import _kernels_py

if os.environ.get("MASENSE_PURE_PYTHON", "0") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND

noiseless_samples = _impl.noiseless_samples
smoothed_covariance = _impl.smoothed_covariance
music_null_power = _impl.music_null_power
