"""Correlation kernel backend selection.

Prefers the compiled extension when it was built; otherwise falls back to
the numpy/scipy implementation. SEASOUNDER_PURE=1 forces the fallback,
which is handy for benchmarking the two side by side.
"""

import os

import numpy as np

from . import _ref

if os.environ.get("SEASOUNDER_PURE") == "1":
    _impl = None
else:
    try:
        from . import _xcorr as _impl
    except ImportError:
        _impl = None

BACKEND = "cython" if _impl is not None else "numpy"


def xcorr_mag(received: np.ndarray, reference: np.ndarray) -> np.ndarray:
    """Sliding cross-correlation magnitudes for lags 0 .. len(received)-len(reference)."""
    received = np.ascontiguousarray(received, dtype=np.complex128)
    reference = np.ascontiguousarray(reference, dtype=np.complex128)
    if _impl is not None:
        return _impl.xcorr_mag(received, reference)
    return _ref.xcorr_mag(received, reference)


def available_backends() -> dict:
    """Callable per backend name, for tests and the kernel benchmark."""
    backends = {
        "numpy-direct": _ref.xcorr_mag_direct,
        "numpy-fft": _ref.xcorr_mag_fft,
    }
    if _impl is not None:
        backends["cython"] = _impl.xcorr_mag
    return backends
