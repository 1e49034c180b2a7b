"""Numpy/scipy fallback for the sliding-correlation kernel.

Same contract as the compiled extension: magnitudes of
sum_n received[tau+n] * conj(reference[n]) for tau = 0 .. N-M.
"""

import numpy as np
from scipy import signal as _sp_signal


def xcorr_mag(received: np.ndarray, reference: np.ndarray) -> np.ndarray:
    """Sliding cross-correlation magnitudes (FFT or direct, size-dependent)."""
    out = _sp_signal.correlate(received, reference, mode="valid", method="auto")
    return np.abs(out)


def xcorr_mag_direct(received: np.ndarray, reference: np.ndarray) -> np.ndarray:
    """Direct-sum evaluation of the same quantity (validation path)."""
    out = _sp_signal.correlate(received, reference, mode="valid", method="direct")
    return np.abs(out)


def xcorr_mag_fft(received: np.ndarray, reference: np.ndarray) -> np.ndarray:
    """Transform-based evaluation of the same quantity."""
    out = _sp_signal.correlate(received, reference, mode="valid", method="fft")
    return np.abs(out)
