# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sliding-correlation kernel.

Evaluates |sum_n received[tau+n] * conj(reference[n])| for every lag tau
directly (no transform), with a fast path for the common case of a real
+/-1 probe waveform.
"""

import numpy as np

from libc.math cimport sqrt


def xcorr_mag(const double complex[::1] received, const double complex[::1] reference):
    cdef Py_ssize_t n = received.shape[0]
    cdef Py_ssize_t m = reference.shape[0]
    if m == 0 or n < m:
        raise ValueError("received must be at least as long as reference")
    cdef Py_ssize_t n_lags = n - m + 1
    out_arr = np.empty(n_lags, dtype=np.float64)
    cdef double[::1] out = out_arr

    cdef bint ref_real = True
    cdef Py_ssize_t i
    for i in range(m):
        if reference[i].imag != 0.0:
            ref_real = False
            break

    if ref_real:
        _xcorr_real_ref(received, reference, out, n_lags, m)
    else:
        _xcorr_general(received, reference, out, n_lags, m)
    return out_arr


cdef void _xcorr_general(const double complex[::1] x, const double complex[::1] h,
                         double[::1] out, Py_ssize_t n_lags, Py_ssize_t m) noexcept:
    cdef Py_ssize_t tau, i
    cdef double acc_re, acc_im, xr, xi, hr, hi
    for tau in range(n_lags):
        acc_re = 0.0
        acc_im = 0.0
        for i in range(m):
            xr = x[tau + i].real
            xi = x[tau + i].imag
            hr = h[i].real
            hi = h[i].imag
            acc_re += xr * hr + xi * hi
            acc_im += xi * hr - xr * hi
        out[tau] = sqrt(acc_re * acc_re + acc_im * acc_im)


cdef void _xcorr_real_ref(const double complex[::1] x, const double complex[::1] h,
                          double[::1] out, Py_ssize_t n_lags, Py_ssize_t m) noexcept:
    cdef Py_ssize_t tau, i
    cdef double acc_re, acc_im, hr
    for tau in range(n_lags):
        acc_re = 0.0
        acc_im = 0.0
        for i in range(m):
            hr = h[i].real
            acc_re += x[tau + i].real * hr
            acc_im += x[tau + i].imag * hr
        out[tau] = sqrt(acc_re * acc_re + acc_im * acc_im)
