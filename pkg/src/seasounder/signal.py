"""Probe-sequence generation, BPSK baseband modulation and cross-correlation.

Everything here operates on complex baseband samples; the carrier only
matters to the link-budget code in :mod:`seasounder.channel`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels

# Default LFSR register width and feedback taps (primitive polynomial,
# 1-indexed tap positions). 2^31-1 is prime, so the stream is maximal-length.
LFSR_BITS = 31
LFSR_TAPS = (31, 28)


@dataclass
class BitSequence:
    """Binary probe sequence."""

    bits: np.ndarray  # uint8 array of {0, 1}

    def __post_init__(self):
        self.bits = np.asarray(self.bits, dtype=np.uint8)
        if self.bits.ndim != 1 or self.bits.size == 0:
            raise ValueError("bit sequence must be a non-empty 1-D array")
        if np.any(self.bits > 1):
            raise ValueError("bit sequence may only contain 0 and 1")
        self.bits.flags.writeable = False

    def __len__(self) -> int:
        return int(self.bits.size)


@dataclass
class IqBuffer:
    """Complex baseband samples at a fixed sample rate."""

    samples: np.ndarray     # complex128
    sample_rate: float      # Hz

    def __post_init__(self):
        self.samples = np.ascontiguousarray(self.samples, dtype=np.complex128)
        if self.samples.ndim != 1 or self.samples.size == 0:
            raise ValueError("IQ buffer must hold at least one sample")
        if not self.sample_rate > 0:
            raise ValueError("sample_rate must be positive")
        self.sample_rate = float(self.sample_rate)
        self.samples.flags.writeable = False

    def __len__(self) -> int:
        return int(self.samples.size)

    @property
    def duration_s(self) -> float:
        return self.samples.size / self.sample_rate

    def energy(self) -> float:
        return float(np.sum(np.abs(self.samples) ** 2))


@dataclass(frozen=True)
class SounderParams:
    """Sounding waveform and observation-window parameters.

    With the defaults one chip lasts 100 ns, so the correlator resolves
    paths on a 100 ns grid.
    """

    fc_hz: float = 868e6          # carrier (LoRa EU band)
    fs_hz: float = 10e6           # baseband sample rate
    n_bits: int = 456             # probe sequence length
    samples_per_chip: int = 1
    tx_power_dbm: float = 9.0
    window_s: float = 2e-3        # observation window W
    seed: int = 1                 # probe sequence seed

    def __post_init__(self):
        if self.fc_hz <= 0 or self.fs_hz <= 0:
            raise ValueError("fc_hz and fs_hz must be positive")
        if self.n_bits < 1:
            raise ValueError("n_bits must be >= 1")
        if self.samples_per_chip < 1:
            raise ValueError("samples_per_chip must be >= 1")
        if self.window_s < self.n_bits * self.samples_per_chip / self.fs_hz:
            raise ValueError("window_s must hold at least one full sequence")

    @property
    def chip_duration_s(self) -> float:
        return self.samples_per_chip / self.fs_hz

    @property
    def sequence_samples(self) -> int:
        return self.n_bits * self.samples_per_chip

    @property
    def window_samples(self) -> int:
        return int(round(self.window_s * self.fs_hz))


@dataclass
class CorrelationProfile:
    """Per-lag correlation magnitudes."""

    magnitudes: np.ndarray   # non-negative, indexed by lag
    lag_resolution_s: float  # 1 / fs of the correlated buffers

    def __post_init__(self):
        self.magnitudes = np.ascontiguousarray(self.magnitudes, dtype=np.float64)
        if self.magnitudes.ndim != 1 or self.magnitudes.size == 0:
            raise ValueError("correlation profile must be non-empty")
        if np.any(self.magnitudes < 0):
            raise ValueError("correlation magnitudes must be non-negative")
        if not self.lag_resolution_s > 0:
            raise ValueError("lag_resolution_s must be positive")
        self.magnitudes.flags.writeable = False

    def __len__(self) -> int:
        return int(self.magnitudes.size)

    def lag_us(self, lag: int) -> float:
        return lag * self.lag_resolution_s * 1e6


def _mix64(z: int) -> int:
    """splitmix64 finalizer; spreads any 64-bit seed over the word."""
    z = (z + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return z ^ (z >> 31)


def generate_sequence(
    seed: int,
    length: int,
    register_bits: int = LFSR_BITS,
    taps: tuple = LFSR_TAPS,
) -> BitSequence:
    """First `length` bits of a maximal-length Fibonacci LFSR stream.

    The register starts from a mixed nonzero state derived from `seed`:
    mixing keeps short prefixes balanced (a sparse register would need many
    shifts before the stream looks pseudo-random), so any 64-bit seed gives
    a usable probe sequence.
    """
    if length < 1:
        raise ValueError("sequence length must be >= 1")
    mask = (1 << register_bits) - 1
    state = (_mix64(int(seed) & 0xFFFFFFFFFFFFFFFF) % mask) + 1  # in [1, 2^n - 1]
    # Right-shift Fibonacci form: tap p reads the bit p stages before the
    # output, i.e. index register_bits - p from the LSB.
    shifts = tuple(register_bits - tap for tap in taps)
    bits = np.empty(length, dtype=np.uint8)
    for i in range(length):
        bits[i] = state & 1
        feedback = 0
        for shift in shifts:
            feedback ^= (state >> shift) & 1
        state = (state >> 1) | (feedback << (register_bits - 1))
    return BitSequence(bits)


def modulate_bpsk(bits: BitSequence, params: SounderParams) -> IqBuffer:
    """Map bits to baseband BPSK: 0 -> +1, 1 -> -1, held samples_per_chip samples."""
    symbols = 1.0 - 2.0 * bits.bits.astype(np.float64)
    samples = np.repeat(symbols, params.samples_per_chip).astype(np.complex128)
    return IqBuffer(samples, params.fs_hz)


def cross_correlate(received: IqBuffer, reference: IqBuffer) -> CorrelationProfile:
    """Correlation magnitudes of `received` against `reference` at every lag.

    magnitudes[tau] = |sum_n received[tau+n] * conj(reference[n])| for
    tau = 0 .. len(received) - len(reference).
    """
    if received.sample_rate != reference.sample_rate:
        raise ValueError("received and reference must share a sample rate")
    if len(received) < len(reference):
        raise ValueError("received must be at least as long as reference")
    mags = _kernels.xcorr_mag(received.samples, reference.samples)
    return CorrelationProfile(mags, 1.0 / received.sample_rate)
