"""Propagation models: free-space loss, two-ray ground reflection, tapped
delay line multipath and additive complex Gaussian noise."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .signal import IqBuffer

SPEED_OF_LIGHT = 299792458.0  # m/s

# Coherent two-ray cancellation is clamped here instead of returning -inf.
TWO_RAY_FLOOR_DB = -200.0


@dataclass(frozen=True)
class PathTap:
    """One resolved propagation path."""

    delay_us: float  # excess delay relative to the first path
    gain_db: float   # relative to the matched-filter reference

    def __post_init__(self):
        if self.delay_us < 0:
            raise ValueError("tap delay must be >= 0")

    @property
    def amplitude(self) -> float:
        return 10.0 ** (self.gain_db / 20.0)


@dataclass(frozen=True)
class ChannelProfile:
    """Ordered multipath taps; delays are relative to the first arrival."""

    taps: tuple
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "taps", tuple(self.taps))
        if len(self.taps) == 0:
            raise ValueError("channel profile needs at least one tap")
        if self.taps[0].delay_us != 0.0:
            raise ValueError("first tap must be at delay 0 (delays are relative)")
        delays = [t.delay_us for t in self.taps]
        if any(b <= a for a, b in zip(delays, delays[1:])):
            raise ValueError("tap delays must be strictly increasing")

    def max_delay_us(self) -> float:
        return self.taps[-1].delay_us

    def main_gain_db(self) -> float:
        return self.taps[0].gain_db

    def total_power_gain_db(self) -> float:
        """Power sum of all taps, 10*log10(sum 10^(g/10))."""
        return 10.0 * math.log10(sum(10.0 ** (t.gain_db / 10.0) for t in self.taps))


@dataclass(frozen=True)
class LinkGeometry:
    """Flat-earth link: horizontal distance plus antenna heights."""

    distance_m: float
    tx_height_m: float = 0.0
    rx_height_m: float = 0.0

    def __post_init__(self):
        if not self.distance_m > 0:
            raise ValueError("distance_m must be positive")
        if self.tx_height_m < 0 or self.rx_height_m < 0:
            raise ValueError("antenna heights must be >= 0")


# Measured coastal profiles: gateway at 1 m (scenario 1) and at ground level
# (scenario 2). Delay in us, mean gain in dB.
SCENARIO_1 = ChannelProfile(
    taps=(
        PathTap(0.0, -0.38),
        PathTap(18.38, -5.00),
        PathTap(27.19, -4.74),
    ),
    label="scenario1",
)
SCENARIO_2 = ChannelProfile(
    taps=(
        PathTap(0.0, -3.69),
        PathTap(11.73, -5.36),
        PathTap(26.89, -5.14),
    ),
    label="scenario2",
)

IDENTITY_PROFILE = ChannelProfile(taps=(PathTap(0.0, 0.0),), label="identity")


def builtin_profile(scenario: int) -> ChannelProfile:
    """Built-in measured profile for scenario 1 or 2."""
    if scenario == 1:
        return SCENARIO_1
    if scenario == 2:
        return SCENARIO_2
    raise ValueError(f"unknown scenario {scenario!r}; expected 1 or 2")


def apply_tapped_delay_line(x: IqBuffer, profile: ChannelProfile) -> IqBuffer:
    """Pass `x` through the multipath profile.

    y[n] = sum_k a_k * x[n - d_k] with d_k the tap delay rounded to the
    nearest sample and a_k = 10^(gain/20). Output grows by the largest
    delay so the multipath tail is preserved.
    """
    fs = x.sample_rate
    if profile.max_delay_us() * 1e-6 > 10.0 * x.duration_s:
        raise ValueError("tap delay exceeds 10x the input duration")
    delays = [int(np.round(t.delay_us * 1e-6 * fs)) for t in profile.taps]
    y = np.zeros(len(x) + delays[-1], dtype=np.complex128)
    for d, tap in zip(delays, profile.taps):
        y[d:d + len(x)] += tap.amplitude * x.samples
    return IqBuffer(y, fs)


def add_awgn(x: IqBuffer, snr_db: float, seed) -> IqBuffer:
    """Add circularly symmetric complex Gaussian noise at the given SNR.

    SNR is relative to the mean power of `x`. snr_db = +inf is the no-noise
    sentinel and returns the input samples unchanged.
    """
    if math.isinf(snr_db) and snr_db > 0:
        return IqBuffer(x.samples, x.sample_rate)
    power = float(np.mean(np.abs(x.samples) ** 2))
    if power == 0.0:
        raise ValueError("cannot set an SNR on a zero-energy buffer")
    noise_var = power / 10.0 ** (snr_db / 10.0)
    rng = np.random.default_rng(seed)
    scale = math.sqrt(noise_var / 2.0)
    noise = scale * (rng.standard_normal(len(x)) + 1j * rng.standard_normal(len(x)))
    return IqBuffer(x.samples + noise, x.sample_rate)


def free_space_path_loss_db(distance_m: float, fc_hz: float) -> float:
    """Free-space path loss, 20*log10(4*pi*d*fc/c)."""
    if not distance_m > 0:
        raise ValueError("distance_m must be positive")
    if not fc_hz > 0:
        raise ValueError("fc_hz must be positive")
    return 20.0 * math.log10(4.0 * math.pi * distance_m * fc_hz / SPEED_OF_LIGHT)


def two_ray_gain_db(geom: LinkGeometry, fc_hz: float, reflection: complex = -1.0) -> float:
    """Coherent two-ray gain relative to free space, floored at -200 dB.

    Direct path plus one ground/sea image reflection with coefficient
    `reflection`; at zero antenna heights the paths cancel completely,
    hence the floor.
    """
    dh = geom.distance_m
    d_direct = math.hypot(dh, geom.tx_height_m - geom.rx_height_m)
    d_reflect = math.hypot(dh, geom.tx_height_m + geom.rx_height_m)
    phase = 2.0 * math.pi * fc_hz * (d_reflect - d_direct) / SPEED_OF_LIGHT
    field = 1.0 + reflection * (d_direct / d_reflect) * np.exp(-1j * phase)
    mag = abs(field)
    if mag <= 10.0 ** (TWO_RAY_FLOOR_DB / 20.0):
        return TWO_RAY_FLOOR_DB
    return max(20.0 * math.log10(mag), TWO_RAY_FLOOR_DB)


def received_power_dbm(tx_dbm: float, path_loss_db: float, channel_gain_db: float = 0.0) -> float:
    """Link budget: transmit power minus path loss plus channel gain."""
    return tx_dbm - path_loss_db + channel_gain_db


def profile_to_json(profile: ChannelProfile) -> dict:
    return {
        "label": profile.label,
        "taps": [{"delay_us": t.delay_us, "gain_db": t.gain_db} for t in profile.taps],
    }


def profile_from_json(obj: dict) -> ChannelProfile:
    try:
        taps = tuple(PathTap(float(t["delay_us"]), float(t["gain_db"])) for t in obj["taps"])
        label = str(obj.get("label", ""))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed channel profile object: {exc}") from exc
    return ChannelProfile(taps=taps, label=label)
