"""Ground-truth scenes and OFDM measurement synthesis along the two linear scans.

The movable antenna takes M samples along the plate's local X axis and M more
along its local Z axis, with constant spacing d and both scans starting at the
origin.  Each sample is the demodulated per-subcarrier response of the
multi-path channel plus circularly-symmetric complex Gaussian noise.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import FrontSideViolationWarning
from .geometry import AnglePair, Orientation, rotation_matrix, unit_direction

SPEED_OF_LIGHT = 299792458.0


@dataclass(frozen=True)
class SystemConfig:
    """Carrier/OFDM constants and scan geometry.

    ``spacing_m`` defaults to half the carrier wavelength and ``power`` to the
    number of subcarriers (so the per-subcarrier amplitude P/K is 1).  With
    unit-magnitude path attenuations, the per-sample per-path SNR in dB is
    -10*log10(P*noise_n0/K); see :func:`noise_n0_for_snr_db`.
    """

    carrier_hz: float = 28e9
    bandwidth_hz: float = 50e6
    num_subcarriers: int = 64
    num_positions: int = 32
    spacing_m: float | None = None
    power: float | None = None
    noise_n0: float = 0.0
    centered_subcarriers: bool = True

    def __post_init__(self):
        if self.spacing_m is None:
            object.__setattr__(self, "spacing_m", 0.5 * self.wavelength)
        if self.power is None:
            object.__setattr__(self, "power", float(self.num_subcarriers))
        if self.num_subcarriers < 1:
            raise ValueError("need at least one subcarrier")
        if self.num_positions < 2:
            raise ValueError("need at least two positions per scan axis")
        if self.spacing_m <= 0:
            raise ValueError("spacing must be positive")
        if self.power <= 0:
            raise ValueError("transmit power must be positive")
        if self.noise_n0 < 0:
            raise ValueError("noise parameter must be nonnegative")

    @property
    def wavelength(self) -> float:
        return SPEED_OF_LIGHT / self.carrier_hz

    @property
    def subcarrier_spacing(self) -> float:
        return self.bandwidth_hz / self.num_subcarriers

    @property
    def amplitude_scale(self) -> float:
        """Per-subcarrier signal amplitude P/K."""
        return self.power / self.num_subcarriers

    @property
    def noise_variance(self) -> float:
        """Complex variance P*N0/K of the demodulated noise."""
        return self.power * self.noise_n0 / self.num_subcarriers

    def subcarrier_frequencies(self) -> np.ndarray:
        """Frequencies f_k for k = 1..K, centered on the carrier by default."""
        k = np.arange(1, self.num_subcarriers + 1, dtype=float)
        if self.centered_subcarriers:
            offset = k - (self.num_subcarriers + 1) / 2.0
        else:
            offset = k - 1.0
        return self.carrier_hz + offset * self.subcarrier_spacing


def noise_n0_for_snr_db(snr_db: float, config: SystemConfig) -> float:
    """Noise parameter N0 such that -10*log10(P*N0/K) equals ``snr_db``."""
    return (config.num_subcarriers / config.power) * 10.0 ** (-snr_db / 10.0)


@dataclass(frozen=True)
class PathTruth:
    """One propagation path: initial-frame AoAs, delay, complex attenuation."""

    angles0: AnglePair
    tau: float
    upsilon: complex

    def __post_init__(self):
        if self.tau < 0:
            raise ValueError("path delay must be nonnegative")
        if abs(self.upsilon) == 0:
            raise ValueError("path attenuation must be nonzero")


@dataclass(frozen=True)
class Scene:
    """Ground-truth multi-path description tied to a system configuration."""

    paths: tuple[PathTruth, ...]
    config: SystemConfig

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        if not 1 <= len(self.paths) <= self.config.num_positions - 1:
            raise ValueError(
                f"path count must be in [1, {self.config.num_positions - 1}]"
            )

    @property
    def num_paths(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class ScanMeasurement:
    """Received samples over the stacked X-scan and Z-scan positions.

    Rows 0..M-1 of ``samples`` belong to the X-axis scan and rows M..2M-1 to
    the Z-axis scan; ``axis_split`` is M.  ``positions`` holds the plate-frame
    coordinates of each row.
    """

    positions: np.ndarray
    samples: np.ndarray
    axis_split: int
    config: SystemConfig

    @property
    def x_samples(self) -> np.ndarray:
        return self.samples[: self.axis_split]

    @property
    def z_samples(self) -> np.ndarray:
        return self.samples[self.axis_split :]


def scan_positions(config: SystemConfig) -> np.ndarray:
    """The 2M scan positions: M along local X then M along local Z."""
    steps = np.arange(config.num_positions) * config.spacing_m
    pos = np.zeros((2 * config.num_positions, 3))
    pos[: config.num_positions, 0] = steps
    pos[config.num_positions :, 2] = steps
    return pos


def propagation_delta(dir_local, position) -> float:
    """Extra propagation distance a.T @ p for an on-plate position (y = 0)."""
    return float(np.dot(dir_local.as_array(), np.asarray(position, dtype=float)))


def _local_directions(scene: Scene, orient: Orientation) -> np.ndarray:
    """Plate-frame direction vectors of all paths, shape (L, 3)."""
    initial = np.stack([unit_direction(p.angles0).as_array() for p in scene.paths])
    return initial @ rotation_matrix(orient)


def channel_response(scene: Scene, orient: Orientation, position, subcarrier: int) -> complex:
    """Overall channel at one position on one subcarrier (1-based index)."""
    if not 1 <= subcarrier <= scene.config.num_subcarriers:
        raise ValueError(f"subcarrier index must be in [1, {scene.config.num_subcarriers}]")
    freq = scene.config.subcarrier_frequencies()[subcarrier - 1]
    pos = np.asarray(position, dtype=float)
    local = _local_directions(scene, orient)
    total = 0.0 + 0.0j
    for path, a in zip(scene.paths, local):
        rho = float(a @ pos)
        total += path.upsilon * np.exp(-2j * np.pi * freq * (path.tau + rho / SPEED_OF_LIGHT))
    return complex(total)


def synthesize_scan(scene: Scene, orient: Orientation, rng_seed) -> ScanMeasurement:
    """Simulate one full two-axis scan of the scene under the given orientation.

    Samples follow (P/K) * channel + noise with noise variance P*N0/K per
    complex sample, drawn i.i.d. from the generator seeded by ``rng_seed``
    (anything accepted by ``numpy.random.default_rng``).  The same seed
    reproduces the measurement bit for bit.
    """
    config = scene.config
    positions = scan_positions(config)
    local = _local_directions(scene, orient)
    if np.any(local[:, 1] <= 0.0):
        warnings.warn(
            "some paths arrive from the back side of the plate",
            FrontSideViolationWarning,
            stacklevel=2,
        )
    tau = np.array([p.tau for p in scene.paths])
    upsilon = np.array([p.upsilon for p in scene.paths], dtype=complex)
    delays = tau[None, :] + (positions @ local.T) / SPEED_OF_LIGHT
    samples = kernels.noiseless_samples(
        np.ascontiguousarray(delays),
        np.ascontiguousarray(upsilon),
        config.subcarrier_frequencies(),
        config.amplitude_scale,
    )
    if config.noise_n0 > 0:
        rng = np.random.default_rng(rng_seed)
        sigma = math.sqrt(config.noise_variance / 2.0)
        shape = samples.shape
        samples = samples + sigma * (
            rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        )
    return ScanMeasurement(
        positions=positions,
        samples=np.ascontiguousarray(samples),
        axis_split=config.num_positions,
        config=config,
    )
