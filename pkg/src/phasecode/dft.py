"""Radix-2 discrete Fourier transform with magnitude/phase decomposition.

Segment lengths are restricted to powers of two, which is all the codec
geometry ever produces. The transform is an iterative decimation-in-time
butterfly network, vectorised so that a whole (segments x length) matrix is
transformed per stage; the codecs lean on that for throughput.

Phase convention: principal values in (-pi, pi], with exact -pi folded to
+pi and the phase of a zero-magnitude bin defined as 0.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BadLengthError

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class Spectrum:
    """Polar form of one segment's DFT: bin magnitudes and phases."""

    magnitudes: np.ndarray
    phases: np.ndarray

    def __post_init__(self):
        if self.magnitudes.shape != self.phases.shape or self.magnitudes.ndim != 1:
            raise ValueError("magnitudes and phases must be 1-D arrays of equal length")

    def __len__(self) -> int:
        return self.magnitudes.size


def _check_length(length: int) -> None:
    if length < 2 or length & (length - 1):
        raise BadLengthError(f"segment length {length} is not a power of two >= 2")


@lru_cache(maxsize=None)
def _bit_reversal(length: int) -> np.ndarray:
    stages = length.bit_length() - 1
    forward = np.arange(length)
    reverse = np.zeros(length, dtype=np.intp)
    for _ in range(stages):
        reverse = (reverse << 1) | (forward & 1)
        forward >>= 1
    reverse.flags.writeable = False
    return reverse


@lru_cache(maxsize=None)
def _twiddles(half: int, sign: int) -> np.ndarray:
    factors = np.exp(sign * 1j * np.pi * np.arange(half) / half)
    factors.flags.writeable = False
    return factors


def _transform_rows(rows: np.ndarray, sign: int) -> np.ndarray:
    """Unnormalised DFT of every row; sign -1 is forward, +1 inverse."""
    count, length = rows.shape
    out = rows[:, _bit_reversal(length)].astype(np.complex128)
    half = 1
    while half < length:
        step = half * 2
        view = out.reshape(count, length // step, step)
        upper = view[:, :, half:]
        lower = view[:, :, :half]
        spun = upper.copy() if half == 1 else upper * _twiddles(half, sign)
        np.subtract(lower, spun, out=upper)
        np.add(lower, spun, out=lower)
        half = step
    return out


def fft_rows(segments: np.ndarray) -> np.ndarray:
    """Forward DFT of each row of a (segments, length) matrix."""
    segments = np.atleast_2d(np.asarray(segments))
    _check_length(segments.shape[1])
    return _transform_rows(segments, -1)


def ifft_rows(spectra: np.ndarray) -> np.ndarray:
    """Inverse DFT of each row, scaled by 1/length."""
    spectra = np.atleast_2d(np.asarray(spectra))
    _check_length(spectra.shape[1])
    out = _transform_rows(spectra, 1)
    out /= spectra.shape[1]
    return out


def polar(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split complex bins into (magnitudes, phases) under the package phase convention."""
    magnitudes = np.abs(values)
    phases = np.angle(values)
    phases[phases == -np.pi] = np.pi
    phases[magnitudes == 0.0] = 0.0
    return magnitudes, phases


def wrap_phase(values: np.ndarray) -> np.ndarray:
    """Reduce angles to the principal range (-pi, pi]."""
    return np.pi - np.mod(np.pi - np.asarray(values), TWO_PI)


def forward(segment) -> Spectrum:
    """Polar DFT of one real segment whose length is a power of two."""
    data = np.asarray(segment, dtype=np.float64)
    if data.ndim != 1:
        raise ValueError("segment must be one-dimensional")
    magnitudes, phases = polar(fft_rows(data[np.newaxis, :])[0])
    return Spectrum(magnitudes, phases)


def inverse(spectrum: Spectrum) -> np.ndarray:
    """Real part of the inverse DFT of a polar spectrum."""
    length = len(spectrum)
    _check_length(length)
    bins = spectrum.magnitudes * np.exp(1j * spectrum.phases)
    return ifft_rows(bins[np.newaxis, :])[0].real
