"""Distributed mid-band phase codec.

The cover is zero-padded to whole segments, each segment is transformed
independently, and the message bits are spread over segments by integer
division. Each segment's share of the bits is written as phase symbols into
the bins directly below the Nyquist index, with a mirrored copy above it so
the spectrum stays conjugate-symmetric. Magnitudes are never touched and no
phase differences are propagated between segments, so every segment can be
reconstructed on its own.
"""

from dataclasses import dataclass

import numpy as np

from .bits import bits_to_phases, bits_to_text, phases_to_bits, text_to_bits
from .dft import fft_rows, ifft_rows, polar
from .errors import BadLengthError, EmptyMessageError, MessageTooLargeError
from .wav_io import AudioClip

# guard against absurd per-segment transforms
SEG_LEN_LIMIT = 1 << 24

SAMPLE_MIN = -32768
SAMPLE_MAX = 32767


@dataclass(frozen=True)
class StegoParams:
    """Segment geometry derived from the message length and cover length."""

    msg_len_bits: int
    seg_len: int
    seg_num: int

    @property
    def seg_mid(self) -> int:
        return self.seg_len // 2

    @property
    def padded_len(self) -> int:
        return self.seg_num * self.seg_len


def derive_params(msg_len_bits: int, cover_len: int) -> StegoParams:
    """Segment length doubles the next power of two above twice the bit count.

    That keeps every possible per-segment payload strictly inside the half
    spectrum, so the DC and Nyquist bins are never reachable.
    """
    if msg_len_bits < 1:
        raise EmptyMessageError("message must contain at least one bit")
    seg_len = 1 << ((2 * msg_len_bits - 1).bit_length() + 1)
    if seg_len > SEG_LEN_LIMIT:
        raise MessageTooLargeError(
            f"message of {msg_len_bits} bits needs segment length {seg_len} > {SEG_LEN_LIMIT}"
        )
    seg_num = max(1, -(-cover_len // seg_len))
    return StegoParams(msg_len_bits, seg_len, seg_num)


def segment_bit_range(index: int, params: StegoParams) -> tuple[int, int]:
    """Half-open bit range [start, end) carried by segment `index`.

    The integer-division scheme partitions [0, msg_len_bits) across segments
    in order; ranges may be empty when there are more segments than bits.
    """
    start = index * params.msg_len_bits // params.seg_num
    end = (index + 1) * params.msg_len_bits // params.seg_num
    return start, end


def _segment_matrix(samples, params: StegoParams) -> np.ndarray:
    """Zero-pad to whole segments and reshape to (seg_num, seg_len)."""
    data = np.zeros(params.padded_len, dtype=np.float64)
    data[: len(samples)] = samples
    return data.reshape(params.seg_num, params.seg_len)


def _write_symbols(phases: np.ndarray, symbols: np.ndarray, params: StegoParams) -> None:
    mid = params.seg_mid
    for i in range(params.seg_num):
        start, end = segment_bit_range(i, params)
        if end == start:
            continue
        run = symbols[start:end]
        phases[i, mid - run.size : mid] = run
        phases[i, mid + 1 : mid + 1 + run.size] = -run[::-1]


def embed_spectra(samples, message: str):
    """Per-segment spectra before and after embedding, without reconstruction.

    Returns (params, magnitudes, cover_phases, stego_phases); the phase
    matrices are what the phase-comparison experiments plot.
    """
    message_bits = text_to_bits(message)
    params = derive_params(message_bits.size, len(samples))
    magnitudes, cover_phases = polar(fft_rows(_segment_matrix(samples, params)))
    stego_phases = cover_phases.copy()
    _write_symbols(stego_phases, bits_to_phases(message_bits), params)
    return params, magnitudes, cover_phases, stego_phases


def synthesize(magnitudes: np.ndarray, phases: np.ndarray, sample_rate: int) -> AudioClip:
    """Inverse-transform per-segment polar spectra into 16-bit audio.

    Samples are rounded to nearest and clamped to the 16-bit range.
    """
    rebuilt = ifft_rows(magnitudes * np.exp(1j * phases)).real.ravel()
    samples = np.clip(np.rint(rebuilt), SAMPLE_MIN, SAMPLE_MAX).astype(np.int16)
    return AudioClip(samples, sample_rate)


def embed(cover: AudioClip, message: str) -> AudioClip:
    """Hide `message` in the cover's mid-band phases.

    The output always spans whole segments, so it may be slightly longer
    than the cover (trailing zero padding is kept).
    """
    _, magnitudes, _, stego_phases = embed_spectra(cover.samples, message)
    return synthesize(magnitudes, stego_phases, cover.sample_rate)


def extract(stego: AudioClip, msg_len_bits: int) -> str:
    """Recover a message of known bit length from stego audio.

    A wrong msg_len_bits yields garbage text, not an error: the geometry is
    recomputed from the stated length, so the bins read simply misalign.
    """
    if msg_len_bits < 8 or msg_len_bits % 8:
        raise BadLengthError(f"msg_len_bits {msg_len_bits} is not a positive multiple of 8")
    params = derive_params(msg_len_bits, len(stego.samples))
    _, phases = polar(fft_rows(_segment_matrix(stego.samples, params)))
    mid = params.seg_mid
    pieces = []
    for i in range(params.seg_num):
        start, end = segment_bit_range(i, params)
        if end > start:
            pieces.append(phases_to_bits(phases[i, mid - (end - start) : mid]))
    message_bits = np.concatenate(pieces)[:msg_len_bits]
    return bits_to_text(message_bits)
