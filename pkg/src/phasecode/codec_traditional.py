"""Classic phase-coding baseline.

All message bits go into segment 0's phases; every later segment is rebuilt
from its predecessor plus the cover's inter-segment phase differences, so
the original deltas are preserved while the segment-0 edit smears across
the whole file. Shares its segment geometry with the distributed codec so
the two are directly comparable.

The embedding band defaults to the same sub-Nyquist run the distributed
codec uses; `band_end` moves it (exclusive end bin) for experiments with
low-frequency placement.
"""

import numpy as np

from .bits import bits_to_phases, bits_to_text, phases_to_bits, text_to_bits
from .codec_improved import StegoParams, _segment_matrix, derive_params, synthesize
from .dft import fft_rows, polar, wrap_phase
from .errors import BadLengthError, MessageTooLargeError
from .wav_io import AudioClip


def _band(params: StegoParams, msg_len_bits: int, band_end) -> tuple[int, int]:
    hi = params.seg_mid if band_end is None else int(band_end)
    lo = hi - msg_len_bits
    if lo < 1 or hi > params.seg_mid:
        raise MessageTooLargeError(
            f"{msg_len_bits} bits do not fit in bins [1, {params.seg_mid}) ending at {hi}"
        )
    return lo, hi


def embed_traditional_spectra(samples, message: str, band_end: int | None = None):
    """Per-segment spectra before/after baseline embedding (no reconstruction)."""
    message_bits = text_to_bits(message)
    params = derive_params(message_bits.size, len(samples))
    lo, hi = _band(params, message_bits.size, band_end)
    magnitudes, cover_phases = polar(fft_rows(_segment_matrix(samples, params)))

    symbols = bits_to_phases(message_bits)
    head = cover_phases[0].copy()
    head[lo:hi] = symbols
    head[params.seg_len - hi + 1 : params.seg_len - lo + 1] = -symbols[::-1]

    stego_phases = cover_phases.copy()
    stego_phases[0] = head
    if params.seg_num > 1:
        # accumulating cover deltas segment by segment telescopes to a fixed
        # per-bin offset: phi'_i = phi_i + (phi'_0 - phi_0), wrapped
        stego_phases[1:] = wrap_phase(cover_phases[1:] + (head - cover_phases[0]))
    return params, magnitudes, cover_phases, stego_phases


def embed_traditional(cover: AudioClip, message: str, band_end: int | None = None) -> AudioClip:
    """Hide `message` with the baseline scheme; output spans whole segments."""
    _, magnitudes, _, stego_phases = embed_traditional_spectra(
        cover.samples, message, band_end
    )
    return synthesize(magnitudes, stego_phases, cover.sample_rate)


def extract_traditional(
    stego: AudioClip, msg_len_bits: int, band_end: int | None = None
) -> str:
    """Read the message back from segment 0 only."""
    if msg_len_bits < 8 or msg_len_bits % 8:
        raise BadLengthError(f"msg_len_bits {msg_len_bits} is not a positive multiple of 8")
    params = derive_params(msg_len_bits, len(stego.samples))
    lo, hi = _band(params, msg_len_bits, band_end)
    head = np.zeros(params.seg_len, dtype=np.float64)
    available = min(len(stego.samples), params.seg_len)
    head[:available] = stego.samples[:available]
    _, phases = polar(fft_rows(head[np.newaxis, :]))
    return bits_to_text(phases_to_bits(phases[0, lo:hi]))
