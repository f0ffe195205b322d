"""Evaluation harness: BER-vs-length sweeps and phase-comparison dumps.

Both experiments emit fixed-schema CSV so plots and golden-file tests can
be driven from the same bytes. The synthetic cover fixture lives here too,
since the experiments are defined against a deterministic cover.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import codec_improved, codec_traditional
from .dft import fft_rows, polar
from .metrics import verify
from .wav_io import AudioClip

SWEEP_CSV_HEADER = "codec,message_chars,message_bits,ber,accuracy"
PHASE_CSV_HEADER = "segment,bin,cover_phase,stego_phase"

FIXTURE_SEED = 1234
FIXTURE_RATE = 44100
FIXTURE_SECONDS = 12.0
_FIXTURE_TONES = (
    (220.0, 4000.0),
    (440.0, 3000.0),
    (880.0, 2500.0),
    (1320.0, 2000.0),
    (2500.0, 1500.0),
    (5000.0, 1200.0),
)
_FIXTURE_NOISE_SCALE = 2000.0


class Codec(str, Enum):
    IMPROVED = "improved"
    TRADITIONAL = "traditional"


_EMBED = {
    Codec.IMPROVED: codec_improved.embed,
    Codec.TRADITIONAL: codec_traditional.embed_traditional,
}
_EXTRACT = {
    Codec.IMPROVED: codec_improved.extract,
    Codec.TRADITIONAL: codec_traditional.extract_traditional,
}
_SPECTRA = {
    Codec.IMPROVED: codec_improved.embed_spectra,
    Codec.TRADITIONAL: codec_traditional.embed_traditional_spectra,
}


def embed_message(cover: AudioClip, message: str, codec=Codec.IMPROVED) -> AudioClip:
    """Embed with the selected codec."""
    return _EMBED[Codec(codec)](cover, message)


def extract_message(stego: AudioClip, msg_len_bits: int, codec=Codec.IMPROVED) -> str:
    """Extract with the selected codec."""
    return _EXTRACT[Codec(codec)](stego, msg_len_bits)


@dataclass(frozen=True)
class SweepRecord:
    """One BER measurement: one codec, one message length."""

    codec: Codec
    message_chars: int
    message_bits: int
    ber: float
    accuracy: bool


@dataclass(frozen=True)
class PhaseRecord:
    """Cover vs stego phase of one (segment, bin) cell, bins below Nyquist."""

    segment_index: int
    bin_index: int
    cover_phase: float
    stego_phase: float


def make_fixture(
    seconds: float = FIXTURE_SECONDS,
    sample_rate: int = FIXTURE_RATE,
    seed: int = FIXTURE_SEED,
) -> AudioClip:
    """Deterministic broadband cover: a tone stack plus seeded Gaussian noise."""
    count = int(round(seconds * sample_rate))
    t = np.arange(count) / sample_rate
    signal = np.zeros(count)
    for freq, amp in _FIXTURE_TONES:
        signal += amp * np.sin(2.0 * np.pi * freq * t)
    signal += np.random.default_rng(seed).normal(0.0, _FIXTURE_NOISE_SCALE, count)
    samples = np.clip(np.rint(signal), -32768, 32767).astype(np.int16)
    return AudioClip(samples, sample_rate)


def ber_sweep(cover: AudioClip, max_chars: int, codec) -> list[SweepRecord]:
    """Embed/extract/verify "t"*n for every n in 1..max_chars."""
    if not 1 <= max_chars <= 128:
        raise ValueError(f"max_chars {max_chars} outside 1..128")
    codec = Codec(codec)
    records = []
    for n in range(1, max_chars + 1):
        message = "t" * n
        stego = _EMBED[codec](cover, message)
        extracted = _EXTRACT[codec](stego, 8 * n)
        report = verify(message, extracted)
        records.append(
            SweepRecord(codec, n, 8 * n, report.bit_error_rate, report.message_accuracy)
        )
    return records


def phase_dump(
    cover: AudioClip, message: str, codec, mode: str = "post"
) -> list[PhaseRecord]:
    """Cover and stego phases for every (segment, bin) below the Nyquist index.

    mode "post" (default) re-transforms the reconstructed 16-bit audio, i.e.
    the phases a steganalyst would see; mode "pre" reports the phases the
    codec wrote, before quantisation.
    """
    if mode not in ("post", "pre"):
        raise ValueError(f"mode must be 'post' or 'pre', got {mode!r}")
    codec = Codec(codec)
    params, magnitudes, cover_phases, stego_phases = _SPECTRA[codec](
        cover.samples, message
    )
    if mode == "post":
        clip = codec_improved.synthesize(magnitudes, stego_phases, cover.sample_rate)
        segments = clip.samples.astype(np.float64).reshape(params.seg_num, params.seg_len)
        _, stego_phases = polar(fft_rows(segments))

    mid = params.seg_mid
    cover_half = cover_phases[:, :mid].tolist()
    stego_half = stego_phases[:, :mid].tolist()
    return [
        PhaseRecord(seg, idx, cover_row[idx], stego_row[idx])
        for seg, (cover_row, stego_row) in enumerate(zip(cover_half, stego_half))
        for idx in range(mid)
    ]


def write_sweep_csv(records, path) -> None:
    """Sweep rows with BER at 6 decimal places; accuracy as true/false."""
    with open(path, "w", newline="") as fh:
        fh.write(SWEEP_CSV_HEADER + "\n")
        for rec in records:
            fh.write(
                f"{Codec(rec.codec).value},{rec.message_chars},{rec.message_bits},"
                f"{rec.ber:.6f},{str(rec.accuracy).lower()}\n"
            )


def write_phase_csv(records, path) -> None:
    """Phase rows with 9 decimal places."""
    with open(path, "w", newline="") as fh:
        fh.write(PHASE_CSV_HEADER + "\n")
        for rec in records:
            fh.write(
                f"{rec.segment_index},{rec.bin_index},"
                f"{rec.cover_phase:.9f},{rec.stego_phase:.9f}\n"
            )
