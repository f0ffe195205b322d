"""Reading and writing 16-bit PCM RIFF/WAVE files.

Multi-channel input is reduced to the first channel; output is always mono.
Unknown chunks are skipped on read and never preserved on write.
"""

import struct
from dataclasses import dataclass

import numpy as np

from .errors import IoFailureError, MalformedContainerError, UnsupportedFormatError

_PCM_FORMAT = 1
_SAMPLE_MIN = -32768
_SAMPLE_MAX = 32767


@dataclass(frozen=True, eq=False)
class AudioClip:
    """Mono signed-16-bit sample sequence plus its sample rate in Hz."""

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self):
        samples = np.asarray(self.samples)
        if samples.ndim != 1:
            raise ValueError("samples must be one-dimensional")
        if samples.size == 0:
            samples = samples.astype(np.int16)
        elif samples.dtype == np.int16:
            samples = samples.copy()
        else:
            if not np.issubdtype(samples.dtype, np.integer):
                raise ValueError("samples must be integers")
            if samples.min() < _SAMPLE_MIN or samples.max() > _SAMPLE_MAX:
                raise ValueError("samples out of signed 16-bit range")
            samples = samples.astype(np.int16)
        samples.flags.writeable = False
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "sample_rate", int(self.sample_rate))
        if self.sample_rate <= 0:
            raise ValueError("sample_rate must be positive")

    def __len__(self) -> int:
        return self.samples.size

    def __eq__(self, other):
        if not isinstance(other, AudioClip):
            return NotImplemented
        return self.sample_rate == other.sample_rate and np.array_equal(
            self.samples, other.samples
        )

    @property
    def duration(self) -> float:
        """Clip length in seconds."""
        return self.samples.size / self.sample_rate


def read_wav(path) -> AudioClip:
    """Read a 16-bit PCM WAV file, keeping only channel 0."""
    try:
        with open(path, "rb") as fh:
            blob = fh.read()
    except OSError as exc:
        raise IoFailureError(f"cannot read {path}: {exc}") from exc
    return decode_wav(blob)


def decode_wav(blob: bytes) -> AudioClip:
    """Decode an in-memory RIFF/WAVE byte string."""
    if len(blob) < 12 or blob[:4] != b"RIFF" or blob[8:12] != b"WAVE":
        raise MalformedContainerError("not a RIFF/WAVE container")

    fmt_body = None
    data_body = None
    pos = 12
    while pos < len(blob):
        if len(blob) - pos < 8:
            raise MalformedContainerError("truncated chunk header")
        chunk_id = blob[pos : pos + 4]
        (size,) = struct.unpack_from("<I", blob, pos + 4)
        pos += 8
        if size > len(blob) - pos:
            raise MalformedContainerError(f"truncated {chunk_id!r} chunk")
        body = blob[pos : pos + size]
        pos += size + (size & 1)  # chunks are word-aligned
        if chunk_id == b"fmt " and fmt_body is None:
            fmt_body = body
        elif chunk_id == b"data" and data_body is None:
            data_body = body

    if fmt_body is None or data_body is None:
        raise MalformedContainerError("missing fmt or data chunk")
    if len(fmt_body) < 16:
        raise MalformedContainerError("fmt chunk too short")

    audio_format, channels, sample_rate, _, block_align, bits = struct.unpack_from(
        "<HHIIHH", fmt_body
    )
    if audio_format != _PCM_FORMAT:
        raise UnsupportedFormatError(f"format code {audio_format}, expected integer PCM (1)")
    if bits != 16:
        raise UnsupportedFormatError(f"{bits}-bit samples, expected 16")
    if channels < 1:
        raise MalformedContainerError("fmt chunk declares zero channels")
    if sample_rate == 0:
        raise MalformedContainerError("fmt chunk declares zero sample rate")
    if block_align != 2 * channels:
        raise MalformedContainerError("block alignment inconsistent with 16-bit frames")
    if len(data_body) % block_align:
        raise MalformedContainerError("data chunk length inconsistent with frame size")

    frames = np.frombuffer(data_body, dtype="<i2").reshape(-1, channels)
    return AudioClip(frames[:, 0].copy(), sample_rate)


def write_wav(path, clip: AudioClip) -> None:
    """Write a mono 16-bit PCM WAV file; read_wav(write_wav(x)) == x bit-exactly."""
    payload = clip.samples.astype("<i2").tobytes()
    header = struct.pack(
        "<4sI4s4sIHHIIHH4sI",
        b"RIFF",
        36 + len(payload),
        b"WAVE",
        b"fmt ",
        16,
        _PCM_FORMAT,
        1,
        clip.sample_rate,
        clip.sample_rate * 2,
        2,
        16,
        b"data",
        len(payload),
    )
    try:
        with open(path, "wb") as fh:
            fh.write(header)
            fh.write(payload)
    except OSError as exc:
        raise IoFailureError(f"cannot write {path}: {exc}") from exc
