"""Phase-coding audio steganography.

Hides text in the phase spectrum of 16-bit PCM audio. Two codecs are
provided: a distributed codec that writes each segment's share of the bits
into its own sub-Nyquist band, and the classic baseline that writes all
bits into segment 0 and propagates phase differences. An experiment module
measures bit error rate against message length and dumps cover/stego phase
comparisons.
"""

from .bits import bits_to_phases, bits_to_text, phases_to_bits, text_to_bits
from .codec_improved import (
    StegoParams,
    derive_params,
    embed,
    extract,
    segment_bit_range,
)
from .codec_traditional import embed_traditional, extract_traditional
from .dft import Spectrum, forward, inverse
from .errors import (
    BadLengthError,
    EmptyMessageError,
    IoFailureError,
    MalformedContainerError,
    MessageTooLargeError,
    NonByteCharacterError,
    PhaseCodeError,
    UnsupportedFormatError,
)
from .experiments import (
    Codec,
    PhaseRecord,
    SweepRecord,
    ber_sweep,
    embed_message,
    extract_message,
    make_fixture,
    phase_dump,
    write_phase_csv,
    write_sweep_csv,
)
from .metrics import VerificationReport, verify
from .wav_io import AudioClip, read_wav, write_wav

__version__ = "0.1.0"

__all__ = [
    "AudioClip",
    "BadLengthError",
    "Codec",
    "EmptyMessageError",
    "IoFailureError",
    "MalformedContainerError",
    "MessageTooLargeError",
    "NonByteCharacterError",
    "PhaseCodeError",
    "PhaseRecord",
    "Spectrum",
    "StegoParams",
    "SweepRecord",
    "UnsupportedFormatError",
    "VerificationReport",
    "ber_sweep",
    "bits_to_phases",
    "bits_to_text",
    "derive_params",
    "embed",
    "embed_message",
    "embed_traditional",
    "extract",
    "extract_message",
    "extract_traditional",
    "forward",
    "inverse",
    "make_fixture",
    "phase_dump",
    "phases_to_bits",
    "read_wav",
    "segment_bit_range",
    "text_to_bits",
    "verify",
    "write_phase_csv",
    "write_sweep_csv",
    "write_wav",
]
