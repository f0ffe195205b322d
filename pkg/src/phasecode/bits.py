"""Conversions between text, message bits, and phase symbols.

Characters are single bytes (code points 0-255), packed MSB-first, 8 bits
per character. Bit 0 maps to +pi/2 and bit 1 to -pi/2; extraction reads the
mapping back with a sign threshold (negative phase means bit 1).
"""

import numpy as np

from .errors import BadLengthError, EmptyMessageError, NonByteCharacterError

PHASE_FOR_ZERO = np.pi / 2
PHASE_FOR_ONE = -np.pi / 2


def text_to_bits(message: str) -> np.ndarray:
    """MSB-first 8-bit encoding of each character, concatenated."""
    if not message:
        raise EmptyMessageError("message must not be empty")
    try:
        raw = message.encode("latin-1")
    except UnicodeEncodeError as exc:
        raise NonByteCharacterError(
            "message characters must have code points 0-255"
        ) from exc
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8))


def bits_to_text(bits) -> str:
    """Inverse of text_to_bits: group bits 8 at a time, MSB first."""
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.size == 0 or bits.size % 8:
        raise BadLengthError(f"bit count {bits.size} is not a positive multiple of 8")
    return np.packbits(bits).tobytes().decode("latin-1")


def bits_to_phases(bits) -> np.ndarray:
    """Map each bit to its phase symbol: 0 -> +pi/2, 1 -> -pi/2."""
    return np.where(np.asarray(bits) == 0, PHASE_FOR_ZERO, PHASE_FOR_ONE)


def phases_to_bits(phases) -> np.ndarray:
    """Sign-threshold decode: negative phase reads as bit 1."""
    return (np.asarray(phases) < 0).astype(np.uint8)
