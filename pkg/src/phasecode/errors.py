"""Exception types shared across the package."""


class PhaseCodeError(Exception):
    """Base class for every error this package raises on purpose."""


class MalformedContainerError(PhaseCodeError):
    """File is not a RIFF/WAVE container, or a chunk is truncated/inconsistent."""


class UnsupportedFormatError(PhaseCodeError):
    """WAV file is valid but not 16-bit integer PCM."""


class IoFailureError(PhaseCodeError):
    """Filesystem-level read or write failure."""


class EmptyMessageError(PhaseCodeError):
    """Message payload contains no characters (or no bits)."""


class NonByteCharacterError(PhaseCodeError):
    """Message contains a character above code point 255."""


class BadLengthError(PhaseCodeError):
    """A length is invalid: non-power-of-two segment, or a bit count that is not a positive multiple of 8."""


class MessageTooLargeError(PhaseCodeError):
    """Message does not fit the codec's geometry or resource guard."""
