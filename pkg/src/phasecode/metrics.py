"""Bit error rate and message accuracy between original and extracted text."""

from dataclasses import dataclass

from .errors import EmptyMessageError


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of comparing an extracted message against the original."""

    bit_error_rate: float
    message_accuracy: bool
    total_bits: int
    incorrect_bits: int


def _char_bits(text: str) -> str:
    return "".join(format(ord(ch), "08b") for ch in text)


def verify(original: str, extracted: str) -> VerificationReport:
    """Compare bit strings positionally over their common prefix.

    The denominator is always the original's bit count, so an extracted
    message shorter than the original contributes no errors beyond its own
    length and can never reach BER 1.0. That bias is kept deliberately: it
    matches how the sweep numbers are defined.
    """
    if not original:
        raise EmptyMessageError("original message must not be empty")
    original_bits = _char_bits(original)
    extracted_bits = _char_bits(extracted)
    incorrect = sum(a != b for a, b in zip(original_bits, extracted_bits))
    return VerificationReport(
        bit_error_rate=incorrect / len(original_bits),
        message_accuracy=original == extracted,
        total_bits=len(original_bits),
        incorrect_bits=incorrect,
    )
