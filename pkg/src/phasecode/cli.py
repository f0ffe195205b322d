"""Command-line front end.

Exit codes are a stable contract: 0 success, 1 verification failed,
2 usage error, 3 I/O or format error. Results go to standard output as
key=value lines; diagnostics go to standard error.
"""

import argparse
import sys

from .codec_improved import derive_params
from .errors import (
    BadLengthError,
    EmptyMessageError,
    IoFailureError,
    MalformedContainerError,
    MessageTooLargeError,
    NonByteCharacterError,
    UnsupportedFormatError,
)
from .experiments import (
    FIXTURE_SEED,
    Codec,
    ber_sweep,
    embed_message,
    extract_message,
    make_fixture,
    phase_dump,
    write_phase_csv,
    write_sweep_csv,
)
from .metrics import verify
from .wav_io import read_wav, write_wav

_USAGE_ERRORS = (
    EmptyMessageError,
    NonByteCharacterError,
    BadLengthError,
    MessageTooLargeError,
    ValueError,
)
_FILE_ERRORS = (MalformedContainerError, UnsupportedFormatError, IoFailureError)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} is not a positive integer")
    return value


def _add_message_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--message", help="payload text (characters 0-255)")
    group.add_argument(
        "--message-file", help="file whose raw bytes are the payload"
    )


def _read_message(args) -> str:
    if args.message_file is not None:
        try:
            with open(args.message_file, "rb") as fh:
                return fh.read().decode("latin-1")
        except OSError as exc:
            raise IoFailureError(f"cannot read {args.message_file}: {exc}") from exc
    return args.message


def _cmd_embed(args) -> int:
    message = _read_message(args)
    cover = read_wav(args.in_path)
    params = derive_params(8 * len(message), len(cover))
    stego = embed_message(cover, message, args.codec)
    write_wav(args.out_path, stego)
    print(f"seg_len={params.seg_len}")
    print(f"seg_num={params.seg_num}")
    return 0


def _cmd_extract(args) -> int:
    stego = read_wav(args.in_path)
    text = extract_message(stego, 8 * args.chars, args.codec)
    print(f"message={text}")
    return 0


def _cmd_verify(args) -> int:
    message = _read_message(args)
    cover = read_wav(args.in_path)
    stego = embed_message(cover, message, args.codec)
    write_wav(args.out_path, stego)
    extracted = extract_message(read_wav(args.out_path), 8 * len(message), args.codec)
    report = verify(message, extracted)
    print(f"ber={report.bit_error_rate:.6f}")
    print(f"accuracy={'correct' if report.message_accuracy else 'incorrect'}")
    return 0 if report.message_accuracy else 1


def _cmd_sweep(args) -> int:
    cover = read_wav(args.in_path)
    records = ber_sweep(cover, args.max_chars, Codec.IMPROVED)
    records += ber_sweep(cover, args.max_chars, Codec.TRADITIONAL)
    write_sweep_csv(records, args.csv)
    print(f"rows={len(records)}")
    return 0


def _cmd_phase_dump(args) -> int:
    cover = read_wav(args.in_path)
    message = _read_message(args)
    records = phase_dump(cover, message, args.codec, mode=args.mode)
    write_phase_csv(records, args.csv)
    print(f"rows={len(records)}")
    return 0


def _cmd_make_fixture(args) -> int:
    clip = make_fixture(seconds=args.seconds, seed=args.seed)
    write_wav(args.out_path, clip)
    print(f"samples={len(clip)}")
    print(f"sample_rate={clip.sample_rate}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phasecode",
        description="Phase-coding audio steganography: embed, extract, and evaluate.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    embed = commands.add_parser("embed", help="hide a message in a WAV cover")
    embed.add_argument("--in", dest="in_path", required=True, help="cover WAV")
    embed.add_argument("--out", dest="out_path", required=True, help="stego WAV to write")
    _add_message_flags(embed)
    embed.add_argument(
        "--codec", choices=[c.value for c in Codec], default=Codec.IMPROVED.value
    )
    embed.set_defaults(handler=_cmd_embed)

    extract = commands.add_parser("extract", help="recover a message of known length")
    extract.add_argument("--in", dest="in_path", required=True, help="stego WAV")
    extract.add_argument(
        "--chars", type=_positive_int, required=True, help="message length in characters"
    )
    extract.add_argument(
        "--codec", choices=[c.value for c in Codec], default=Codec.IMPROVED.value
    )
    extract.set_defaults(handler=_cmd_extract)

    check = commands.add_parser("verify", help="embed, extract, and report BER")
    check.add_argument("--in", dest="in_path", required=True, help="cover WAV")
    check.add_argument("--out", dest="out_path", required=True, help="stego WAV to write")
    _add_message_flags(check)
    check.add_argument(
        "--codec", choices=[c.value for c in Codec], default=Codec.IMPROVED.value
    )
    check.set_defaults(handler=_cmd_verify)

    sweep = commands.add_parser(
        "sweep", help="BER vs message length for both codecs, written as CSV"
    )
    sweep.add_argument("--in", dest="in_path", required=True, help="cover WAV")
    sweep.add_argument("--max-chars", type=_positive_int, required=True)
    sweep.add_argument("--csv", required=True, help="output CSV path")
    sweep.set_defaults(handler=_cmd_sweep)

    dump = commands.add_parser(
        "phase-dump", help="cover vs stego phases per (segment, bin), as CSV"
    )
    dump.add_argument("--in", dest="in_path", required=True, help="cover WAV")
    _add_message_flags(dump)
    dump.add_argument(
        "--codec", choices=[c.value for c in Codec], default=Codec.IMPROVED.value
    )
    dump.add_argument("--csv", required=True, help="output CSV path")
    dump.add_argument("--mode", choices=["post", "pre"], default="post")
    dump.set_defaults(handler=_cmd_phase_dump)

    fixture = commands.add_parser(
        "make-fixture", help="write the deterministic synthetic cover"
    )
    fixture.add_argument("--out", dest="out_path", required=True, help="WAV to write")
    fixture.add_argument("--seconds", type=float, default=12.0)
    fixture.add_argument("--seed", type=int, default=FIXTURE_SEED)
    fixture.set_defaults(handler=_cmd_make_fixture)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _FILE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
