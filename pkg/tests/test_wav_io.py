import struct

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phasecode.errors import IoFailureError, MalformedContainerError, UnsupportedFormatError
from phasecode.wav_io import AudioClip, decode_wav, read_wav, write_wav


def wav_bytes(frames, channels=1, rate=8000, bits=16, fmt=1, extra_chunks=(), data_override=None):
    """Hand-assemble a RIFF/WAVE byte string for fixtures."""
    if data_override is None:
        data = b"".join(
            struct.pack("<" + "h" * channels, *frame) for frame in frames
        )
    else:
        data = data_override
    block_align = channels * bits // 8
    fmt_chunk = struct.pack(
        "<4sIHHIIHH", b"fmt ", 16, fmt, channels, rate, rate * block_align, block_align, bits
    )
    body = fmt_chunk
    for cid, payload in extra_chunks:
        body += struct.pack("<4sI", cid, len(payload)) + payload
        if len(payload) & 1:
            body += b"\x00"
    body += struct.pack("<4sI", b"data", len(data)) + data
    return struct.pack("<4sI4s", b"RIFF", 4 + len(body), b"WAVE") + body


def test_reads_mono_samples_identically(tmp_path):
    blob = wav_bytes([(0,), (100,), (-100,), (32767,)])
    clip = decode_wav(blob)
    assert clip.samples.tolist() == [0, 100, -100, 32767]
    assert clip.sample_rate == 8000


def test_stereo_keeps_first_channel_only():
    clip = decode_wav(wav_bytes([(1, 9), (2, 8)], channels=2))
    assert clip.samples.tolist() == [1, 2]


def test_8bit_pcm_rejected():
    blob = wav_bytes([], data_override=b"\x00\x01", bits=8)
    with pytest.raises(UnsupportedFormatError):
        decode_wav(blob)


def test_float_format_rejected():
    with pytest.raises(UnsupportedFormatError):
        decode_wav(wav_bytes([(1,)], fmt=3))


def test_not_riff_rejected():
    with pytest.raises(MalformedContainerError):
        decode_wav(b"OggS" + b"\x00" * 40)


def test_truncated_data_chunk_rejected():
    blob = wav_bytes([(1,), (2,)])
    with pytest.raises(MalformedContainerError):
        decode_wav(blob[:-2])


def test_odd_data_length_rejected():
    blob = wav_bytes([], data_override=b"\x00\x01\x02")
    with pytest.raises(MalformedContainerError):
        decode_wav(blob)


def test_missing_data_chunk_rejected():
    fmt_only = wav_bytes([])[: 12 + 8 + 16]
    blob = struct.pack("<4sI4s", b"RIFF", len(fmt_only) - 8, b"WAVE") + fmt_only[12:]
    with pytest.raises(MalformedContainerError):
        decode_wav(blob)


def test_unknown_chunks_are_skipped():
    blob = wav_bytes([(7,)], extra_chunks=((b"LIST", b"junk!"), (b"cue ", b"x")))
    assert decode_wav(blob).samples.tolist() == [7]


def test_missing_file_raises_io_failure(tmp_path):
    with pytest.raises(IoFailureError):
        read_wav(tmp_path / "absent.wav")


def test_write_emits_little_endian_data(tmp_path):
    path = tmp_path / "three.wav"
    write_wav(path, AudioClip(np.array([0, 1, -1], dtype=np.int16), 8000))
    blob = path.read_bytes()
    assert blob[-6:] == b"\x00\x00\x01\x00\xff\xff"


def test_write_header_declares_mono_16bit(tmp_path):
    path = tmp_path / "hdr.wav"
    write_wav(path, AudioClip(np.array([5], dtype=np.int16), 44100))
    blob = path.read_bytes()
    fmt, channels, rate, _, block_align, bits = struct.unpack_from("<HHIIHH", blob, 20)
    assert (fmt, channels, rate, block_align, bits) == (1, 1, 44100, 2, 16)
    assert blob[:4] == b"RIFF" and blob[8:12] == b"WAVE"


@settings(max_examples=60, deadline=None)
@given(
    samples=st.lists(st.integers(-32768, 32767), max_size=64),
    rate=st.integers(1, 192000),
)
def test_roundtrip_identity_property(tmp_path_factory, samples, rate):
    path = tmp_path_factory.getbasetemp() / "prop.wav"
    clip = AudioClip(np.array(samples, dtype=np.int16), rate)
    write_wav(path, clip)
    assert read_wav(path) == clip


def test_multichannel_roundtrip_against_hand_built_files():
    rng = np.random.default_rng(11)
    for channels in (2, 3, 4):
        frames = [tuple(rng.integers(-32768, 32768, channels)) for _ in range(10)]
        clip = decode_wav(wav_bytes(frames, channels=channels))
        assert clip.samples.tolist() == [f[0] for f in frames]


def test_clip_rejects_out_of_range_and_bad_rate():
    with pytest.raises(ValueError):
        AudioClip(np.array([40000]), 8000)
    with pytest.raises(ValueError):
        AudioClip(np.array([0], dtype=np.int16), 0)
    with pytest.raises(ValueError):
        AudioClip(np.array([0.5]), 8000)


def test_clip_samples_are_immutable():
    clip = AudioClip(np.array([1, 2], dtype=np.int16), 8000)
    with pytest.raises(ValueError):
        clip.samples[0] = 9
