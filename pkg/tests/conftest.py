import numpy as np
import pytest

import phasecode as pc

_ACCEPTANCE_RESULTS = []


def noise_clip(seconds: float, seed: int, scale: float = 3000.0, rate: int = 44100) -> pc.AudioClip:
    """Small broadband cover for unit tests; cheaper than the full fixture."""
    rng = np.random.default_rng(seed)
    samples = np.clip(
        np.rint(rng.normal(0.0, scale, int(seconds * rate))), -32768, 32767
    ).astype(np.int16)
    return pc.AudioClip(samples, rate)


@pytest.fixture(scope="session")
def cover_12s() -> pc.AudioClip:
    return pc.make_fixture()


@pytest.fixture(scope="session")
def cover_1s() -> pc.AudioClip:
    return pc.make_fixture(seconds=1.0)


@pytest.fixture(scope="session")
def acceptance():
    """Record one pass/fail line per acceptance criterion, then assert it."""

    def record(number: int, description: str, passed: bool, detail: str = ""):
        _ACCEPTANCE_RESULTS.append((number, description, bool(passed), detail))
        assert passed, f"criterion {number} ({description}) failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, passed, detail in sorted(_ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        line = f"criterion {number}: {status} - {description}"
        if detail:
            line += f" [{detail}]"
        terminalreporter.write_line(line)
