import contextlib

import numpy as np
import pytest

# A_f of the four-variable worked example, coordinate 0 first
EXAMPLE_ANF = "1001011010101000"

_criteria: list[tuple[str, bool, str]] = []


def popcount(i: int) -> int:
    return bin(i).count("1")


def random_words(rng: np.random.Generator, rows: int, n: int) -> np.ndarray:
    """Random (rows, words) truth tables with zero padding for n < 6."""
    w = 1 if n < 6 else 1 << (n - 6)
    block = rng.integers(0, 2**64, size=(rows, w), dtype=np.uint64)
    if n < 6:
        block &= np.uint64((1 << (1 << n)) - 1)
    return block


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def criterion():
    """Record one acceptance criterion; the summary prints a pass/fail line each."""

    @contextlib.contextmanager
    def record(label: str):
        notes: list[str] = []
        try:
            yield notes
        except BaseException:
            _criteria.append((label, False, "; ".join(notes)))
            raise
        _criteria.append((label, True, "; ".join(notes)))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, notes in _criteria:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        if notes:
            line += f"  ({notes})"
        terminalreporter.write_line(line)
