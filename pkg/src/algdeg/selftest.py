"""Embedded golden fixtures and the small exhaustive sweep behind ``algdeg selftest``."""
from __future__ import annotations

from typing import Callable, Iterable

import numpy as np

from . import cube
from .anf import ByteVector, anft_bytes_inplace, anft_words_inplace, mobius_oracle_batch
from .bitpack import from_text, pack_bits, serial_number
from .degree import (Algorithm, degree_wlo_bitwise, degree_wlo_bytewise, pipeline_batch,
                     search_batch)
from .distribution import count_exact_int, probability

WLO_GOLDEN = {
    1: [0, 1],
    2: [0, 1, 2, 3],
    3: [0, 1, 2, 4, 3, 5, 6, 7],
    4: [0, 1, 2, 4, 8, 3, 5, 6, 9, 10, 12, 7, 11, 13, 14, 15],
    5: [0, 1, 2, 4, 8, 16, 3, 5, 6, 9, 10, 12, 17, 18, 20, 24, 7, 11, 13, 14, 19, 21, 22, 25,
        26, 28, 15, 23, 27, 29, 30, 31],
}

MASK_SERIALS = {
    1: [2, 1],
    2: [8, 6, 1],
    3: [128, 104, 22, 1],
    4: [32768, 26752, 5736, 278, 1],
    5: [2147483648, 1753251840, 375941248, 18224744, 65814, 1],
}

# p(n, k) for k = n-3 .. n, printed to 10 decimals
DEGREE_PROBABILITIES = {
    3: [0.00390625, 0.0546875, 0.4375, 0.5],
    4: [0.0004577637, 0.0307617187, 0.46875, 0.5],
    5: [0.0000152439, 0.0156097412, 0.484375, 0.5],
    6: [0.0000002384, 0.0078122616, 0.4921875, 0.5],
    7: [0.0000000019, 0.0039062481, 0.49609375, 0.5],
    8: [0.0, 0.0019531250, 0.498046875, 0.5],
    9: [0.0, 0.0009765625, 0.4990234375, 0.5],
    10: [0.0, 0.0004882812, 0.4995117187, 0.5],
}

WORKED_EXAMPLE_ANF = "1001011010101000"


def check_wlo() -> str | None:
    for n, expected in WLO_GOLDEN.items():
        got = cube.generate_wlo(n).order.tolist()
        if got != expected:
            return f"n={n}: {got}"
    return None


def check_masks() -> str | None:
    for n, expected in MASK_SERIALS.items():
        got = [int(serial_number(m)) for m in cube.generate_masks(n).masks]
        if got != expected:
            return f"n={n}: {got}"
    return None


def check_worked_example() -> str | None:
    anf = from_text(WORKED_EXAMPLE_ANF, 4)
    raw = np.frombuffer(WORKED_EXAMPLE_ANF.encode(), np.uint8) - ord("0")
    byte = degree_wlo_bytewise(ByteVector(4, raw), cube.generate_wlo(4))
    bit = degree_wlo_bitwise(anf, cube.generate_masks(4))
    if (byte.degree, byte.steps) != (2, 6):
        return f"byte-wise WLO gave degree {byte.degree} in {byte.steps} checks"
    if (bit.degree, bit.steps) != (2, 3):
        return f"bitwise WLO gave degree {bit.degree} in {bit.steps} steps"
    return None


def check_probabilities() -> str | None:
    for n, row in DEGREE_PROBABILITIES.items():
        for k, expected in zip(range(n - 3, n + 1), row):
            if abs(probability(n, k) - expected) >= 1e-10:
                return f"p({n},{k}) = {probability(n, k)!r}"
    return None


def all_truth_tables(n: int) -> np.ndarray:
    """Every truth table of n <= 4 variables as a (2^2^n, words) block."""
    size = 1 << n
    values = np.arange(1 << size, dtype=np.uint64)
    bits = ((values[:, None] >> np.arange(size, dtype=np.uint64)) & np.uint64(1)).astype(np.uint8)
    return pack_bits(bits, n)


def check_exhaustive(max_n: int = 4) -> str | None:
    from .bitpack import unpack_bits

    for n in range(1, max_n + 1):
        tt = all_truth_tables(n)
        bytes_tt = unpack_bits(tt, n)
        oracle = mobius_oracle_batch(bytes_tt, n)
        weights = cube.coordinate_weights(n)
        expected = np.where(oracle.astype(bool), weights, -1).max(axis=1)
        anf_bytes = anft_bytes_inplace(bytes_tt.copy(), n)
        anf_words = anft_words_inplace(tt.copy(), n)
        if not np.array_equal(anf_bytes, oracle):
            return f"n={n}: byte-wise ANFT differs from the submask oracle"
        if not np.array_equal(unpack_bits(anf_words, n), oracle):
            return f"n={n}: bitwise ANFT differs from the submask oracle"
        for alg in (Algorithm.ES, Algorithm.WLO_BYTE, Algorithm.WLO_BIT_MASK, Algorithm.WLO_BIT_PROBE):
            data = anf_bytes if alg.bytewise else anf_words
            got = search_batch(data, n, alg).degrees
            if not np.array_equal(got, expected):
                return f"n={n}: {alg.value} disagrees with the oracle"
        short = pipeline_batch(tt, n, Algorithm.WLO_BIT_MASK, parity_shortcut=True).degrees
        if not np.array_equal(short, expected):
            return f"n={n}: parity shortcut pipeline disagrees with the oracle"
        census = [int((expected == k).sum()) for k in range(n + 1)]
        if census != [count_exact_int(n, k) for k in range(n + 1)] or int((expected < 0).sum()) != 1:
            return f"n={n}: degree census {census} does not match the exact counts"
    return None


SUITES: tuple[tuple[str, Callable[[], str | None]], ...] = (
    ("wlo-sequences", check_wlo),
    ("mask-serials", check_masks),
    ("worked-example", check_worked_example),
    ("degree-probabilities", check_probabilities),
    ("exhaustive-n<=4", check_exhaustive),
)


def run_selftest(emit: Callable[[str], None] = print,
                 suites: Iterable = SUITES) -> tuple[bool, str | None]:
    """Run every suite, reporting one line each. Returns (all passed, first failing suite)."""
    first_failure = None
    for name, check in suites:
        try:
            problem = check()
        except Exception as exc:  # a crashing fixture is a failing fixture
            problem = f"{type(exc).__name__}: {exc}"
        if problem is None:
            emit(f"PASS {name}")
        else:
            emit(f"FAIL {name}: {problem}")
            first_failure = first_failure or name
    return first_failure is None, first_failure
