"""Algebraic degree searches over an ANF vector, and the TT -> degree pipeline.

Each search exists twice: a per-function version that walks the data one
probe (or one word) at a time and reports exact instrumentation counters, and
a ``*_batch`` version that runs the same search over a block of functions with
numpy. The batch versions return degrees as small integers with ``-1`` for
the zero function; the per-function versions return :data:`BOTTOM` instead.
"""
from __future__ import annotations

import bisect
import enum
import functools
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .anf import ByteVector, anft_bitwise, anft_bytes_inplace, anft_bytewise, anft_words_inplace, unpack
from .bitpack import PackedVector, parity, unpack_bits
from .cube import MaskSet, WloSequence, cached_masks, cached_wlo, coordinate_weights
from .errors import DomainError


@functools.total_ordering
class _Bottom:
    """Degree of the constant zero function; below every integer degree."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, (int, np.integer)):
            return True
        return NotImplemented

    def __hash__(self):
        return hash("algdeg.bottom")

    def __repr__(self):
        return "BOTTOM"

    def __str__(self):
        return "-inf"

    def __reduce__(self):
        return (_Bottom, ())


BOTTOM = _Bottom()
Degree = Union[int, _Bottom]
BOTTOM_CODE = -1


def degree_from_code(code: int) -> Degree:
    return BOTTOM if code < 0 else int(code)


def format_degree(d: Degree) -> str:
    return str(d)


class Algorithm(str, enum.Enum):
    ES = "ES"
    WLO_BYTE = "WLO_BYTE"
    WLO_BIT_MASK = "WLO_BIT_MASK"
    WLO_BIT_PROBE = "WLO_BIT_PROBE"
    PARITY_SHORTCUT = "PARITY_SHORTCUT"

    @property
    def bytewise(self) -> bool:
        return self in (Algorithm.ES, Algorithm.WLO_BYTE)


@dataclass(frozen=True)
class DegreeResult:
    degree: Degree
    steps: int
    algorithm: Algorithm
    word_ops: int = 0
    # coordinate whose coefficient decided the degree, when the search has one
    stop_coordinate: Optional[int] = None


def _check_n(a: int, b: int) -> None:
    if a != b:
        raise DomainError(f"dimension mismatch: vector n={a}, table n={b}")


def degree_es(anf: ByteVector) -> DegreeResult:
    """Scan every coefficient in index order, keeping the heaviest set one."""
    best: Degree = BOTTOM
    coord = None
    for i, a in enumerate(anf.values.tolist()):
        if a:
            w = i.bit_count()
            if best is BOTTOM or w > best:
                best, coord = w, i
    return DegreeResult(best, 1 << anf.n, Algorithm.ES, stop_coordinate=coord)


def _layer_at(seq: WloSequence, pos: int) -> int:
    return bisect.bisect_right(seq.layer_offsets, pos) - 1


def degree_wlo_bytewise(anf: ByteVector, seq: WloSequence) -> DegreeResult:
    """Probe coefficients along the WLO sequence from its end; stop at the first 1."""
    _check_n(anf.n, seq.n)
    order = seq.order
    values = anf.values
    last = (1 << anf.n) - 1
    for pos in range(last, -1, -1):
        c = int(order[pos])
        if values[c]:
            return DegreeResult(_layer_at(seq, pos), last + 1 - pos, Algorithm.WLO_BYTE,
                                stop_coordinate=c)
    return DegreeResult(BOTTOM, last + 1, Algorithm.WLO_BYTE)


def degree_wlo_bitwise(anf: PackedVector, masks: MaskSet) -> DegreeResult:
    """AND the ANF with masks n, n-1, ..., 0; the first nonzero conjunction wins.

    Each conjunction stops at its first nonzero word.
    """
    _check_n(anf.n, masks.n)
    a = anf.words.tolist()
    word_ops = 0
    steps = 0
    for k in range(masks.n, -1, -1):
        steps += 1
        for aw, mw in zip(a, masks.masks[k].words.tolist()):
            word_ops += 1
            if aw & mw:
                return DegreeResult(k, steps, Algorithm.WLO_BIT_MASK, word_ops=word_ops)
    return DegreeResult(BOTTOM, steps, Algorithm.WLO_BIT_MASK, word_ops=word_ops)


def degree_wlo_bitprobe(anf: PackedVector, seq: WloSequence) -> DegreeResult:
    """Same probe order as :func:`degree_wlo_bytewise`, one bit extraction per probe."""
    _check_n(anf.n, seq.n)
    order = seq.order
    words = anf.words
    last = (1 << anf.n) - 1
    for pos in range(last, -1, -1):
        c = int(order[pos])
        if (int(words[c >> 6]) >> (c & 63)) & 1:
            probes = last + 1 - pos
            return DegreeResult(_layer_at(seq, pos), probes, Algorithm.WLO_BIT_PROBE,
                                word_ops=probes, stop_coordinate=c)
    return DegreeResult(BOTTOM, last + 1, Algorithm.WLO_BIT_PROBE, word_ops=last + 1)


def search(anf, algorithm: Algorithm) -> DegreeResult:
    """Run one search on an ANF vector of the representation it expects."""
    if algorithm is Algorithm.ES:
        return degree_es(anf)
    if algorithm is Algorithm.WLO_BYTE:
        return degree_wlo_bytewise(anf, cached_wlo(anf.n))
    if algorithm is Algorithm.WLO_BIT_MASK:
        return degree_wlo_bitwise(anf, cached_masks(anf.n))
    if algorithm is Algorithm.WLO_BIT_PROBE:
        return degree_wlo_bitprobe(anf, cached_wlo(anf.n))
    raise DomainError(f"{algorithm} is not a search over the ANF")


def degree_pipeline(tt: PackedVector, algorithm: Algorithm = Algorithm.WLO_BIT_MASK,
                    parity_shortcut: bool = False) -> DegreeResult:
    """Degree of the function with truth table ``tt``.

    With ``parity_shortcut``, an odd-weight truth table returns degree n
    without computing the ANF. Byte-wise searches unpack and use the byte-wise
    transform; packed searches use the bitwise transform.
    """
    algorithm = Algorithm(algorithm)
    if parity_shortcut and parity(tt):
        return DegreeResult(tt.n, 0, Algorithm.PARITY_SHORTCUT)
    if algorithm.bytewise:
        return search(anft_bytewise(unpack(tt)), algorithm)
    return search(anft_bitwise(tt), algorithm)


# ---------------------------------------------------------------------------
# batch engine


@dataclass
class BatchResult:
    degrees: np.ndarray
    steps: np.ndarray
    word_ops: Optional[np.ndarray] = None
    shortcut: Optional[np.ndarray] = None

    def degree_list(self) -> list[Degree]:
        return [degree_from_code(int(c)) for c in self.degrees]


def es_batch(anf: np.ndarray, n: int) -> BatchResult:
    """ES over a (B, 2^n) byte block: max weight among set coefficients."""
    w1 = (coordinate_weights(n) + 1).astype(np.uint8)
    deg = (anf * w1).max(axis=1).astype(np.int16) - 1
    return BatchResult(deg, np.full(anf.shape[0], 1 << n, dtype=np.int64))


def _probe_batch(bit_at, rows: int, seq: WloSequence) -> BatchResult:
    size = 1 << seq.n
    layers = seq.layer_of_position()
    order = seq.order
    deg = np.full(rows, BOTTOM_CODE, dtype=np.int16)
    steps = np.zeros(rows, dtype=np.int64)
    pending = np.arange(rows)
    for pos in range(size - 1, -1, -1):
        if pending.size == 0:
            break
        hit = bit_at(pending, int(order[pos])) != 0
        steps[pending] += 1
        deg[pending[hit]] = layers[pos]
        pending = pending[~hit]
    return BatchResult(deg, steps)


def wlo_bytewise_batch(anf: np.ndarray, seq: WloSequence) -> BatchResult:
    _check_n(int(anf.shape[1]).bit_length() - 1, seq.n)
    return _probe_batch(lambda rows, c: anf[rows, c], anf.shape[0], seq)


def wlo_bitprobe_batch(anf: np.ndarray, seq: WloSequence) -> BatchResult:
    def bit_at(rows, c):
        return (anf[rows, c >> 6] >> np.uint64(c & 63)) & np.uint64(1)

    res = _probe_batch(bit_at, anf.shape[0], seq)
    res.word_ops = res.steps.copy()
    return res


def wlo_bitwise_batch(anf: np.ndarray, masks: MaskSet) -> BatchResult:
    rows, width = anf.shape
    mat = masks.matrix
    deg = np.full(rows, BOTTOM_CODE, dtype=np.int16)
    steps = np.zeros(rows, dtype=np.int64)
    word_ops = np.zeros(rows, dtype=np.int64)
    pending = np.arange(rows)
    for k in range(masks.n, -1, -1):
        if pending.size == 0:
            break
        nz = (anf[pending] & mat[k]) != 0
        hit = nz.any(axis=1)
        word_ops[pending] += np.where(hit, nz.argmax(axis=1) + 1, width)
        steps[pending] += 1
        deg[pending[hit]] = k
        pending = pending[~hit]
    return BatchResult(deg, steps, word_ops)


def batch_parity(tt: np.ndarray) -> np.ndarray:
    return np.bitwise_count(np.bitwise_xor.reduce(tt, axis=1)) & 1


def search_batch(anf: np.ndarray, n: int, algorithm: Algorithm) -> BatchResult:
    """Batch search; ``anf`` is bytes for byte-wise algorithms, words otherwise."""
    if algorithm is Algorithm.ES:
        return es_batch(anf, n)
    if algorithm is Algorithm.WLO_BYTE:
        return wlo_bytewise_batch(anf, cached_wlo(n))
    if algorithm is Algorithm.WLO_BIT_MASK:
        return wlo_bitwise_batch(anf, cached_masks(n))
    if algorithm is Algorithm.WLO_BIT_PROBE:
        return wlo_bitprobe_batch(anf, cached_wlo(n))
    raise DomainError(f"{algorithm} is not a search over the ANF")


def anf_batch(tt: np.ndarray, n: int, bytewise: bool) -> np.ndarray:
    """ANF of a (B, words) block of truth tables, as bytes or as words."""
    if bytewise:
        return anft_bytes_inplace(unpack_bits(tt, n), n)
    return anft_words_inplace(np.array(tt, dtype=np.uint64, order="C"), n)


def pipeline_batch(tt: np.ndarray, n: int, algorithm: Algorithm = Algorithm.WLO_BIT_MASK,
                   parity_shortcut: bool = False) -> BatchResult:
    """Batch counterpart of :func:`degree_pipeline` over (B, words) truth tables."""
    algorithm = Algorithm(algorithm)
    rows = tt.shape[0]
    if parity_shortcut:
        odd = batch_parity(tt).astype(bool)
        rest = np.flatnonzero(~odd)
        sub = pipeline_batch(tt[rest], n, algorithm) if rest.size else None
        deg = np.full(rows, n, dtype=np.int16)
        steps = np.zeros(rows, dtype=np.int64)
        if sub is not None:
            deg[rest] = sub.degrees
            steps[rest] = sub.steps
        return BatchResult(deg, steps, shortcut=odd)
    res = search_batch(anf_batch(tt, n, algorithm.bytewise), n, algorithm)
    res.shortcut = np.zeros(rows, dtype=bool)
    return res
