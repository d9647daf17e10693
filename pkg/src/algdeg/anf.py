"""ANF transform (binary Moebius transform) on byte and packed vectors.

Both transforms run the same butterfly: at level ``d`` every coordinate whose
bit ``d`` is set accumulates (XOR) its partner with that bit cleared. The
byte-wise form touches one coordinate per byte; the bitwise form does levels
0..5 inside each word with a mask-and-shift and levels >= 6 across words.

The array kernels accept any leading batch shape, so a single vector and a
block of many functions share the same code.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitpack import PackedVector, check_dimension, pack_bits, unpack_bits
from .errors import DomainError

# Positions inside a 64-bit word whose bit d is clear, d = 0..5.
IN_WORD_MASKS = (
    0x5555555555555555,
    0x3333333333333333,
    0x0F0F0F0F0F0F0F0F,
    0x00FF00FF00FF00FF,
    0x0000FFFF0000FFFF,
    0x00000000FFFFFFFF,
)


def _derive_in_word_mask(d: int) -> int:
    return sum(1 << i for i in range(64) if not (i >> d) & 1)


for _d, _lit in enumerate(IN_WORD_MASKS):
    if _derive_in_word_mask(_d) != _lit:
        raise AssertionError(f"in-word mask for level {_d} does not match LSB-first packing")

_E = tuple(np.uint64(m) for m in IN_WORD_MASKS)


@dataclass(eq=False)
class ByteVector:
    """Unpacked 2^n-entry vector, one 0/1 byte per coordinate."""

    n: int
    values: np.ndarray

    def __post_init__(self) -> None:
        check_dimension(self.n)
        self.values = np.asarray(self.values, dtype=np.uint8).reshape(-1)
        if self.values.size != 1 << self.n:
            raise DomainError(f"n={self.n} needs {1 << self.n} entries, got {self.values.size}")
        if self.values.size and int(self.values.max()) > 1:
            raise DomainError("byte vector entries must be 0 or 1")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ByteVector):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.values, other.values)

    def copy(self) -> "ByteVector":
        return ByteVector(self.n, self.values.copy())


def _require_contiguous(arr: np.ndarray) -> None:
    if not arr.flags.c_contiguous or not arr.flags.writeable:
        raise ValueError("in-place transform needs a writable C-contiguous array")


def _butterfly(arr: np.ndarray, stride: int) -> None:
    v = arr.reshape(arr.shape[:-1] + (-1, 2, stride))
    if stride < 16:
        # numpy iterates short inner axes slowly; one strided pass per offset instead
        for j in range(stride):
            v[..., 1, j] ^= v[..., 0, j]
    else:
        v[..., 1, :] ^= v[..., 0, :]


def anft_bytes_inplace(values: np.ndarray, n: int) -> np.ndarray:
    """In-place butterfly on a C-contiguous (..., 2^n) uint8 array."""
    _require_contiguous(values)
    for d in range(n):
        _butterfly(values, 1 << d)
    return values


def anft_words_inplace(words: np.ndarray, n: int) -> np.ndarray:
    """In-place butterfly on a C-contiguous (..., words) uint64 array."""
    _require_contiguous(words)
    for d in range(min(n, 6)):
        words ^= (words & _E[d]) << np.uint64(1 << d)
    for d in range(6, n):
        _butterfly(words, 1 << (d - 6))
    return words


def anft_bytewise_inplace(tt: ByteVector) -> ByteVector:
    anft_bytes_inplace(tt.values, tt.n)
    return tt


def anft_bytewise(tt: ByteVector) -> ByteVector:
    """A_f from TT(f), leaving the input untouched. The map is an involution."""
    return anft_bytewise_inplace(tt.copy())


def anft_bitwise_inplace(v: PackedVector) -> PackedVector:
    anft_words_inplace(v.words, v.n)
    return v


def anft_bitwise(v: PackedVector) -> PackedVector:
    """Packed counterpart of :func:`anft_bytewise`."""
    return anft_bitwise_inplace(v.copy())


def mobius_coefficient_oracle(tt: ByteVector, gamma: int) -> int:
    """Coefficient a_gamma as the XOR of tt[x] over all submasks x of gamma.

    Enumerates submasks directly; used only to check the fast transforms.
    """
    if not 0 <= gamma < (1 << tt.n):
        raise IndexError(f"coordinate {gamma} out of range for n={tt.n}")
    values = tt.values
    acc = 0
    x = gamma
    while True:
        acc ^= int(values[x])
        if x == 0:
            return acc
        x = (x - 1) & gamma


def mobius_oracle_batch(tt: np.ndarray, n: int) -> np.ndarray:
    """Submask-XOR oracle for a (B, 2^n) block of truth tables at once."""
    out = np.zeros_like(tt)
    for gamma in range(1 << n):
        x = gamma
        while True:
            out[:, gamma] ^= tt[:, x]
            if x == 0:
                break
            x = (x - 1) & gamma
    return out


def pack(b: ByteVector) -> PackedVector:
    return PackedVector(b.n, pack_bits(b.values, b.n))


def unpack(v: PackedVector) -> ByteVector:
    return ByteVector(v.n, unpack_bits(v.words, v.n))
