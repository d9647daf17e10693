"""Packed 2^n-bit Boolean vectors stored in 64-bit words.

Coordinate ``i`` lives in word ``i // 64`` at bit ``i % 64`` (least significant
bit first). The most-significant-first reading used for serial numbers is
applied only when rendering, in :func:`serial_number`.
"""
from __future__ import annotations

import numpy as np

from .errors import DomainError, ParseError

MAX_N = 30
WORD_BITS = 64
_WORD_DTYPE = np.dtype("<u8")


def words_for(n: int) -> int:
    """Number of 64-bit words holding a vector over the n-cube."""
    check_dimension(n)
    return 1 if n < 6 else 1 << (n - 6)


def check_dimension(n: int, low: int = 0) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise DomainError(f"dimension must be an integer, got {n!r}")
    if not low <= n <= MAX_N:
        raise DomainError(f"dimension n={n} outside [{low}, {MAX_N}]")


def tail_mask(n: int) -> int:
    """Valid-bit mask for the single word of a vector with n < 6."""
    if n >= 6:
        return (1 << 64) - 1
    return (1 << (1 << n)) - 1


class PackedVector:
    """A 2^n-bit vector (truth table, ANF vector or mask) packed into words."""

    __slots__ = ("n", "words")

    def __init__(self, n: int, words) -> None:
        check_dimension(n)
        arr = np.array(words, dtype=_WORD_DTYPE).reshape(-1)
        if arr.size != words_for(n):
            raise DomainError(
                f"n={n} needs {words_for(n)} words, got {arr.size}")
        if n < 6 and int(arr[0]) & ~tail_mask(n):
            raise DomainError(f"bits beyond coordinate {(1 << n) - 1} must be zero")
        self.n = int(n)
        self.words = arr

    @classmethod
    def zeros(cls, n: int) -> "PackedVector":
        return cls(n, np.zeros(words_for(n), dtype=_WORD_DTYPE))

    @classmethod
    def ones(cls, n: int) -> "PackedVector":
        words = np.full(words_for(n), tail_mask(n), dtype=_WORD_DTYPE)
        return cls(n, words)

    @classmethod
    def from_int(cls, n: int, value: int) -> "PackedVector":
        """Build from an integer whose bit ``i`` is coordinate ``i``."""
        w = words_for(n)
        if value < 0 or value >> (1 << n):
            raise DomainError(f"value does not fit in 2^{n} bits")
        words = [(value >> (WORD_BITS * j)) & 0xFFFFFFFFFFFFFFFF for j in range(w)]
        return cls(n, words)

    def to_int(self) -> int:
        """Integer whose bit ``i`` is coordinate ``i`` (LSB-first)."""
        return int.from_bytes(self.words.tobytes(), "little")

    def copy(self) -> "PackedVector":
        return PackedVector(self.n, self.words.copy())

    @property
    def size(self) -> int:
        return 1 << self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, PackedVector):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.words, other.words)

    def __hash__(self) -> int:
        return hash((self.n, self.words.tobytes()))

    def __repr__(self) -> str:
        if self.n <= 6:
            return f"PackedVector(n={self.n}, bits={render_text(self)!r})"
        return f"PackedVector(n={self.n}, words={len(self.words)})"


def bit_get(v: PackedVector, i: int) -> int:
    if not 0 <= i < (1 << v.n):
        raise IndexError(f"coordinate {i} out of range for n={v.n}")
    return (int(v.words[i >> 6]) >> (i & 63)) & 1


def weight(v: PackedVector) -> int:
    """Number of set coordinates."""
    return int(np.bitwise_count(v.words).sum())


def parity(v: PackedVector) -> int:
    """Weight modulo 2, from the XOR fold of all words."""
    fold = int(np.bitwise_xor.reduce(v.words))
    return fold.bit_count() & 1


def serial_number(v: PackedVector) -> str:
    """Decimal integer read with coordinate 0 as the most significant bit."""
    bits = render_text(v)
    return str(int(bits, 2))


def hex_dump(v: PackedVector) -> str:
    """Hex string of the 2^n bits, coordinate 0 being the top bit of digit 0."""
    digits = max(1, (1 << v.n) // 4)
    return format(int(serial_number(v)), f"0{digits}x")


def render_text(v: PackedVector) -> str:
    """'0'/'1' string, coordinate 0 first."""
    size = 1 << v.n
    raw = np.unpackbits(v.words.view(np.uint8), bitorder="little")[:size]
    return (raw + ord("0")).tobytes().decode("ascii")


def from_text(bits: str, n: int) -> PackedVector:
    check_dimension(n)
    bits = bits.strip()
    size = 1 << n
    if len(bits) != size:
        raise ParseError(f"expected {size} characters for n={n}, got {len(bits)}")
    if set(bits) - {"0", "1"}:
        raise ParseError("truth table text may contain only '0' and '1'")
    raw = np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - ord("0")
    return PackedVector(n, pack_bits(raw[None, :], n)[0])


def pack_bits(bits: np.ndarray, n: int) -> np.ndarray:
    """Pack a (B, 2^n) array of 0/1 bytes into a (B, words) uint64 array."""
    w = words_for(n)
    packed = np.packbits(np.asarray(bits, dtype=np.uint8), axis=-1, bitorder="little")
    if packed.shape[-1] < 8 * w:
        pad = np.zeros(packed.shape[:-1] + (8 * w - packed.shape[-1],), dtype=np.uint8)
        packed = np.concatenate([packed, pad], axis=-1)
    return np.ascontiguousarray(packed).view(_WORD_DTYPE)


def unpack_bits(words: np.ndarray, n: int) -> np.ndarray:
    """Inverse of :func:`pack_bits`: (B, words) uint64 to (B, 2^n) bytes."""
    arr = np.ascontiguousarray(words, dtype=_WORD_DTYPE)
    raw = np.unpackbits(arr.view(np.uint8), axis=-1, bitorder="little")
    return np.ascontiguousarray(raw[..., : 1 << n])
