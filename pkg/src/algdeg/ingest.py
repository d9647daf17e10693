"""Sources of truth tables: raw little-endian word files and a seeded generator."""
from __future__ import annotations

import os
from typing import Callable, Iterator

import numpy as np

from .bitpack import PackedVector, check_dimension, tail_mask, words_for
from .errors import DomainError, FormatError

_M64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Scalar splitmix64, one 64-bit output per call."""

    def __init__(self, seed: int) -> None:
        self.state = seed & _M64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & _M64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _M64
        z = ((z ^ (z >> 27)) * _MIX2) & _M64
        return z ^ (z >> 31)


def splitmix64_block(seed: int, start: int, count: int) -> np.ndarray:
    """Outputs ``start .. start + count - 1`` of the splitmix64 stream for ``seed``."""
    # uint64 array arithmetic wraps modulo 2^64
    i = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed & _M64) + i * np.uint64(GOLDEN_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


class FunctionStream:
    """A finite sequence of truth tables of one dimension.

    Iterating yields :class:`PackedVector` objects; :meth:`batches` yields
    ``(rows, words_per_function)`` uint64 blocks, which is how the bulk code
    paths consume it. Memory use is bounded by the batch size.
    """

    def __init__(self, n: int, count: int, reader: Callable[[int], Iterator[np.ndarray]],
                 description: str = "") -> None:
        self.n = n
        self.count = count
        self.words_per_function = words_for(n)
        self._reader = reader
        self.description = description

    def __len__(self) -> int:
        return self.count

    def batches(self, batch_size: int = 1 << 14) -> Iterator[np.ndarray]:
        if batch_size < 1:
            raise DomainError("batch size must be positive")
        valid = np.uint64(tail_mask(self.n))
        for block in self._reader(batch_size):
            block = block.reshape(-1, self.words_per_function)
            if self.n < 6:
                block &= valid
            yield block

    def __iter__(self) -> Iterator[PackedVector]:
        for block in self.batches():
            for row in block:
                yield PackedVector(self.n, row)


def read_functions(path, n: int) -> FunctionStream:
    """Stream truth tables from consecutive little-endian 64-bit words."""
    check_dimension(n, low=1)
    w = words_for(n)
    size = os.stat(path).st_size
    if size % 8 or size % (8 * w):
        raise FormatError(
            f"{path}: size {size} bytes is not a multiple of {8 * w} "
            f"(8 bytes x {w} words per function for n={n})")
    count = size // (8 * w)

    def reader(batch_size: int) -> Iterator[np.ndarray]:
        with open(path, "rb") as fh:
            remaining = count
            while remaining:
                take = min(batch_size, remaining)
                block = np.fromfile(fh, dtype="<u8", count=take * w)
                if block.size != take * w:
                    raise FormatError(f"{path}: file shrank while reading")
                remaining -= take
                yield block.astype(np.uint64, copy=False)

    return FunctionStream(n, count, reader, description=str(path))


def generate_random(n: int, count: int, seed: int) -> FunctionStream:
    """Deterministic random truth tables; word j of function t is output t*words + j."""
    check_dimension(n, low=1)
    if count < 0:
        raise DomainError("count must be non-negative")
    w = words_for(n)

    def reader(batch_size: int) -> Iterator[np.ndarray]:
        for first in range(0, count, batch_size):
            take = min(batch_size, count - first)
            yield splitmix64_block(seed, first * w, take * w)

    return FunctionStream(n, count, reader, description=f"splitmix64(seed={seed})")


def write_functions(path, stream: FunctionStream) -> int:
    """Write a stream in the raw word format; returns the number of functions."""
    written = 0
    with open(path, "wb") as fh:
        for block in stream.batches():
            block.astype("<u8", copy=False).tofile(fh)
            written += block.shape[0]
    return written
