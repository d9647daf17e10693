"""Weight-lexicographic order of the Boolean cube and the per-layer masks."""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .bitpack import PackedVector, check_dimension, tail_mask, words_for
from .errors import DomainError

MAX_BINOMIAL_N = 60


@functools.lru_cache(maxsize=None)
def _pascal_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _pascal_row(n - 1)
    return (1,) + tuple(prev[i] + prev[i + 1] for i in range(n - 1)) + (1,)


def binomial(n: int, k: int) -> int:
    """C(n, k) from Pascal's triangle, for 0 <= k <= n <= 60."""
    if not (0 <= n <= MAX_BINOMIAL_N) or not (0 <= k <= n):
        raise DomainError(f"binomial({n}, {k}) outside 0 <= k <= n <= {MAX_BINOMIAL_N}")
    return _pascal_row(n)[k]


@dataclass(frozen=True, eq=False)
class WloSequence:
    """The WLO permutation of {0, ..., 2^n - 1} split into weight layers.

    ``order[layer_offsets[k]:layer_offsets[k + 1]]`` lists the coordinates of
    weight ``k`` in increasing order.
    """

    n: int
    order: np.ndarray
    layer_offsets: tuple[int, ...]

    def layer_of_position(self) -> np.ndarray:
        """Layer index for every position of ``order``."""
        sizes = np.diff(np.array(self.layer_offsets))
        return np.repeat(np.arange(self.n + 1, dtype=np.int16), sizes)


def generate_wlo(n: int) -> WloSequence:
    """Build l_n by the layer recurrence, starting from l_1 = (0, 1).

    ``l_{m,k}`` is ``l_{m-1,k}`` followed by ``l_{m-1,k-1} + 2^(m-1)``; only the
    previous level is kept.
    """
    check_dimension(n, low=1)
    layers = [np.array([0], dtype=np.uint32), np.array([1], dtype=np.uint32)]
    for m in range(2, n + 1):
        half = np.uint32(1 << (m - 1))
        nxt = [layers[0]]
        for k in range(1, m):
            nxt.append(np.concatenate([layers[k], layers[k - 1] + half]))
        nxt.append(layers[m - 1] + half)
        layers = nxt
    offsets = [0]
    for layer in layers:
        offsets.append(offsets[-1] + len(layer))
    order = np.concatenate(layers)
    order.setflags(write=False)
    return WloSequence(n=n, order=order, layer_offsets=tuple(offsets))


def layer_slice(seq: WloSequence, k: int) -> np.ndarray:
    if not 0 <= k <= seq.n:
        raise DomainError(f"layer {k} outside [0, {seq.n}]")
    return seq.order[seq.layer_offsets[k]:seq.layer_offsets[k + 1]]


@dataclass(frozen=True, eq=False)
class MaskSet:
    """``masks[k]`` has ones exactly at the coordinates of weight ``k``."""

    n: int
    masks: tuple[PackedVector, ...]

    @functools.cached_property
    def matrix(self) -> np.ndarray:
        """Masks stacked as an (n + 1, words) read-only array."""
        mat = np.stack([m.words for m in self.masks])
        mat.setflags(write=False)
        return mat

    def __eq__(self, other) -> bool:
        if not isinstance(other, MaskSet):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks


def generate_masks(n: int) -> MaskSet:
    """Layer masks by the doubling recurrence on packed words.

    Going from dimension m-1 to m, mask k keeps the old mask k in the lower
    coordinate half and receives old mask k-1 in the upper half. Below six
    variables the halves are bit ranges of one word; from there on they are
    the two halves of the word array.
    """
    check_dimension(n, low=1)
    # n = 1: coordinate 0 has weight 0, coordinate 1 has weight 1
    masks: list[np.ndarray] = [np.array([1], dtype=np.uint64), np.array([2], dtype=np.uint64)]
    for m in range(2, n + 1):
        if m <= 6:
            shift = 1 << (m - 1)
            lo = [int(x[0]) for x in masks]
            nxt = [lo[0]]
            for k in range(1, m):
                nxt.append(lo[k] | (lo[k - 1] << shift))
            nxt.append(lo[m - 1] << shift)
            masks = [np.array([v & tail_mask(m)], dtype=np.uint64) for v in nxt]
        else:
            zero = np.zeros_like(masks[0])
            nxt = [np.concatenate([masks[0], zero])]
            for k in range(1, m):
                nxt.append(np.concatenate([masks[k], masks[k - 1]]))
            nxt.append(np.concatenate([zero, masks[m - 1]]))
            masks = nxt
    return MaskSet(n=n, masks=tuple(PackedVector(n, w) for w in masks))


def coordinate_weights(n: int) -> np.ndarray:
    """Hamming weight of every coordinate 0 .. 2^n - 1."""
    idx = np.arange(1 << n, dtype=np.uint64)
    return np.bitwise_count(idx).astype(np.int16)


def generate_masks_direct(n: int) -> MaskSet:
    """Layer masks by classifying each coordinate by its weight."""
    check_dimension(n, low=1)
    weights = coordinate_weights(n)
    w = words_for(n)
    out = []
    for k in range(n + 1):
        bits = (weights == k).astype(np.uint8)
        raw = np.packbits(bits, bitorder="little")
        raw = np.concatenate([raw, np.zeros(8 * w - raw.size, dtype=np.uint8)])
        out.append(PackedVector(n, raw.view(np.uint64)))
    return MaskSet(n=n, masks=tuple(out))


@functools.lru_cache(maxsize=32)
def cached_wlo(n: int) -> WloSequence:
    return generate_wlo(n)


@functools.lru_cache(maxsize=32)
def cached_masks(n: int) -> MaskSet:
    masks = generate_masks(n)
    for m in masks.masks:
        m.words.setflags(write=False)
    return masks
