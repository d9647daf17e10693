import numpy as np
import pytest

from algdeg.bitpack import PackedVector, bit_get, serial_number, weight
from algdeg.cube import (binomial, cached_masks, cached_wlo, generate_masks, generate_masks_direct,
                         generate_wlo, layer_slice)
from algdeg.errors import DomainError

from conftest import popcount


def wlo_oracle(n):
    """Sort the cube by (weight, serial number)."""
    return sorted(range(1 << n), key=lambda i: (popcount(i), i))


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(10, 5) == 252
    assert sum(binomial(5, k) for k in range(6)) == 32
    assert binomial(60, 30) == 118264581564861424
    for bad in [(3, 4), (61, 2), (-1, 0), (4, -1)]:
        with pytest.raises(DomainError):
            binomial(*bad)


@pytest.mark.parametrize("n, expected", [
    (1, [0, 1]),
    (3, [0, 1, 2, 4, 3, 5, 6, 7]),
    (4, [0, 1, 2, 4, 8, 3, 5, 6, 9, 10, 12, 7, 11, 13, 14, 15]),
])
def test_wlo_examples(n, expected):
    assert generate_wlo(n).order.tolist() == expected


def test_layer_slice_examples():
    seq = generate_wlo(4)
    assert layer_slice(seq, 2).tolist() == [3, 5, 6, 9, 10, 12]
    assert layer_slice(seq, 0).tolist() == [0]
    assert layer_slice(seq, 4).tolist() == [15]
    with pytest.raises(DomainError):
        layer_slice(seq, 5)


def test_wlo_domain():
    for bad in (0, 31):
        with pytest.raises(DomainError):
            generate_wlo(bad)
        with pytest.raises(DomainError):
            generate_masks(bad)


@pytest.mark.parametrize("n", range(1, 13))
def test_wlo_structure(n):
    seq = generate_wlo(n)
    order = seq.order.tolist()
    assert order == wlo_oracle(n)
    assert sorted(order) == list(range(1 << n))
    assert len(seq.layer_offsets) == n + 2 and seq.layer_offsets[-1] == 1 << n
    for k in range(n + 1):
        part = layer_slice(seq, k).tolist()
        assert len(part) == binomial(n, k)
        assert all(popcount(i) == k for i in part)
        assert all(a < b for a, b in zip(part, part[1:]))


@pytest.mark.parametrize("n", range(2, 11))
def test_wlo_layer_prefix(n):
    seq, prev = generate_wlo(n), generate_wlo(n - 1)
    for k in range(n):
        head = layer_slice(prev, k).tolist()
        assert layer_slice(seq, k).tolist()[:len(head)] == head


@pytest.mark.parametrize("n, serials", [
    (1, [2, 1]),
    (2, [8, 6, 1]),
    (3, [128, 104, 22, 1]),
    (4, [32768, 26752, 5736, 278, 1]),
    (5, [2147483648, 1753251840, 375941248, 18224744, 65814, 1]),
])
def test_mask_serials(n, serials):
    assert [int(serial_number(m)) for m in generate_masks(n).masks] == serials
    assert [int(serial_number(m)) for m in generate_masks_direct(n).masks] == serials


@pytest.mark.parametrize("n", range(1, 13))
def test_masks_recurrence_equals_direct(n):
    rec, direct = generate_masks(n), generate_masks_direct(n)
    assert rec == direct
    seq = generate_wlo(n)
    union = np.zeros_like(rec.masks[0].words)
    for k, m in enumerate(rec.masks):
        assert weight(m) == binomial(n, k)
        assert (union & m.words).sum() == 0
        union |= m.words
        members = set(layer_slice(seq, k).tolist())
        if n <= 8:
            assert {i for i in range(1 << n) if bit_get(m, i)} == members
        else:
            assert all(bit_get(m, i) for i in members)
    assert PackedVector(n, union) == PackedVector.ones(n)


def test_cached_tables_are_shared_and_read_only():
    assert cached_wlo(7) is cached_wlo(7)
    assert cached_masks(7) is cached_masks(7)
    with pytest.raises(ValueError):
        cached_wlo(7).order[0] = 5
    with pytest.raises(ValueError):
        cached_masks(7).masks[0].words[0] = 5
