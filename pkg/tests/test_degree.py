import numpy as np
import pytest

from algdeg.anf import ByteVector, anft_bitwise, anft_bytewise, mobius_coefficient_oracle, unpack
from algdeg.bitpack import PackedVector, from_text
from algdeg.cube import generate_masks, generate_wlo, layer_slice
from algdeg.degree import (BOTTOM, Algorithm, BatchResult, anf_batch, degree_es, degree_pipeline,
                           degree_wlo_bitprobe, degree_wlo_bitwise, degree_wlo_bytewise,
                           pipeline_batch, search, search_batch)
from algdeg.errors import DomainError
from algdeg.selftest import all_truth_tables

from conftest import EXAMPLE_ANF, popcount, random_words

SEARCHES = (Algorithm.ES, Algorithm.WLO_BYTE, Algorithm.WLO_BIT_MASK, Algorithm.WLO_BIT_PROBE)


def oracle_degree(tt: ByteVector):
    coeffs = [g for g in range(1 << tt.n) if mobius_coefficient_oracle(tt, g)]
    return max((popcount(g) for g in coeffs), default=BOTTOM)


def example():
    v = from_text(EXAMPLE_ANF, 4)
    return v, unpack(v)


def test_bottom_orders_below_integers():
    assert BOTTOM < 0 and 0 > BOTTOM and BOTTOM <= BOTTOM and not BOTTOM < BOTTOM
    assert max([BOTTOM, 2, 0]) == 2 and min([3, BOTTOM]) is BOTTOM
    assert str(BOTTOM) == "-inf" and BOTTOM != -1


def test_worked_example():
    packed, byte = example()
    assert degree_es(byte).degree == 2
    r = degree_wlo_bytewise(byte, generate_wlo(4))
    assert (r.degree, r.steps, r.stop_coordinate) == (2, 6, 12)
    r = degree_wlo_bitwise(packed, generate_masks(4))
    assert (r.degree, r.steps) == (2, 3)
    r = degree_wlo_bitprobe(packed, generate_wlo(4))
    assert (r.degree, r.steps, r.stop_coordinate) == (2, 6, 12)


def test_edge_inputs():
    n = 4
    zero = PackedVector.zeros(n)
    assert degree_es(unpack(zero)).degree is BOTTOM
    assert degree_es(unpack(zero)).steps == 16
    r = degree_wlo_bytewise(unpack(zero), generate_wlo(n))
    assert (r.degree, r.steps) == (BOTTOM, 16)
    r = degree_wlo_bitwise(zero, generate_masks(n))
    assert (r.degree, r.steps) == (BOTTOM, 5)
    const_one = PackedVector.from_int(n, 1)
    assert degree_es(unpack(const_one)).degree == 0
    r = degree_wlo_bitprobe(const_one, generate_wlo(n))
    assert (r.degree, r.steps) == (0, 16)
    top = PackedVector.from_int(n, 1 << 15)
    r = degree_wlo_bytewise(unpack(top), generate_wlo(n))
    assert (r.degree, r.steps) == (n, 1)


def test_dimension_mismatch():
    v = PackedVector.zeros(5)
    with pytest.raises(DomainError):
        degree_wlo_bitwise(v, generate_masks(4))
    with pytest.raises(DomainError):
        degree_wlo_bitprobe(v, generate_wlo(6))
    with pytest.raises(DomainError):
        degree_wlo_bytewise(unpack(v), generate_wlo(4))


def test_pipeline_examples(rng):
    assert degree_pipeline(PackedVector.ones(4), Algorithm.WLO_BIT_MASK).degree == 0
    odd = PackedVector(8, random_words(rng, 1, 8)[0])
    if bin(odd.to_int()).count("1") % 2 == 0:
        odd = PackedVector.from_int(8, odd.to_int() ^ 1)
    r = degree_pipeline(odd, Algorithm.WLO_BIT_MASK, parity_shortcut=True)
    assert (r.degree, r.algorithm, r.steps) == (8, Algorithm.PARITY_SHORTCUT, 0)
    assert degree_pipeline(odd, Algorithm.ES).degree == 8


@pytest.mark.parametrize("n", [1, 2, 3])
def test_scalar_exhaustive_small(n):
    for row in all_truth_tables(n):
        tt = PackedVector(n, row)
        expect = oracle_degree(unpack(tt))
        anf = anft_bitwise(tt)
        results = [search(unpack(anf) if a.bytewise else anf, a) for a in SEARCHES]
        assert [r.degree for r in results] == [expect] * 4
        byte, mask, probe = results[1], results[2], results[3]
        assert byte.steps == probe.steps <= 1 << n
        assert mask.steps <= n + 1
        if byte.degree is not BOTTOM:
            assert popcount(byte.stop_coordinate) == byte.degree
        if bin(int(row[0])).count("1") % 2:
            assert expect == n
        for a in SEARCHES:
            assert degree_pipeline(tt, a, parity_shortcut=True).degree == expect


def test_batch_matches_scalar_counters(rng):
    for n in (3, 6, 7, 9):
        tt = random_words(rng, 300, n)
        tt[0] = 0  # zero function
        tt[1] = 0
        tt[1, 0] = 1  # indicator of coordinate 0, whose ANF is all ones
        anf_w = anf_batch(tt, n, bytewise=False)
        anf_b = anf_batch(tt, n, bytewise=True)
        seq, masks = generate_wlo(n), generate_masks(n)
        batch = {a: search_batch(anf_b if a.bytewise else anf_w, n, a) for a in SEARCHES}
        for i, row in enumerate(anf_w):
            v = PackedVector(n, row)
            b = ByteVector(n, anf_b[i])
            scalar = {Algorithm.ES: degree_es(b), Algorithm.WLO_BYTE: degree_wlo_bytewise(b, seq),
                      Algorithm.WLO_BIT_MASK: degree_wlo_bitwise(v, masks),
                      Algorithm.WLO_BIT_PROBE: degree_wlo_bitprobe(v, seq)}
            for a in SEARCHES:
                res: BatchResult = batch[a]
                assert res.degree_list()[i] == scalar[a].degree
                assert res.steps[i] == scalar[a].steps
                if a is Algorithm.WLO_BIT_MASK:
                    assert res.word_ops[i] == scalar[a].word_ops


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_four_way_agreement_random(rng, n):
    rows = 100_000
    chunk = 100_000 if n <= 10 else 20_000
    for start in range(0, rows, chunk):
        tt = random_words(rng, chunk, n)
        anf_w = anf_batch(tt, n, bytewise=False)
        anf_b = anf_batch(tt, n, bytewise=True)
        es = search_batch(anf_b, n, Algorithm.ES).degrees
        byte = search_batch(anf_b, n, Algorithm.WLO_BYTE)
        mask = search_batch(anf_w, n, Algorithm.WLO_BIT_MASK)
        probe = search_batch(anf_w, n, Algorithm.WLO_BIT_PROBE)
        assert np.array_equal(es, byte.degrees)
        assert np.array_equal(es, mask.degrees)
        assert np.array_equal(es, probe.degrees)
        assert np.array_equal(byte.steps, probe.steps)
        assert mask.steps.max() <= n + 1
        odd = np.bitwise_count(np.bitwise_xor.reduce(tt, axis=1)) & 1
        assert np.all(es[odd == 1] == n)


@pytest.mark.parametrize("n", [6, 8, 10])
def test_degree_matches_submask_oracle(rng, n):
    for row in random_words(rng, 2, n):
        tt = PackedVector(n, row)
        expect = oracle_degree(unpack(tt))
        for a in SEARCHES:
            assert degree_pipeline(tt, a).degree == expect


def test_stop_coordinate_is_last_nonzero_in_wlo(rng):
    n = 8
    seq = generate_wlo(n)
    order = seq.order.tolist()
    for row in random_words(rng, 200, n):
        anf = anft_bytewise(unpack(PackedVector(n, row)))
        r = degree_wlo_bytewise(anf, seq)
        pos = order.index(r.stop_coordinate)
        assert popcount(r.stop_coordinate) == r.degree
        assert r.stop_coordinate in layer_slice(seq, r.degree).tolist()
        assert not any(anf.values[c] for c in order[pos + 1:])


def test_sparse_anf_vectors(rng):
    # random low-degree ANFs reach deep into the WLO order
    n = 9
    for k in range(n + 1):
        for _ in range(5):
            coords = [g for g in range(1 << n) if popcount(g) <= k and rng.random() < 0.05]
            coords.append(next(g for g in range(1 << n) if popcount(g) == k))
            anf = PackedVector.from_int(n, sum(1 << g for g in set(coords)))
            got = {a: search(unpack(anf) if a.bytewise else anf, a).degree for a in SEARCHES}
            assert set(got.values()) == {k}


def test_pipeline_shortcut_self_consistency(rng):
    n = 10
    tt = random_words(rng, 100_000, n)
    on = pipeline_batch(tt, n, Algorithm.WLO_BIT_MASK, parity_shortcut=True)
    off = pipeline_batch(tt, n, Algorithm.WLO_BIT_MASK, parity_shortcut=False)
    assert np.array_equal(on.degrees, off.degrees)
    assert 0.45 < on.shortcut.mean() < 0.55


def test_pipeline_batch_matches_scalar(rng):
    n = 7
    tt = random_words(rng, 64, n)
    for a in SEARCHES:
        for shortcut in (False, True):
            res = pipeline_batch(tt, n, a, parity_shortcut=shortcut)
            scalar = [degree_pipeline(PackedVector(n, r), a, parity_shortcut=shortcut) for r in tt]
            assert res.degree_list() == [s.degree for s in scalar]
            assert res.steps.tolist() == [s.steps for s in scalar]
