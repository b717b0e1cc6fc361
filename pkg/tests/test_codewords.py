"""Bit-level codeword model: encode/decode, membership, sampling, enumeration."""

import math
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats

from sash.codewords import (EnumerationCapError, GraphWord, NotACodewordError,
                            canonical_labeling, codewords_of_type,
                            decode_labeling, encode, enumerate_codewords,
                            enumerate_labelings_of_type, is_codeword,
                            pair_index, sample_codeword, sample_labeling,
                            type_of)
from sash.combinatorics import code_size, count_of_type, enumerate_types, weight_of_type


def test_pair_index_lex_order():
    # (0,1),(0,2),...,(0,n-1),(1,2),... and nothing skipped
    for n in (2, 3, 5, 9):
        seen = [pair_index(i, j, n) for i in range(n) for j in range(i + 1, n)]
        assert seen == list(range(math.comb(n, 2)))
    with pytest.raises(ValueError):
        pair_index(2, 2, 4)
    with pytest.raises(ValueError):
        pair_index(3, 1, 4)


def test_encode_examples():
    assert encode([0, 0, 1, 1]).to01() == "100001"
    assert encode([0, 0, 0]).to01() == "111"
    assert encode([0, 1, 2, 3]).to01() == "000000"
    # labels need not be small ints
    assert encode(["a", "a", "b", "b"]).to01() == "100001"


def test_decode_labeling_examples():
    assert decode_labeling(GraphWord.from01("100001", 4)) == (0, 0, 1, 1)
    assert decode_labeling(GraphWord.from01("000000", 4)) == (0, 1, 2, 3)
    # path of length 2 is not a disjoint union of cliques
    with pytest.raises(NotACodewordError):
        decode_labeling(GraphWord.from01("110", 3))


def test_is_codeword_examples():
    assert is_codeword(GraphWord.from01("111", 3), 3)
    assert not is_codeword(GraphWord.from01("100001", 4), 3)
    assert not is_codeword(GraphWord.from01("110", 3), 1)
    with pytest.raises(ValueError):
        is_codeword(GraphWord.from01("111", 3), 4)


def test_type_of():
    assert type_of([0, 0, 1, 1]) == (2, 2)
    assert type_of([0, 0, 0, 0]) == (4,)
    assert type_of([0, 1, 1, 1]) == (3, 1)


def test_graphword_validation():
    with pytest.raises(ValueError):
        GraphWord(1, 0)
    with pytest.raises(ValueError):
        GraphWord(4, 1 << 6)
    with pytest.raises(ValueError):
        GraphWord.from01("01", 4)
    with pytest.raises(ValueError):
        GraphWord.from01("0x0001", 4)


def test_graphword_edges_round_trip():
    w = GraphWord.from01("100001", 4)
    assert list(w.edges()) == [(0, 1), (2, 3)]
    assert GraphWord.from_edges(4, [(2, 3), (1, 0), (0, 1)]) == w
    assert w.weight == 2


def test_round_trip_exhaustive_small_n():
    # every canonical labeling of up to 6 vertices survives the round trip
    for n in range(2, 7):
        count = 0
        for labels in _all_rgs(n):
            count += 1
            assert decode_labeling(encode(labels)) == tuple(labels)
        assert count == code_size(n, 1)


def _all_rgs(n):
    # restricted growth strings, the canonical labelings
    def rec(prefix, used):
        if len(prefix) == n:
            yield list(prefix)
            return
        for lab in range(used + 1):
            yield from rec(prefix + [lab], max(used, lab + 1))
    yield from rec([], 0)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=7), min_size=2, max_size=8))
def test_round_trip_arbitrary_labels(labels):
    assert decode_labeling(encode(labels)) == canonical_labeling(labels)


def test_weight_matches_type_random():
    rng = random.Random(42)
    for _ in range(10 ** 4):
        n = rng.randint(2, 32)
        labels = [rng.randrange(1 + rng.randint(0, n - 1)) for _ in range(n)]
        assert encode(labels).weight == weight_of_type(type_of(labels))


def test_enumeration_counts_and_membership():
    for n in range(2, 9):
        for m in range(1, n + 1):
            words = list(enumerate_codewords(n, m))
            assert len(words) == code_size(n, m), (n, m)
            assert len(set(w.bits for w in words)) == len(words)
            for w in words:
                assert is_codeword(w, m)


def test_enumeration_examples():
    assert len(list(enumerate_codewords(4, 2))) == 4
    assert len(list(enumerate_codewords(4, 1))) == 15
    only = list(enumerate_codewords(3, 3))
    assert [w.to01() for w in only] == ["111"]


def test_enumeration_cap():
    with pytest.raises(EnumerationCapError):
        list(enumerate_codewords(8, 1, cap=1000))


def test_enumerate_labelings_of_type():
    for n in range(2, 8):
        for m in range(1, n + 1):
            for tp in enumerate_types(n, m):
                labs = list(enumerate_labelings_of_type(tp))
                assert len(labs) == count_of_type(tp), tp
                assert len(set(labs)) == len(labs)
                for lab in labs:
                    assert type_of(lab) == tp
                    assert canonical_labeling(lab) == lab
    # cached word variant agrees
    words = codewords_of_type((2, 2))
    assert sorted(w.to01() for w in words) == ["001100", "010010", "100001"]


def test_nonlinearity_witness():
    # XOR of the triangle {0,1,2} with the single edge (0,1) is a 2-path,
    # so membership is not closed under addition for any n here
    for n in range(3, 9):
        tri = [0, 0, 0] + list(range(1, n - 2))
        edge = [0, 0] + list(range(1, n - 1))
        g1, g2 = encode(tri), encode(edge)
        assert is_codeword(g1, 1) and is_codeword(g2, 1)
        xor = GraphWord(n, g1.bits ^ g2.bits)
        assert not is_codeword(xor, 1)


def test_sample_codeword_degenerate_types():
    rng = random.Random(9)
    for n in (2, 5, 9):
        allones = sample_codeword((n,), rng)
        assert allones.bits == (1 << math.comb(n, 2)) - 1
        allzero = sample_codeword(tuple([1] * n), rng)
        assert allzero.bits == 0


def test_sample_codeword_type22_frequencies():
    rng = random.Random(1234)
    counts = Counter(sample_codeword((2, 2), rng).to01() for _ in range(10 ** 5))
    assert set(counts) == {"100001", "010010", "001100"}
    for word, c in counts.items():
        assert abs(c / 10 ** 5 - 1 / 3) < 0.02, word


def test_sample_labeling_uniform_chi_square():
    # every type on up to 6 vertices; the canonical labeling is a bijective
    # proxy for the sampled codeword, so testing its frequencies is the same
    # test without the encoding cost
    rng = random.Random(20240817)
    draws = 10 ** 5
    for n in (4, 5, 6):
        for tp in enumerate_types(n, 1):
            k = count_of_type(tp)
            if k == 1:
                assert sample_labeling(tp, rng) == next(iter(enumerate_labelings_of_type(tp)))
                continue
            counts = Counter(sample_labeling(tp, rng) for _ in range(draws))
            assert set(counts) <= set(enumerate_labelings_of_type(tp))
            observed = [counts.get(lab, 0) for lab in enumerate_labelings_of_type(tp)]
            _, pvalue = stats.chisquare(observed)
            assert pvalue > 0.001, (tp, pvalue)


def test_sampling_is_deterministic_given_state():
    a = sample_codeword((3, 2), random.Random("s"))
    b = sample_codeword((3, 2), random.Random("s"))
    assert a == b
