"""Decoder behaviour: radial search, exhaustive soundness, pairwise sweep."""

import math
import random

import pytest

from sash.channel import ChannelParams, discrepancy
from sash.codewords import EnumerationCapError, GraphWord, encode, is_codeword
from sash.combinatorics import (SingleCodewordError, code_size,
                                count_of_type, enumerate_types,
                                min_discrepancy_closed_form)
from sash.decoder import (DecodeReport, SashConfig, brute_force_ml,
                          min_discrepancy_bruteforce, pairwise_minima, sash)

CH = ChannelParams(0.1, 0.3)
SYM = ChannelParams(0.2, 0.2)


def test_codeword_input_exhaustive():
    # decoding a clean codeword finds it at radius 0 and exits at radius 1
    y = encode([0, 0, 1, 1])
    rep = sash(y, SashConfig(n=4, m=2, channel=CH, exhaustive=True))
    assert rep.estimate == y
    assert rep.discrepancy_to_observation == 0.0
    assert rep.radius_at_exit == 1


def test_single_edge_example():
    y = GraphWord.from01("000001", 4)
    rep = sash(y, SashConfig(n=4, m=2, channel=CH, exhaustive=True))
    assert rep.estimate.to01() == "100001"
    assert rep.discrepancy_to_observation == pytest.approx(1.0)
    bf = brute_force_ml(y, 4, 2, CH)
    assert bf.estimate == rep.estimate
    assert bf.discrepancy_to_observation == pytest.approx(1.0)


def test_exhaustive_soundness_all_observations():
    # the early exit never loses the global minimum: sweep every possible
    # observation for codes whose word length is at most 15
    for n, m in ((4, 1), (4, 2), (5, 2), (6, 3)):
        length = math.comb(n, 2)
        cfg = SashConfig(n=n, m=m, channel=CH, exhaustive=True)
        for bits in range(1 << length):
            y = GraphWord(n, bits)
            rep = sash(y, cfg)
            bf = brute_force_ml(y, n, m, CH)
            assert rep.discrepancy_to_observation == pytest.approx(
                bf.discrepancy_to_observation, abs=1e-12), (n, m, bits)


def test_estimate_is_codeword_across_grid():
    rng = random.Random(8)
    trials = 0
    while trials < 10 ** 4:
        n = rng.randint(2, 10)
        m = rng.randint(1, n)
        t = rng.choice((1, 3))
        y = GraphWord(n, rng.getrandbits(math.comb(n, 2)))
        rep = sash(y, SashConfig(n=n, m=m, channel=CH, t=t, seed=trials))
        assert is_codeword(rep.estimate, m)
        assert rep.discrepancy_to_observation == pytest.approx(
            discrepancy(y, rep.estimate, CH))
        trials += 1


def test_candidate_accounting_sampling_mode():
    rng = random.Random(21)
    for trial in range(200):
        n = rng.randint(4, 9)
        m = rng.randint(1, 3)
        t = rng.choice((1, 2, 7))
        y = GraphWord(n, rng.getrandbits(math.comb(n, 2)))
        rep = sash(y, SashConfig(n=n, m=m, channel=CH, t=t, seed=trial))
        assert rep.candidates_checked == rep.types_visited * t


def test_candidate_accounting_exhaustive_mode():
    # every visited type contributes its full codeword count
    y = GraphWord.from01("000001", 4)
    rep = sash(y, SashConfig(n=4, m=1, channel=CH, exhaustive=True))
    by_weight = {}
    for tp in enumerate_types(4, 1):
        by_weight.setdefault(sum(math.comb(p, 2) for p in tp), []).append(tp)
    visited = [tp for w in range(-6, 7) for tp in by_weight.get(w, [])
               if abs(w - 1) < rep.radius_at_exit or w == 1]
    assert rep.candidates_checked == sum(count_of_type(tp) for tp in visited)


def test_determinism():
    y = GraphWord(8, random.Random(5).getrandbits(28))
    cfg = SashConfig(n=8, m=2, channel=CH, t=4, seed="fixed")
    assert sash(y, cfg) == sash(y, cfg)
    # and a different seed really does change the draws somewhere
    reports = {sash(y, SashConfig(n=8, m=2, channel=CH, t=1, seed=s)).estimate.bits
               for s in range(20)}
    assert len(reports) > 1


def test_monotone_in_t_per_trial():
    # the seed scheme nests draws: raising t can only extend each site's
    # candidate list, so the per-trial discrepancy never gets worse
    from sash.evaluation import run_trials
    for m in (4, 6, 8):
        small = run_trials(16, m, CH, t=1, trials=100, seed=0)
        large = run_trials(16, m, CH, t=100, trials=100, seed=0)
        for a, b in zip(small, large):
            assert b.delta_estimate <= a.delta_estimate + 1e-9
        mean_small = sum(o.delta_estimate for o in small) / 100
        mean_large = sum(o.delta_estimate for o in large) / 100
        assert mean_large <= mean_small + 1e-9


def test_fallback_single_codeword_all_zero_observation():
    # the lone codeword sits on the shell the loop cannot reach; the
    # decoder must still return it
    y = GraphWord(4, 0)
    rep = sash(y, SashConfig(n=4, m=3, channel=SYM, t=1, seed=0))
    assert rep.estimate.bits == (1 << 6) - 1
    assert rep.discrepancy_to_observation == pytest.approx(6.0)
    assert rep.radius_at_exit == 6


def test_config_validation():
    y = GraphWord(4, 0)
    with pytest.raises(ValueError, match="t >= 1"):
        sash(y, SashConfig(n=4, m=2, channel=CH, t=0))
    with pytest.raises(ValueError, match="1 <= m <= n"):
        sash(y, SashConfig(n=4, m=5, channel=CH))
    with pytest.raises(ValueError, match="decoder expects"):
        sash(GraphWord(5, 0), SashConfig(n=4, m=2, channel=CH))


def test_brute_force_ml_first_wins_on_tie():
    # all three two-pair codewords sit at distance 2 from the empty graph
    # under a symmetric channel; enumeration order starts at [0,0,1,1]
    y = GraphWord(4, 0)
    rep = brute_force_ml(y, 4, 2, SYM)
    assert rep.estimate == encode([0, 0, 1, 1])
    assert rep.discrepancy_to_observation == pytest.approx(2.0)
    assert rep.candidates_checked == 4
    assert isinstance(rep, DecodeReport)


def test_brute_force_ml_on_codeword():
    y = encode([0, 1, 1, 0, 2, 2])
    rep = brute_force_ml(y, 6, 2, CH)
    assert rep.estimate == y
    assert rep.discrepancy_to_observation == 0.0


def test_pairwise_minima_examples():
    assert pairwise_minima(4, 2, 1.77125).ordered == pytest.approx(4.0)
    assert pairwise_minima(7, 2, 1.77125).ordered == pytest.approx(4.0)
    assert pairwise_minima(6, 3, 1.0).ordered == pytest.approx(8.0)
    pm = pairwise_minima(4, 2, 1.77125)
    assert pm.symmetric >= pm.ordered
    assert min_discrepancy_bruteforce(4, 2, CH) == pytest.approx(
        min_discrepancy_closed_form(4, 2, CH.gamma).value)


def test_pairwise_minima_rejects():
    with pytest.raises(SingleCodewordError):
        pairwise_minima(5, 3, 1.0)
    with pytest.raises(EnumerationCapError):
        pairwise_minima(8, 1, 1.0, cap=100)
    with pytest.raises(ValueError):
        pairwise_minima(6, 2, 0.5)


def test_closed_form_spot_checks_against_sweep():
    for n, m, g in ((5, 2, 1.0), (6, 2, 3.0), (7, 3, 1.77125), (8, 4, 3.0)):
        got = pairwise_minima(n, m, g).ordered
        want = min_discrepancy_closed_form(n, m, g).value
        assert got == pytest.approx(want, rel=1e-9), (n, m, g)
    assert code_size(8, 4) == 36
