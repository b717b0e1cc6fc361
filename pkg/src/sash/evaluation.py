"""Planted-partition experiments and scoring.

A trial plants a random codeword, pushes it through the channel, decodes
the observation, and scores the estimate three ways: exact recovery,
discrepancy at least as good as the planted word's (the decoder cannot
be blamed for preferring a strictly better explanation), and adjusted
Rand index between the planted and recovered labelings.

Randomness is derived per trial from string seeds, so a sweep's results
do not depend on worker count or on which t values run first, and the
planted instances for a given (seed, trial) are shared across t.
"""

import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .channel import discrepancy, transmit
from .codewords import GraphWord, decode_labeling, encode, sample_labeling
from .combinatorics import count_of_type, enumerate_types
from .decoder import SashConfig, sash


class DegenerateReferenceError(ValueError):
    """The reference labeling has no within pairs or no between pairs."""


class ChannelEstimateError(ValueError):
    """Empirical edge densities violate the channel domain."""


@dataclass(frozen=True)
class TrialOutcome:
    sent: GraphWord
    observed: GraphWord
    estimate: GraphWord
    exact: bool
    as_good: bool
    ari: float
    delta_sent: float
    delta_estimate: float


def plant_partition(n, m, ch, rng, prior="types"):
    """Plant a random codeword and observe it through the channel.

    Returns (labeling, observation). prior "types" draws the partition
    type uniformly from the types of C_{n,m} and then a uniform partition
    of that type; prior "codewords" weights types by their codeword
    counts, giving a uniform draw over the whole code.
    """
    types = enumerate_types(n, m)
    if prior == "types":
        tp = types[rng.randrange(len(types))]
    elif prior == "codewords":
        tp = rng.choices(types, weights=[count_of_type(t) for t in types])[0]
    else:
        raise ValueError(f"unknown prior {prior!r}")
    labeling = sample_labeling(tp, rng)
    observed = transmit(encode(labeling), ch, rng)
    return labeling, observed


def as_good(observed, sent, estimate, ch):
    """True when the estimate explains the observation at least as well."""
    return discrepancy(observed, estimate, ch) <= discrepancy(observed, sent, ch) + 1e-9


def ari(a, b):
    """Adjusted Rand index between two labelings of the same vertices.

    Pure pair counting; labels may be anything hashable and need not be
    canonical. When expected and maximum index coincide (both labelings
    trivial: all singletons or a single cluster), the usual formula is
    0/0; identical partitions then score 1.0 and differing ones 0.0.
    """
    if len(a) != len(b):
        raise ValueError(f"labeling lengths differ: {len(a)} vs {len(b)}")
    n = len(a)
    if n < 2:
        raise ValueError(f"need at least 2 vertices, got {n}")
    together = sum(math.comb(c, 2) for c in Counter(zip(a, b)).values())
    sum_a = sum(math.comb(c, 2) for c in Counter(a).values())
    sum_b = sum(math.comb(c, 2) for c in Counter(b).values())
    total = math.comb(n, 2)
    if (sum_a + sum_b) * total == 2 * sum_a * sum_b:
        groups_a = Counter(a)
        groups_b = Counter(b)
        same = sorted(groups_a.values()) == sorted(groups_b.values())
        return 1.0 if same else 0.0
    expected = sum_a * sum_b / total
    maximum = (sum_a + sum_b) / 2
    return (together - expected) / (maximum - expected)


def estimate_pq(graph, labels):
    """Empirical channel parameters of a graph against a reference labeling.

    p_hat is the between-cluster edge density, q_hat the within-cluster
    non-edge density, both floored at 1e-6 to keep gamma finite. Raises
    DegenerateReferenceError when the labeling yields no within or no
    between pairs, and ChannelEstimateError when the densities land
    outside the channel domain; no silent adjustment.
    """
    n = graph.n
    if len(labels) != n:
        raise ValueError(f"labeling has {len(labels)} vertices, graph has {n}")
    within_pairs = between_pairs = within_edges = between_edges = 0
    bits = graph.bits
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            edge = bits >> k & 1
            if labels[i] == labels[j]:
                within_pairs += 1
                within_edges += edge
            else:
                between_pairs += 1
                between_edges += edge
            k += 1
    if within_pairs == 0 or between_pairs == 0:
        raise DegenerateReferenceError(
            f"reference labeling has {within_pairs} within and {between_pairs} between pairs")
    p_hat = max(between_edges / between_pairs, 1e-6)
    q_hat = max(1 - within_edges / within_pairs, 1e-6)
    if p_hat > q_hat:
        raise ChannelEstimateError(
            f"estimated p={p_hat:.6g} > q={q_hat:.6g}: graph is denser between "
            f"clusters than within")
    if p_hat + q_hat >= 1:
        raise ChannelEstimateError(
            f"estimated p+q={p_hat + q_hat:.6g} >= 1: within-cluster density "
            f"below the between-cluster noise floor")
    return p_hat, q_hat


def run_trial(n, m, ch, t, seed, trial, exhaustive=False, prior="types"):
    """One planted trial. The plant draws depend on (seed, trial) only, so
    every t decodes the same instance; the decoder seed also excludes t,
    so larger t replays the same draws and appends more."""
    plant_rng = random.Random(f"{seed}|{trial}|plant")
    labeling, observed = plant_partition(n, m, ch, plant_rng, prior)
    sent = encode(labeling)
    cfg = SashConfig(n=n, m=m, channel=ch, t=t, exhaustive=exhaustive,
                     seed=f"{seed}|{trial}")
    report = sash(observed, cfg)
    delta_sent = discrepancy(observed, sent, ch)
    delta_estimate = report.discrepancy_to_observation
    return TrialOutcome(
        sent=sent,
        observed=observed,
        estimate=report.estimate,
        exact=report.estimate.bits == sent.bits,
        as_good=delta_estimate <= delta_sent + 1e-9,
        ari=ari(labeling, decode_labeling(report.estimate)),
        delta_sent=delta_sent,
        delta_estimate=delta_estimate,
    )


def _trial_worker(args):
    return run_trial(*args)


def _map_trials(worker, arglist, threads):
    if threads <= 1 or len(arglist) <= 1:
        return [worker(args) for args in arglist]
    chunk = max(1, len(arglist) // (threads * 4))
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, arglist, chunksize=chunk))


def run_trials(n, m, ch, t, trials, seed, threads=1, exhaustive=False, prior="types"):
    """All outcomes for one (m, t) cell, trial order preserved."""
    arglist = [(n, m, ch, t, seed, trial, exhaustive, prior) for trial in range(trials)]
    return _map_trials(_trial_worker, arglist, threads)


@dataclass(frozen=True)
class SweepRow:
    t: int
    exact_rate: float
    as_good_rate: float
    mean_ari: float


def run_sweep(n, m, ch, t_values, trials, seed, threads=1, prior="types"):
    """Aggregate rates for each t in t_values, same planted instances per t."""
    rows = []
    for t in t_values:
        outcomes = run_trials(n, m, ch, t, trials, seed, threads, prior=prior)
        rows.append(SweepRow(
            t=t,
            exact_rate=sum(o.exact for o in outcomes) / trials,
            as_good_rate=sum(o.as_good for o in outcomes) / trials,
            mean_ari=sum(o.ari for o in outcomes) / trials,
        ))
    return rows


def _fixed_worker(args):
    observed, reference, m, ch, t, seed, trial = args
    sent = encode(reference)
    cfg = SashConfig(n=observed.n, m=m, channel=ch, t=t, seed=f"{seed}|{trial}")
    report = sash(observed, cfg)
    delta_sent = discrepancy(observed, sent, ch)
    delta_estimate = report.discrepancy_to_observation
    return TrialOutcome(
        sent=sent,
        observed=observed,
        estimate=report.estimate,
        exact=report.estimate.bits == sent.bits,
        as_good=delta_estimate <= delta_sent + 1e-9,
        ari=ari(reference, decode_labeling(report.estimate)),
        delta_sent=delta_sent,
        delta_estimate=delta_estimate,
    )


def run_fixed_observation(observed, reference, m, ch, t, trials, seed, threads=1):
    """Decode one fixed observed graph repeatedly against a reference
    labeling, varying only the decoder seed. Used for real graphs where
    the ground truth is a labeling rather than a planted codeword."""
    arglist = [(observed, tuple(reference), m, ch, t, seed, trial)
               for trial in range(trials)]
    return _map_trials(_fixed_worker, arglist, threads)
