"""Decoders: the radial sampling search and brute-force references.

sash() walks Hamming shells outward from the observed weight. At radius
delta it looks at the codeword weights w - delta and w + delta, samples t
candidates from every partition type of that weight (or enumerates them
all in exhaustive mode), and keeps the first strict improvement. The
walk stops as soon as the radius reaches the best discrepancy found,
since gamma >= 1 makes discrepancy(y, x) >= |wt(y) - wt(x)|: no farther
shell can beat the incumbent.

brute_force_ml() scans the whole code and is the correctness reference;
pairwise_minima() sweeps all codeword pairs for the minimum discrepancy
of a code.
"""

import math
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .channel import ChannelParams, discrepancy
from .codewords import (EnumerationCapError, GraphWord, codewords_of_type,
                        enumerate_codewords)
from .combinatorics import (SingleCodewordError, code_size, enumerate_types,
                            weight_of_type)


class EmptyCodeError(ValueError):
    """No codeword weight exists; unreachable while 1 <= m <= n holds."""


@dataclass(frozen=True)
class SashConfig:
    """Decoder knobs. seed may be an int or a string; it scopes every draw."""
    n: int
    m: int
    channel: ChannelParams
    t: int = 1
    exhaustive: bool = False
    seed: object = 0


@dataclass(frozen=True)
class DecodeReport:
    estimate: GraphWord
    discrepancy_to_observation: float
    candidates_checked: int
    radius_at_exit: int
    types_visited: int


@lru_cache(maxsize=None)
def _types_by_weight(n, m):
    by_weight = {}
    for tp in enumerate_types(n, m):
        by_weight.setdefault(weight_of_type(tp), []).append(tp)
    return by_weight


@lru_cache(maxsize=None)
def _pair_bit_table(n):
    table = [[0] * n for _ in range(n)]
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            table[i][j] = 1 << k
            table[j][i] = 1 << k
            k += 1
    return table


def _sample_type_bits(tp, n, rng, table):
    """Bits of encode(sample_labeling(tp, rng)), skipping the labeling.

    Consumes the rng identically to sample_labeling (one shuffle), and a
    consecutive block's pair set does not depend on vertex order, so the
    result is bit-for-bit the draw the public sampler would produce.
    """
    verts = list(range(n))
    rng.shuffle(verts)
    bits = 0
    pos = 0
    for size in tp:
        block = verts[pos:pos + size]
        pos += size
        for a in range(size):
            row = table[block[a]]
            for b in range(a + 1, size):
                bits |= row[block[b]]
    return bits


def _disc_bits(ybits, xbits, mask, gma):
    d10 = (ybits & (mask ^ xbits)).bit_count()
    d01 = (xbits & (mask ^ ybits)).bit_count()
    return gma * d10 + d01


def sash(y, cfg):
    """Decode observation y by expanding-radius type sampling.

    Candidate draws come from a fresh rng seeded with
    "{seed}:{delta}:{weight}:{type}", so a run is reproducible and, for
    a fixed seed, the first k draws at any site do not depend on t.
    Raising t therefore only extends each site's candidate list, which
    makes the returned discrepancy non-increasing in t.
    """
    n, m = cfg.n, cfg.m
    if not (1 <= m <= n):
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    if y.n != n:
        raise ValueError(f"observation has n={y.n}, decoder expects n={n}")
    if not cfg.exhaustive and cfg.t < 1:
        raise ValueError(f"need t >= 1, got t={cfg.t}")

    by_weight = _types_by_weight(n, m)
    if not by_weight:
        raise EmptyCodeError(f"no codeword weights for n={n}, m={m}")

    gma = cfg.channel.gamma
    length = y.length
    mask = (1 << length) - 1
    ybits = y.bits
    w = y.weight

    rho = float(length)
    best_bits = None
    candidates = 0
    visited = 0
    delta = 0
    while delta < rho:
        shells = (w,) if delta == 0 else (w - delta, w + delta)
        for shell_weight in shells:
            types = by_weight.get(shell_weight)
            if not types:
                continue
            for tp in types:
                visited += 1
                if cfg.exhaustive:
                    for cand in codewords_of_type(tp):
                        candidates += 1
                        d = _disc_bits(ybits, cand.bits, mask, gma)
                        if d < rho:
                            rho = d
                            best_bits = cand.bits
                else:
                    site = f"{cfg.seed}:{delta}:{shell_weight}:{','.join(map(str, tp))}"
                    rng = random.Random(site)
                    table = _pair_bit_table(n)
                    for _ in range(cfg.t):
                        candidates += 1
                        cand_bits = _sample_type_bits(tp, n, rng, table)
                        d = _disc_bits(ybits, cand_bits, mask, gma)
                        if d < rho:
                            rho = d
                            best_bits = cand_bits
        delta += 1

    if best_bits is None:
        # Only the all-zeros observation against a single-codeword code
        # (n < 2m) gets here: the lone weight C(n,2) sits on the shell the
        # loop never reaches, because delta stops at the initial rho. The
        # complete graph is in every code, so return it.
        visited += 1
        candidates += 1
        best_bits = mask

    estimate = GraphWord(n, best_bits)
    return DecodeReport(
        estimate=estimate,
        discrepancy_to_observation=discrepancy(y, estimate, cfg.channel),
        candidates_checked=candidates,
        radius_at_exit=delta,
        types_visited=visited,
    )


def brute_force_ml(y, n, m, ch, cap=10 ** 6):
    """Scan the whole code for the discrepancy minimiser.

    Ties go to the earliest codeword in enumeration order. The report's
    radius_at_exit is 0: there is no radial sweep to exit from.
    """
    if y.n != n:
        raise ValueError(f"observation has n={y.n}, expected n={n}")
    if not (1 <= m <= n):
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    best = None
    best_d = math.inf
    count = 0
    for cand in enumerate_codewords(n, m, cap):
        count += 1
        d = discrepancy(y, cand, ch)
        if d < best_d:
            best_d = d
            best = cand
    return DecodeReport(
        estimate=best,
        discrepancy_to_observation=best_d,
        candidates_checked=count,
        radius_at_exit=0,
        types_visited=len(enumerate_types(n, m)),
    )


@dataclass(frozen=True)
class PairwiseMinima:
    """Minimum discrepancy over codeword pairs, both conventions.

    ordered minimises delta(y, x) over ordered pairs y != x; symmetric
    minimises max(delta(y, x), delta(x, y)) over unordered pairs. They
    differ only when gamma > 1 favours one direction of a closest pair.
    """
    ordered: float
    symmetric: float


@lru_cache(maxsize=None)
def _word_matrix(n, m, cap):
    words = list(enumerate_codewords(n, m, cap))
    length = math.comb(n, 2)
    mat = np.zeros((len(words), length), dtype=np.float64)
    for row, word in enumerate(words):
        bits = word.bits
        for k in range(length):
            if bits >> k & 1:
                mat[row, k] = 1.0
    return mat


def pairwise_minima(n, m, gma, cap=10 ** 4):
    """Sweep all codeword pairs of C_{n,m} at a given gamma.

    Works on the overlap matrix X @ X.T in row chunks: for words y, x
    with weights w_y, w_x and overlap o, d10 = w_y - o and d01 = w_x - o.
    Exact in float64 since every count is a small integer.
    """
    if gma < 1:
        raise ValueError(f"need gamma >= 1, got {gma}")
    size = code_size(n, m)
    if size < 2:
        raise SingleCodewordError(f"C_{{{n},{m}}} has {size} codeword(s)")
    if size > cap:
        raise EnumerationCapError(f"code_size({n},{m}) = {size} exceeds cap {cap}")

    mat = _word_matrix(n, m, cap)
    weights = mat.sum(axis=1)
    ordered = math.inf
    symmetric = math.inf
    chunk = 1024
    for start in range(0, size, chunk):
        stop = min(start + chunk, size)
        overlap = mat[start:stop] @ mat.T
        d10 = weights[start:stop, None] - overlap
        d01 = weights[None, :] - overlap
        fwd = gma * d10 + d01
        rev = gma * d01 + d10
        rows = np.arange(stop - start)
        fwd[rows, np.arange(start, stop)] = math.inf
        rev[rows, np.arange(start, stop)] = math.inf
        ordered = min(ordered, float(fwd.min()))
        symmetric = min(symmetric, float(np.maximum(fwd, rev).min()))
    return PairwiseMinima(ordered=ordered, symmetric=symmetric)


def min_discrepancy_bruteforce(n, m, ch, cap=10 ** 4):
    """Minimum discrepancy of C_{n,m} over ordered codeword pairs."""
    return pairwise_minima(n, m, ch.gamma, cap).ordered
