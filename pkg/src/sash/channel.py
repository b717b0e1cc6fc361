"""Binary asymmetric channel and its discrepancy.

The channel flips a 0 to 1 with probability p and a 1 to 0 with
probability q, independently per coordinate. For p <= q < 1 - p the
weighting

    gamma = ln(p / (1 - q)) / ln(q / (1 - p))

is >= 1, with equality exactly at p = q, and maximum-likelihood decoding
of an observation y is minimisation of

    discrepancy(y, x) = gamma * d10(y, x) + d01(y, x)

over codewords x, where d_ab counts coordinates with y_i = a, x_i = b.
Both error kinds are penalised, spurious ones (d10) more heavily on an
asymmetric channel.
"""

import math
from dataclasses import dataclass


class ChannelDomainError(ValueError):
    """Channel parameters outside 0 < p <= q, p + q < 1."""


def gamma(p, q):
    """Discrepancy weighting for the channel (p, q). Equals 1 iff p = q."""
    if not p > 0:
        raise ChannelDomainError(f"need p > 0, got p={p}")
    if not p <= q:
        raise ChannelDomainError(f"need p <= q, got p={p}, q={q}")
    if not p + q < 1:
        raise ChannelDomainError(f"need p + q < 1, got p+q={p + q}")
    return math.log(p / (1 - q)) / math.log(q / (1 - p))


@dataclass(frozen=True)
class ChannelParams:
    """Validated channel with its gamma cached at construction."""
    p: float
    q: float
    gamma: float = None

    def __post_init__(self):
        object.__setattr__(self, "gamma", gamma(self.p, self.q))


def discrepancy(y, x, ch):
    """gamma-weighted distance from observation y to codeword x.

    Counts d10 (y has a 1 where x has a 0) and d01 (y misses a 1 of x)
    by bit masking, so cost is one popcount per direction.
    """
    if y.n != x.n:
        raise ValueError(f"length mismatch: y has n={y.n}, x has n={x.n}")
    mask = (1 << y.length) - 1
    d10 = (y.bits & (mask ^ x.bits)).bit_count()
    d01 = (x.bits & (mask ^ y.bits)).bit_count()
    return ch.gamma * d10 + d01


def hamming(y, x):
    """Plain Hamming distance; equals discrepancy exactly when p = q."""
    if y.n != x.n:
        raise ValueError(f"length mismatch: y has n={y.n}, x has n={x.n}")
    return (y.bits ^ x.bits).bit_count()


def transmit(x, ch, rng):
    """Pass word x through the channel once, one rng draw per coordinate."""
    out = 0
    bits = x.bits
    for k in range(x.length):
        if bits >> k & 1:
            if rng.random() >= ch.q:
                out |= 1 << k
        else:
            if rng.random() < ch.p:
                out |= 1 << k
    return type(x)(x.n, out)
