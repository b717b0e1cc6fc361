"""Community codes on the binary asymmetric channel.

Codewords are disjoint unions of cliques on n labelled vertices with
every clique of size at least m, written as bit vectors over the C(n,2)
vertex pairs. The package counts these codes exactly, models the
asymmetric channel whose maximum-likelihood rule is a weighted
discrepancy, decodes observations with an expanding-radius sampling
search, and evaluates recovery on planted partitions and on Zachary's
karate club.
"""

from .channel import (ChannelDomainError, ChannelParams, discrepancy, gamma,
                      hamming, transmit)
from .codewords import (EnumerationCapError, GraphWord, NotACodewordError,
                        canonical_labeling, decode_labeling, encode,
                        enumerate_codewords, is_codeword, pair_index,
                        sample_codeword, sample_labeling, type_of)
from .combinatorics import (MinDiscrepancyValue, SingleCodewordError, bell,
                            code_size, count_of_type, enumerate_types,
                            min_discrepancy_closed_form, rate,
                            weight_distribution, weight_of_type)
from .decoder import (DecodeReport, SashConfig, brute_force_ml,
                      min_discrepancy_bruteforce, pairwise_minima, sash)
from .evaluation import (ChannelEstimateError, DegenerateReferenceError,
                         SweepRow, TrialOutcome, ari, as_good, estimate_pq,
                         plant_partition, run_fixed_observation, run_sweep,
                         run_trial, run_trials)

__version__ = "0.1.0"

__all__ = [
    "ChannelDomainError", "ChannelParams", "discrepancy", "gamma", "hamming",
    "transmit", "EnumerationCapError", "GraphWord", "NotACodewordError",
    "canonical_labeling", "decode_labeling", "encode", "enumerate_codewords",
    "is_codeword", "pair_index", "sample_codeword", "sample_labeling",
    "type_of", "MinDiscrepancyValue", "SingleCodewordError", "bell",
    "code_size", "count_of_type", "enumerate_types",
    "min_discrepancy_closed_form", "rate", "weight_distribution",
    "weight_of_type", "DecodeReport", "SashConfig", "brute_force_ml",
    "min_discrepancy_bruteforce", "pairwise_minima", "sash",
    "ChannelEstimateError", "DegenerateReferenceError", "SweepRow",
    "TrialOutcome", "ari", "as_good", "estimate_pq", "plant_partition",
    "run_fixed_observation", "run_sweep", "run_trial", "run_trials",
    "__version__",
]
