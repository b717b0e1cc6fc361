"""Zachary's karate club graph with the two-faction split.

34 members, 78 friendship edges, recorded before the club split; the
faction labels are the post-split memberships (17 stayed with the
instructor, vertex 0, and 17 left with the administrator, vertex 33).
Frozen here so the benchmark needs no network or dataset dependency;
the fixture was extracted once with tests/oracles/karate_fixture.py.
"""

from .codewords import GraphWord
from .evaluation import estimate_pq

EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8),
    (0, 10), (0, 11), (0, 12), (0, 13), (0, 17), (0, 19), (0, 21),
    (0, 31), (1, 2), (1, 3), (1, 7), (1, 13), (1, 17), (1, 19),
    (1, 21), (1, 30), (2, 3), (2, 7), (2, 8), (2, 9), (2, 13),
    (2, 27), (2, 28), (2, 32), (3, 7), (3, 12), (3, 13), (4, 6),
    (4, 10), (5, 6), (5, 10), (5, 16), (6, 16), (8, 30), (8, 32),
    (8, 33), (9, 33), (13, 33), (14, 32), (14, 33), (15, 32),
    (15, 33), (18, 32), (18, 33), (19, 33), (20, 32), (20, 33),
    (22, 32), (22, 33), (23, 25), (23, 27), (23, 29), (23, 32),
    (23, 33), (24, 25), (24, 27), (24, 31), (25, 31), (26, 29),
    (26, 33), (27, 33), (28, 31), (28, 33), (29, 32), (29, 33),
    (30, 32), (30, 33), (31, 32), (31, 33), (32, 33),
)

FACTIONS = (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0,
            1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1)

N_VERTICES = 34


def load_graph():
    """The club graph as a word over the C(34,2) = 561 vertex pairs."""
    return GraphWord.from_edges(N_VERTICES, EDGES)


def channel_estimate():
    """(p_hat, q_hat) of the graph against the faction labeling."""
    return estimate_pq(load_graph(), FACTIONS)
