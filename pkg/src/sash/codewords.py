"""Codewords as upper-triangular adjacency bit vectors.

A graph on n vertices is a word of length N = C(n,2): coordinate k holds
vertex pair (i,j), i < j, in lexicographic order (0,1),(0,2),...,(0,n-1),
(1,2),...,(n-2,n-1). A word is a codeword of C_{n,m} when the graph is a
disjoint union of cliques, each of size at least m. The same bit-vector
type carries arbitrary observed graphs, which need not be codewords.
"""

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .combinatorics import code_size, enumerate_types


class NotACodewordError(ValueError):
    """The graph is not a disjoint union of cliques."""


class EnumerationCapError(ValueError):
    """The code is too large for exhaustive enumeration."""


def pair_index(i, j, n):
    """Coordinate of pair (i,j), 0 <= i < j < n, in the fixed lex order."""
    if not (0 <= i < j < n):
        raise ValueError(f"need 0 <= i < j < n, got ({i},{j}) with n={n}")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class GraphWord:
    """Immutable bit vector over the C(n,2) vertex pairs of an n-vertex graph.

    bits packs coordinate k at the k-th least significant bit. Display
    order (to01/from01) puts coordinate 0 first, so the string for
    labels [0,0,1,1] on n=4 reads 100001.
    """
    n: int
    bits: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need n >= 2, got n={self.n}")
        if not (0 <= self.bits < 1 << self.length):
            raise ValueError(f"bits out of range for n={self.n}")

    @property
    def length(self):
        return math.comb(self.n, 2)

    @property
    def weight(self):
        return self.bits.bit_count()

    def to01(self):
        return "".join("1" if self.bits >> k & 1 else "0" for k in range(self.length))

    @classmethod
    def from01(cls, s, n):
        if len(s) != math.comb(n, 2):
            raise ValueError(f"expected {math.comb(n, 2)} bits for n={n}, got {len(s)}")
        bits = 0
        for k, c in enumerate(s):
            if c == "1":
                bits |= 1 << k
            elif c != "0":
                raise ValueError(f"bad bit character {c!r}")
        return cls(n, bits)

    @classmethod
    def from_edges(cls, n, edges):
        bits = 0
        for i, j in edges:
            if i > j:
                i, j = j, i
            bits |= 1 << pair_index(i, j, n)
        return cls(n, bits)

    def edges(self):
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.bits >> pair_index(i, j, self.n) & 1:
                    yield (i, j)


def canonical_labeling(labels):
    """Relabel clusters by order of first appearance: [5,5,2,7] -> (0,0,1,2)."""
    seen = {}
    out = []
    for lab in labels:
        if lab not in seen:
            seen[lab] = len(seen)
        out.append(seen[lab])
    return tuple(out)


def type_of(labels):
    """Clique sizes of a labeling, sorted non-increasing."""
    return tuple(sorted(Counter(labels).values(), reverse=True))


def encode(labels):
    """Codeword of a labeling: bit (i,j) set iff vertices i and j share a cluster."""
    n = len(labels)
    if n < 2:
        raise ValueError(f"need at least 2 vertices, got {n}")
    clusters = {}
    for v, lab in enumerate(labels):
        clusters.setdefault(lab, []).append(v)
    bits = 0
    for members in clusters.values():
        for i, j in combinations(members, 2):
            bits |= 1 << pair_index(i, j, n)
    return GraphWord(n, bits)


def decode_labeling(word):
    """Inverse of encode: cluster labeling of a disjoint-clique graph.

    Returns the canonical labeling (labels in order of first appearance).
    Raises NotACodewordError when any connected component is not a clique,
    e.g. a path of length 2.
    """
    n = word.n
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    edge_count = 0
    k = 0
    bits = word.bits
    for i in range(n):
        for j in range(i + 1, n):
            if bits >> k & 1:
                edge_count += 1
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
            k += 1
    sizes = Counter(find(v) for v in range(n))
    expected = sum(math.comb(s, 2) for s in sizes.values())
    if edge_count != expected:
        raise NotACodewordError(
            f"component edge count {edge_count} != {expected}; some component is not a clique")
    return canonical_labeling(find(v) for v in range(n))


def is_codeword(word, m):
    """True iff the graph is a disjoint union of cliques, each of size >= m."""
    if not (1 <= m <= word.n):
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={word.n}")
    try:
        labels = decode_labeling(word)
    except NotACodewordError:
        return False
    return min(type_of(labels)) >= m


def sample_labeling(t, rng):
    """Uniform set partition with clique sizes t, as a canonical labeling.

    Shuffles the vertices and cuts consecutive blocks of the given sizes.
    Every partition of type t arises from exactly prod(part_i!)*prod(mult_j!)
    orderings, a constant, so the draw is uniform over the type.
    """
    n = sum(t)
    verts = list(range(n))
    rng.shuffle(verts)
    labels = [0] * n
    pos = 0
    for c, size in enumerate(t):
        for v in verts[pos:pos + size]:
            labels[v] = c
        pos += size
    return canonical_labeling(labels)


def sample_codeword(t, rng):
    """Uniform codeword of partition type t; deterministic given the rng state."""
    return encode(sample_labeling(t, rng))


def enumerate_labelings_of_type(t):
    """All set partitions of [sum(t)] with clique sizes exactly t.

    Deterministic order: the smallest unassigned vertex anchors the next
    block; its companions run through combinations of the remaining
    vertices in sorted order, larger block sizes first.
    """
    n = sum(t)

    def rec(unassigned, sizes_left):
        if not unassigned:
            yield ()
            return
        anchor = unassigned[0]
        rest = unassigned[1:]
        for size in sorted(set(sizes_left), reverse=True):
            shrunk = list(sizes_left)
            shrunk.remove(size)
            for mates in combinations(rest, size - 1):
                block = (anchor,) + mates
                left = tuple(v for v in rest if v not in mates)
                for tail in rec(left, tuple(shrunk)):
                    yield (block,) + tail

    for blocks in rec(tuple(range(n)), tuple(t)):
        labels = [0] * n
        for c, block in enumerate(blocks):
            for v in block:
                labels[v] = c
        yield tuple(labels)


def enumerate_codewords(n, m, cap=10 ** 6):
    """Every codeword of C_{n,m} exactly once, in restricted-growth-string order.

    Walks the RGS tree (labels[i] <= 1 + max of earlier labels) and prunes
    branches whose open blocks can no longer all reach size m, which keeps
    the walk feasible when the code is small but the ambient Bell number
    is not. The yielded order equals full RGS enumeration filtered to
    min block size >= m.
    """
    size = code_size(n, m)
    if size > cap:
        raise EnumerationCapError(f"code_size({n},{m}) = {size} exceeds cap {cap}")

    labels = [0] * n
    sizes = []

    def rec(i, used, deficit):
        if i == n:
            if deficit == 0:
                yield encode(labels)
            return
        remaining = n - i
        for lab in range(used + 1):
            if lab < used:
                grow = sizes[lab]
                new_deficit = deficit - (1 if grow < m else 0)
            else:
                grow = 0
                new_deficit = deficit + m - 1
            if new_deficit > remaining - 1:
                continue
            labels[i] = lab
            if lab < used:
                sizes[lab] += 1
                yield from rec(i + 1, used, new_deficit)
                sizes[lab] -= 1
            else:
                sizes.append(1)
                yield from rec(i + 1, used + 1, new_deficit)
                sizes.pop()

    yield from rec(0, 0, 0)


@lru_cache(maxsize=None)
def codewords_of_type(t):
    """Cached tuple of the codewords with clique sizes exactly t."""
    return tuple(encode(lab) for lab in enumerate_labelings_of_type(t))
