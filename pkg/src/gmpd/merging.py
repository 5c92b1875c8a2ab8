"""Certified cycle-merge search shared by the extended-digraph and
irreducible-factor engines.

Candidates are splice shapes: the two cycles interleaved as one segment each
(two junctions) or two segments each (four junctions).  Every candidate is
checked by the walk validator and an arc-count floor before it is accepted;
when no shape fits and the union is small enough, an exact subset search
settles the question."""

from typing import Iterator, Optional

from .digraph import PartitionedDigraph, induce
from .errors import HypothesisUnmet, TooLarge
from .walks import GWalk, canonical_cycle, insert_by_partners, open_cycle, validate_walk, walk_length

DP_FALLBACK_CAP = 18


def _rot(seq: tuple, i: int) -> tuple:
    return seq[i:] + seq[:i]


def _interleave_two(a: tuple, b: tuple) -> Iterator[tuple]:
    for i in range(len(a)):
        ra = _rot(a, i)
        for j in range(len(b)):
            yield ra + _rot(b, j)


def _interleave_four(a: tuple, b: tuple) -> Iterator[tuple]:
    p, q = len(a), len(b)
    for i1 in range(p):
        for i2 in range(i1 + 1, p):
            a1 = a[i1:i2]
            a2 = a[i2:] + a[:i1]
            for j1 in range(q):
                for j2 in range(j1 + 1, q):
                    b1 = b[j1:j2]
                    b2 = b[j2:] + b[:j1]
                    yield a1 + b1 + a2 + b2
                    yield a1 + b2 + a2 + b1


def _cycle_len_if_valid(d: PartitionedDigraph, seq: tuple) -> Optional[int]:
    part = d.part_vector
    arcs = d.arcs
    length = 0
    m = len(seq)
    for i in range(m):
        u, v = seq[i], seq[(i + 1) % m]
        if (u, v) in arcs:
            length += 1
        elif part[u - 1] != part[v - 1]:
            return None
    return length


def certified_merge_cycles(
    d: PartitionedDigraph, c1: GWalk, c2: GWalk, floor: int
) -> Optional[GWalk]:
    """A cycle on the union of the two disjoint cycles with at least `floor`
    arcs, or None when provably none exists (exact for small unions)."""
    if set(c1.seq) & set(c2.seq):
        raise ValueError("cycles must be vertex-disjoint")
    best = None
    for cand in _interleave_two(c1.seq, c2.seq):
        length = _cycle_len_if_valid(d, cand)
        if length is not None and length >= floor:
            best = cand
            break
    if best is None:
        for host, piece_cycle in ((c1, c2), (c2, c1)):
            for i in range(len(piece_cycle.seq)):
                piece = open_cycle(piece_cycle, i)
                try:
                    merged = insert_by_partners(d, piece, host)
                except HypothesisUnmet:
                    continue
                if walk_length(d, merged) >= floor:
                    best = merged.seq
                    break
            if best is not None:
                break
    if best is None:
        for cand in _interleave_four(c1.seq, c2.seq):
            length = _cycle_len_if_valid(d, cand)
            if length is not None and length >= floor:
                best = cand
                break
    if best is None:
        return _dp_merge(d, set(c1.seq) | set(c2.seq), floor)
    walk = canonical_cycle(GWalk("cycle", best))
    validate_walk(d, walk)
    assert walk_length(d, walk) >= floor
    return walk


def _dp_merge(d: PartitionedDigraph, vertices, floor: int) -> Optional[GWalk]:
    from .search import oracle_longest_spanning_gcycle

    if len(vertices) > DP_FALLBACK_CAP:
        raise TooLarge(len(vertices), DP_FALLBACK_CAP)
    sub, old = induce(d, vertices)
    res = oracle_longest_spanning_gcycle(sub, threshold=DP_FALLBACK_CAP)
    if res is None or res[0] < floor:
        return None
    walk = canonical_cycle(GWalk("cycle", tuple(old[v - 1] for v in res[1].seq)))
    validate_walk(d, walk)
    assert walk_length(d, walk) >= floor
    return walk


def certified_multi_merge(
    d: PartitionedDigraph, cycles, floor: int
) -> Optional[GWalk]:
    """Spanning cycle over the union of several disjoint cycles with at least
    `floor` arcs, found by exact subset search on the union."""
    vertices = set()
    for c in cycles:
        vertices |= set(c.seq)
    return _dp_merge(d, vertices, floor)
