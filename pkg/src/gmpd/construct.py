"""Constructive existence results: short good walks, longest generalized
paths, vertex absorption into cycles, and factor growth."""

from itertools import combinations
from typing import List, Optional, Tuple

from .digraph import PartitionedDigraph, contract_partite, induce, is_strong
from .errors import NotSemicomplete, NotStrong
from .factor import max_arc_gcycle_factor, max_arc_path_cycle_subdigraph
from .search import oracle_longest_gpath
from .walks import (
    GFactor,
    GWalk,
    canonical_cycle,
    classify_pair,
    insert_piece,
    is_good,
    is_spanning,
    validate_factor,
    validate_walk,
    walk_length,
)


def _require_semicomplete(s: PartitionedDigraph):
    for u, v in combinations(s.vertices(), 2):
        if (u, v) not in s.arcs and (v, u) not in s.arcs:
            raise NotSemicomplete(f"pair ({u},{v}) is non-adjacent")


def tournament_ham_path(s: PartitionedDigraph) -> GWalk:
    """Spanning real path of a semicomplete digraph, by insertion."""
    _require_semicomplete(s)
    seq: List[int] = [1]
    for v in range(2, s.n + 1):
        if (v, seq[0]) in s.arcs:
            seq.insert(0, v)
            continue
        placed = False
        for i in range(len(seq) - 1):
            if (seq[i], v) in s.arcs and (v, seq[i + 1]) in s.arcs:
                seq.insert(i + 1, v)
                placed = True
                break
        if not placed:
            seq.append(v)
    walk = GWalk("path", tuple(seq))
    assert all((u, w) in s.arcs for u, w in walk.pairs())
    return walk


def _first_three_cycle(s: PartitionedDigraph) -> Optional[Tuple[int, int, int]]:
    for a in s.vertices():
        for b in sorted(s.out(a)):
            for c in sorted(s.out(b)):
                if c != a and (c, a) in s.arcs:
                    return a, b, c
    return None


def tournament_ham_cycle(s: PartitionedDigraph) -> GWalk:
    """Spanning real cycle of a strong semicomplete digraph.

    Grows a short cycle by single-vertex insertion; when no outside vertex
    is insertable the outside splits into a dominating side and a dominated
    side, and strongness supplies an arc between them that lets two vertices
    enter at once.
    """
    _require_semicomplete(s)
    if not is_strong(s):
        raise NotStrong("Hamiltonian cycle needs a strong semicomplete digraph")
    if s.n == 1:
        raise NotStrong("a cycle needs at least two vertices")
    if s.n == 2:
        return canonical_cycle(GWalk("cycle", (1, 2)))
    tri = _first_three_cycle(s)
    if tri is None:
        # strong semicomplete digraphs on >= 3 vertices contain a 3-cycle
        raise AssertionError("no 3-cycle found in a strong semicomplete digraph")
    seq = list(tri)
    while len(seq) < s.n:
        outside = [v for v in s.vertices() if v not in seq]
        inserted = False
        for v in outside:
            pos = None
            for i in range(len(seq)):
                a, b = seq[i], seq[(i + 1) % len(seq)]
                if (a, v) in s.arcs and (v, b) in s.arcs:
                    pos = i
                    break
            if pos is not None:
                seq.insert(pos + 1, v)
                inserted = True
                break
        if inserted:
            continue
        dominated = [v for v in outside if all((c, v) in s.arcs for c in seq)]
        pair = None
        for w in dominated:
            for z in sorted(s.out(w)):
                if z in outside and z not in dominated:
                    pair = (w, z)
                    break
            if pair:
                break
        assert pair is not None, "strongness guarantees an escape arc"
        w, z = pair
        # every cycle vertex dominates w; z dominates every cycle vertex
        seq[1:1] = [w, z]
    walk = canonical_cycle(GWalk("cycle", tuple(seq)))
    assert all((u, v) in s.arcs for u, v in walk.pairs())
    return walk


def _decode_contracted_arcs(d: PartitionedDigraph, set_order: List[int], closed: bool):
    """Pick one base arc per contracted step and lay out the walk.

    Each partite set contributes the head of its incoming chosen arc and the
    tail of its outgoing one; when those differ they form a jump pair.
    """
    k = len(set_order)
    chosen = []
    steps = k if closed else k - 1
    for idx in range(steps):
        i = set_order[idx]
        j = set_order[(idx + 1) % k]
        arc = min(
            (u, v) for (u, v) in d.arcs if d.part(u) == i and d.part(v) == j
        )
        chosen.append(arc)
    seq: List[int] = []
    for idx in range(k):
        incoming = chosen[idx - 1][1] if (closed or idx > 0) else None
        outgoing = chosen[idx][0] if (closed or idx < k - 1) else None
        if incoming is None:
            seq.append(outgoing)
        elif outgoing is None or incoming == outgoing:
            seq.append(incoming)
        else:
            seq.extend([incoming, outgoing])
    return seq


def good_gcycle_length_c(d: PartitionedDigraph) -> GWalk:
    """Good generalized cycle with exactly c arcs, one partite set per step."""
    d.require_smd()
    if not is_strong(d):
        raise NotStrong("needs a strong instance")
    if d.c == 1:
        raise NotStrong("a single partite set is never strong")
    dc = contract_partite(d)
    ham = tournament_ham_cycle(dc)
    seq = _decode_contracted_arcs(d, list(ham.seq), closed=True)
    walk = canonical_cycle(GWalk("cycle", tuple(seq)))
    assert walk_length(d, walk) == d.c and is_good(d, walk)
    return walk


def good_gpath_length_c_minus_1(d: PartitionedDigraph) -> GWalk:
    """Good generalized path with exactly c-1 arcs."""
    d.require_smd()
    if d.c == 1:
        return GWalk("path", (1,))
    dc = contract_partite(d)
    ham = tournament_ham_path(dc)
    seq = _decode_contracted_arcs(d, list(ham.seq), closed=False)
    walk = GWalk("path", tuple(seq))
    assert walk_length(d, walk) == d.c - 1 and is_good(d, walk)
    return walk


def _splice_candidates(p_seq: tuple, c_seq: tuple):
    """Merge shapes from easiest to most entangled: concatenations with the
    cycle opened anywhere, single crossovers, then the double-crossover shape
    that pulls one cycle vertex in front of a path vertex."""
    t = len(c_seq)
    openings = [c_seq[i:] + c_seq[:i] for i in range(t)]
    for op in openings:
        yield op + p_seq
    for op in openings:
        yield p_seq + op
    s = len(p_seq)
    for a in range(1, s):
        for op in openings:
            yield p_seq[:a] + op + p_seq[a:]
    for i in range(1, s):
        for j in range(t):
            moved = (c_seq[(j + 1) % t], p_seq[i])
            rest = tuple(c_seq[(j + 1 + k) % t] for k in range(1, t))
            yield p_seq[:i] + moved + rest + p_seq[i + 1:]


def merge_path_cycle(d: PartitionedDigraph, p: GWalk, c: GWalk) -> GWalk:
    """Fold a disjoint cycle into a path without losing arcs.

    Tries the finitely many splice shapes the existence argument uses and
    certifies the first candidate that validates with enough arcs; an exact
    subset search over the union is the last resort.
    """
    if p.kind != "path" or c.kind != "cycle":
        raise ValueError("merge_path_cycle takes a path and a cycle")
    if set(p.seq) & set(c.seq):
        raise ValueError("walks must be vertex-disjoint")
    target = walk_length(d, p) + walk_length(d, c)
    part = d.part_vector
    arcs = d.arcs

    def valid_len(seq) -> Optional[int]:
        length = 0
        for i in range(len(seq) - 1):
            u, v = seq[i], seq[i + 1]
            if (u, v) in arcs:
                length += 1
            elif part[u - 1] != part[v - 1]:
                return None
        return length

    for cand in _splice_candidates(p.seq, c.seq):
        length = valid_len(cand)
        if length is not None and length >= target:
            out = GWalk("path", cand)
            validate_walk(d, out)
            return out
    sub, old = induce(d, set(p.seq) | set(c.seq))
    arcs_best, walk = oracle_longest_gpath(sub)
    assert arcs_best >= target, "a no-loss merge always exists"
    mapped = GWalk("path", tuple(old[v - 1] for v in walk.seq))
    assert len(walk.seq) == sub.n
    return mapped


def longest_gpath(d: PartitionedDigraph) -> GWalk:
    """Spanning generalized path attaining the maximum arc count.

    Builds the maximum-arc spanning path-plus-cycles cover, then folds each
    cycle into the path; the fold never loses arcs, and the cover total is an
    upper bound for every generalized path, so the result is certified.
    """
    d.require_smd()
    path, remainder = max_arc_path_cycle_subdigraph(d)
    total = walk_length(d, path) + remainder.arc_count(d)
    for cyc in sorted(remainder.cycles, key=lambda c: c.seq[0]):
        path = merge_path_cycle(d, path, cyc)
    got = walk_length(d, path)
    assert got == total and is_spanning(d, path)
    return path


def _insert_vertex_no_loss(d: PartitionedDigraph, c: GWalk, v: int) -> Optional[GWalk]:
    """Insert v into the cycle without dropping below its arc count."""
    seq = c.seq
    n = len(seq)
    for i in range(n):
        a, b = seq[i], seq[(i + 1) % n]
        ta = classify_pair(d, a, v)
        tb = classify_pair(d, v, b)
        if ta is None or tb is None:
            continue
        old = classify_pair(d, a, b)
        gain = (ta == "real") + (tb == "real") - (old == "real")
        if gain >= 0:
            return insert_piece(c, i, (v,))
    return None


def _attach_by_path(d: PartitionedDigraph, c: GWalk, v: int) -> Optional[GWalk]:
    """Absorb v (and the connecting interior) via a shortest path to or from
    the cycle, used when v sees the cycle in one direction only."""
    cset = set(c.seq)
    outs = any((v, x) in d.arcs for x in cset)
    ins = any((x, v) in d.arcs for x in cset)
    if outs and ins:
        return None
    if not outs:
        # path from v into the cycle; predecessor side of the entry point
        parent = {v: None}
        frontier = [v]
        hit = None
        while frontier and hit is None:
            nxt = []
            for u in frontier:
                for w in sorted(d.out(u)):
                    if w in parent:
                        continue
                    parent[w] = u
                    if w in cset:
                        hit = w
                        break
                    nxt.append(w)
                if hit:
                    break
            frontier = nxt
        if hit is None:
            return None
        chain = []
        cur = parent[hit]
        while cur is not None:
            chain.append(cur)
            cur = parent[cur]
        chain.reverse()               # v .. last interior vertex
        k = c.seq.index(hit)
        new_seq = c.seq[k:] + c.seq[:k] + tuple(chain)
        return GWalk("cycle", new_seq)
    # mirror: path from the cycle out to v, appended after its exit point
    parent = {v: None}
    frontier = [v]
    hit = None
    while frontier and hit is None:
        nxt = []
        for u in frontier:
            for w in sorted(d.inn(u)):
                if w in parent:
                    continue
                parent[w] = u
                if w in cset:
                    hit = w
                    break
                nxt.append(w)
            if hit:
                break
        frontier = nxt
    if hit is None:
        return None
    chain = []
    cur = parent[hit]
    while cur is not None:
        chain.append(cur)
        cur = parent[cur]
    k = c.seq.index(hit)
    new_seq = c.seq[k + 1:] + c.seq[: k + 1] + tuple(chain)
    return GWalk("cycle", new_seq)


def absorb_to_spanning(d: PartitionedDigraph, c: GWalk) -> GWalk:
    """Grow a cycle to a spanning one without decreasing its arc count."""
    d.require_smd()
    if not is_strong(d):
        raise NotStrong("absorption needs a strong instance")
    validate_walk(d, c)
    current = c
    length = walk_length(d, current)
    while not is_spanning(d, current):
        missing = sorted(set(d.vertices()) - set(current.seq))
        progressed = False
        for v in missing:
            grown = _insert_vertex_no_loss(d, current, v)
            if grown is None:
                grown = _attach_by_path(d, current, v)
            if grown is not None:
                new_length = walk_length(d, grown)
                assert new_length >= length and len(grown.seq) > len(current.seq)
                current, length = grown, new_length
                progressed = True
                break
        assert progressed, "a strong instance always admits an absorption step"
    return canonical_cycle(current)


def _trivial_cycles_of(d: PartitionedDigraph, uncovered) -> List[GWalk]:
    by_part = {}
    for v in sorted(uncovered):
        by_part.setdefault(d.part(v), []).append(v)
    return [
        GWalk("cycle", tuple(group)) for group in by_part.values() if len(group) >= 2
    ]


def _real_cycle_among(d: PartitionedDigraph, uncovered) -> Optional[GWalk]:
    sub, old = induce(d, uncovered)
    from .digraph import strong_components

    for comp in strong_components(sub):
        if len(comp) < 2:
            continue
        start = comp[0]
        allowed = set(comp)
        parent = {start: None}
        frontier = [start]
        while frontier:
            nxt = []
            for u in frontier:
                for w in sorted(sub.out(u)):
                    if w not in allowed:
                        continue
                    if w == start:
                        chain = [u]
                        cur = parent[u]
                        while cur is not None:
                            chain.append(cur)
                            cur = parent[cur]
                        chain.reverse()
                        return canonical_cycle(
                            GWalk("cycle", tuple(old[x - 1] for x in chain))
                        )
                    if w not in parent:
                        parent[w] = u
                        nxt.append(w)
            frontier = nxt
    return None


def grow_factor(d: PartitionedDigraph, f0: GFactor) -> GFactor:
    """Extend disjoint cycles to a spanning factor with at least as many arcs."""
    d.require_smd()
    if not is_strong(d):
        raise NotStrong("factor growth needs a strong instance")
    if not f0.cycles:
        return max_arc_gcycle_factor(d)
    validate_factor(d, f0, spanning=False)
    cycles = [canonical_cycle(c) for c in f0.cycles]
    base_arcs = f0.arc_count(d)
    while True:
        covered = {v for c in cycles for v in c.seq}
        uncovered = sorted(set(d.vertices()) - covered)
        if not uncovered:
            break
        progressed = False
        for v in uncovered:
            for i, c in enumerate(cycles):
                grown = _insert_vertex_no_loss(d, c, v)
                if grown is not None:
                    assert walk_length(d, grown) >= walk_length(d, c)
                    cycles[i] = grown
                    progressed = True
                    break
            if progressed:
                break
        if progressed:
            continue
        new_real = _real_cycle_among(d, uncovered)
        if new_real is not None:
            cycles.append(new_real)
            continue
        trivials = _trivial_cycles_of(d, uncovered)
        if trivials:
            cycles.extend(trivials)
            continue
        raise AssertionError("a strong instance always completes to a factor")
    cycles = sorted((canonical_cycle(c) for c in cycles), key=lambda c: c.seq[0])
    out = GFactor(tuple(cycles))
    validate_factor(d, out)
    assert out.arc_count(d) >= base_arcs
    return out
