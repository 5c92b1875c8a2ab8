"""Exact desk-scale engines: Hamiltonicity, prescribed-end spanning walks,
longest-walk oracles, and the jump-count metrics.

The subset dynamic programs are vectorized over all vertex subsets of a
given popcount layer, which keeps n = 16..18 instances within seconds.
Thresholds are configuration: an explicit argument wins, then the
GMPD_EXACT_THRESHOLD environment variable, then the per-engine default.
"""

import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Optional, Tuple

import numpy as np

from . import factor as factor_mod
from .digraph import PartitionedDigraph, augment_terminals, induce
from .errors import NoFactor, TooLarge
from .walks import GWalk, canonical_cycle, validate_walk, walk_length

DEFAULT_HAM_THRESHOLD = 20
DEFAULT_CYCLE_ORACLE_THRESHOLD = 16
DEFAULT_PATH_ORACLE_THRESHOLD = 18
DEFAULT_ATLEAST_K_CAP = 6

_BIG = 10 ** 6


def resolve_threshold(default: int, override: Optional[int] = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("GMPD_EXACT_THRESHOLD")
    if env:
        return int(env)
    return default


def _check_size(n: int, default: int, override: Optional[int]):
    limit = resolve_threshold(default, override)
    if n > limit:
        raise TooLarge(n, limit)


@lru_cache(maxsize=8)
def _popcount_layers(n: int):
    masks = np.arange(1 << n, dtype=np.int64)
    pc = np.bitwise_count(masks)
    return tuple(np.flatnonzero(pc == p) for p in range(n + 1))


def _adjacency_masks(d: PartitionedDigraph):
    """0-based out/in neighborhoods as bitmasks."""
    out = [0] * d.n
    inn = [0] * d.n
    for u, v in d.arcs:
        out[u - 1] |= 1 << (v - 1)
        inn[v - 1] |= 1 << (u - 1)
    return out, inn


def _step_cost_matrix(d: PartitionedDigraph) -> np.ndarray:
    """cost[u, v]: 0 for an arc, 1 for a same-partite jump, else forbidden."""
    n = d.n
    cost = np.full((n, n), _BIG, dtype=np.int32)
    part = d.part_vector
    for u in range(n):
        for v in range(n):
            if u != v and part[u] == part[v]:
                cost[u, v] = 1
    for u, v in d.arcs:
        cost[u - 1, v - 1] = 0
    return cost


# -- Hamiltonian cycle / prescribed-end Hamiltonian path ------------------


def _reach_dp_fast(n: int, out_mask, start: int) -> np.ndarray:
    """dp[mask] = bitmask of vertices reachable as the last vertex of a path
    that starts at `start` and visits exactly `mask`."""
    dp = np.zeros(1 << n, dtype=np.uint32)
    dp[1 << start] = np.uint32(1 << start)
    layers = _popcount_layers(n)
    in_mask = [0] * n
    for u in range(n):
        m = out_mask[u]
        while m:
            b = m & -m
            in_mask[b.bit_length() - 1] |= 1 << u
            m ^= b
    in_arr = [np.uint32(x & 0xFFFFFFFF) for x in in_mask]
    for p in range(1, n):
        layer = layers[p]
        sub = layer[dp[layer] != 0]
        if sub.size == 0:
            continue
        ends = dp[sub]
        for w in range(n):
            if w == start:
                continue
            bw = 1 << w
            free = (sub & bw) == 0
            if not free.any():
                continue
            ok = free & ((ends & in_arr[w]) != 0)
            if not ok.any():
                continue
            dp[sub[ok] | bw] |= np.uint32(bw)
    return dp


def _lowest_bit_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def _reconstruct_path(dp: np.ndarray, out_mask, start: int, last: int, full: int):
    """Walk the reachability table backwards, smallest predecessor first."""
    in_mask = [0] * len(out_mask)
    for u in range(len(out_mask)):
        m = out_mask[u]
        while m:
            b = m & -m
            in_mask[b.bit_length() - 1] |= 1 << u
            m ^= b
    seq = []
    mask, cur = full, last
    while cur != start or mask != (1 << start):
        seq.append(cur)
        pmask = mask ^ (1 << cur)
        cands = int(dp[pmask]) & in_mask[cur]
        assert cands, "reconstruction must find a predecessor"
        cur = _lowest_bit_index(cands)
        mask = pmask
    seq.append(start)
    seq.reverse()
    return seq


def exact_ham_cycle(
    d: PartitionedDigraph, threshold: Optional[int] = None
) -> Optional[GWalk]:
    """Exact Hamiltonian-cycle search; accepts augmented instances."""
    _check_size(d.n, DEFAULT_HAM_THRESHOLD, threshold)
    n = d.n
    if n < 2:
        return None
    out_mask, _ = _adjacency_masks(d)
    dp = _reach_dp_fast(n, out_mask, 0)
    full = (1 << n) - 1
    in0 = 0
    for u in range(n):
        if out_mask[u] & 1:
            in0 |= 1 << u
    closers = int(dp[full]) & in0
    if closers == 0:
        return None
    last = _lowest_bit_index(closers)
    seq = _reconstruct_path(dp, out_mask, 0, last, full)
    cyc = canonical_cycle(GWalk("cycle", tuple(v + 1 for v in seq)))
    assert all((u, v) in d.arcs for u, v in cyc.pairs())
    return cyc


def exact_xy_spanning_gpath(
    d: PartitionedDigraph, x: int, y: int, threshold: Optional[int] = None
) -> Optional[GWalk]:
    """Spanning (x,y)-walk decision on the same-partite completion.

    A step is legal along an arc or inside a partite set; legal spanning
    sequences from x to y are exactly the spanning (x,y)-G-paths.
    """
    d.require_smd()
    if x == y:
        raise ValueError("endpoints must differ")
    _check_size(d.n, DEFAULT_HAM_THRESHOLD, threshold)
    n = d.n
    part = d.part_vector
    out_mask = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and ((u + 1, v + 1) in d.arcs or part[u] == part[v]):
                out_mask[u] |= 1 << v
    dp = _reach_dp_fast(n, out_mask, x - 1)
    full = (1 << n) - 1
    if not int(dp[full]) >> (y - 1) & 1:
        return None
    seq = _reconstruct_path(dp, out_mask, x - 1, y - 1, full)
    walk = GWalk("path", tuple(v + 1 for v in seq))
    validate_walk(d, walk)
    assert walk.seq[0] == x and walk.seq[-1] == y and len(walk.seq) == n
    return walk


# -- longest-walk oracles --------------------------------------------------


def _min_jump_cycle_dp(d: PartitionedDigraph) -> Optional[Tuple[int, GWalk]]:
    """Minimum jump count over spanning cyclic sequences (start pinned at 1)."""
    n = d.n
    if n < 2:
        return None
    cost = _step_cost_matrix(d)
    layers = _popcount_layers(n)
    dp = np.full((1 << n, n), _BIG, dtype=np.int32)
    dp[1, 0] = 0
    for p in range(1, n):
        layer = layers[p]
        rows = dp[layer]
        alive = layer[(rows < _BIG).any(axis=1)]
        if alive.size == 0:
            continue
        block = dp[alive]
        for w in range(1, n):
            bw = 1 << w
            free = (alive & bw) == 0
            if not free.any():
                continue
            vals = block[free] + cost[:, w][None, :]
            best = vals.min(axis=1)
            ok = best < _BIG
            if not ok.any():
                continue
            targets = alive[free][ok] | bw
            dp[targets, w] = np.minimum(dp[targets, w], best[ok])
    full = (1 << n) - 1
    totals = dp[full] + cost[:, 0]
    j = int(totals.min())
    if j >= _BIG:
        return None
    last = int(totals.argmin())
    seq = [last]
    mask = full
    cur = last
    while mask != 1:
        pmask = mask ^ (1 << cur)
        prevs = dp[pmask] + cost[:, cur]
        want = int(dp[mask, cur])
        cand = np.flatnonzero(prevs == want)
        assert cand.size
        cur = int(cand[0])
        mask = pmask
        seq.append(cur)
    seq.reverse()
    walk = canonical_cycle(GWalk("cycle", tuple(v + 1 for v in seq)))
    assert walk_length(d, walk) == n - j
    return j, walk


def _max_arc_path_dp(d: PartitionedDigraph) -> Tuple[int, GWalk]:
    """Maximum arc count over all generalized paths (any subset, any ends)."""
    n = d.n
    cost = _step_cost_matrix(d)
    gain = np.where(cost == 0, 1, np.where(cost == 1, 0, -_BIG)).astype(np.int32)
    layers = _popcount_layers(n)
    dp = np.full((1 << n, n), -_BIG, dtype=np.int32)
    for v in range(n):
        dp[1 << v, v] = 0
    for p in range(1, n):
        layer = layers[p]
        rows = dp[layer]
        alive = layer[(rows > -_BIG).any(axis=1)]
        if alive.size == 0:
            continue
        block = dp[alive]
        for w in range(n):
            bw = 1 << w
            free = (alive & bw) == 0
            if not free.any():
                continue
            vals = block[free] + gain[:, w][None, :]
            best = vals.max(axis=1)
            ok = best > -_BIG
            if not ok.any():
                continue
            targets = alive[free][ok] | bw
            dp[targets, w] = np.maximum(dp[targets, w], best[ok])
    best_overall = int(dp.max())
    full = (1 << n) - 1
    best_spanning = int(dp[full].max())
    # a longest generalized path can always be grown to a spanning one
    assert best_spanning == best_overall
    last = int(dp[full].argmax())
    seq = [last]
    mask, cur = full, last
    while mask != (mask & -mask):
        pmask = mask ^ (1 << cur)
        prevs = dp[pmask] + gain[:, cur]
        want = int(dp[mask, cur])
        cand = np.flatnonzero(prevs == want)
        assert cand.size
        cur = int(cand[0])
        mask = pmask
        seq.append(cur)
    seq.reverse()
    walk = GWalk("path", tuple(v + 1 for v in seq))
    assert walk_length(d, walk) == best_overall
    return best_overall, walk


def oracle_longest_spanning_gcycle(
    d: PartitionedDigraph, threshold: Optional[int] = None
) -> Optional[Tuple[int, GWalk]]:
    """(max arcs, witness) over spanning generalized cycles, or None."""
    d.require_smd()
    _check_size(d.n, DEFAULT_CYCLE_ORACLE_THRESHOLD, threshold)
    res = _min_jump_cycle_dp(d)
    if res is None:
        return None
    jumps, walk = res
    return d.n - jumps, walk


def oracle_longest_gpath(
    d: PartitionedDigraph, threshold: Optional[int] = None
) -> Tuple[int, GWalk]:
    """(max arcs, witness) over all generalized paths of the instance."""
    d.require_smd()
    _check_size(d.n, DEFAULT_PATH_ORACLE_THRESHOLD, threshold)
    if d.n == 1:
        return 0, GWalk("path", (1,))
    return _max_arc_path_dp(d)


# -- spanning generalized cycles of length >= n-k --------------------------


def spanning_gcycle_at_least(
    d: PartitionedDigraph,
    k: int,
    threshold: Optional[int] = None,
    k_cap: int = DEFAULT_ATLEAST_K_CAP,
) -> Optional[GWalk]:
    """Witness spanning generalized cycle with at least n-k arcs, or None.

    Tries k' = 0..k; for each, every terminal set X of size k' in ascending
    lexicographic order, augmenting the instance and running the exact
    Hamiltonian engine.  The first witness found is decoded back: arcs the
    base lacks become jumps.
    """
    d.require_smd()
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > k_cap:
        raise TooLarge(k, k_cap)
    _check_size(d.n, DEFAULT_HAM_THRESHOLD, threshold)
    verts = sorted(d.vertices())
    for k2 in range(k + 1):
        for x_set in combinations(verts, k2):
            dx = augment_terminals(d, x_set)
            cyc = exact_ham_cycle(dx, threshold)
            if cyc is None:
                continue
            walk = canonical_cycle(GWalk("cycle", cyc.seq))
            validate_walk(d, walk)
            got = walk_length(d, walk)
            assert got >= d.n - k
            return walk
    return None


# -- jump metrics ----------------------------------------------------------


@dataclass
class JumpMetrics:
    n_xy: Dict[Tuple[int, int], int]
    unreachable: Tuple[Tuple[int, int], ...]
    N: int
    c_f: Optional[int]
    bound: Optional[int]


def _zero_one_bfs(d: PartitionedDigraph, source: int):
    """Shortest jump-count distances from source; arcs cost 0, jumps cost 1."""
    dist = {source: 0}
    dq = deque([source])
    part = d.part_vector
    while dq:
        u = dq.popleft()
        du = dist[u]
        for v in sorted(d.out(u)):
            if dist.get(v, _BIG) > du:
                dist[v] = du
                dq.appendleft(v)
        for v in d.vertices():
            if v != u and part[v - 1] == part[u - 1] and dist.get(v, _BIG) > du + 1:
                dist[v] = du + 1
                dq.append(v)
    return dist


def jump_metrics(d: PartitionedDigraph) -> JumpMetrics:
    """N(x,y) per ordered pair, the maximum N, and the min{n-N, c_f} bound."""
    d.require_smd()
    n_xy: Dict[Tuple[int, int], int] = {}
    unreachable = []
    for x in d.vertices():
        dist = _zero_one_bfs(d, x)
        for y in d.vertices():
            if x == y:
                continue
            if y in dist:
                n_xy[(x, y)] = dist[y]
            else:
                unreachable.append((x, y))
    big_n = max(n_xy.values(), default=0)
    try:
        cf = factor_mod.c_f(d)
    except NoFactor:
        cf = None
    bound = min(d.n - big_n, cf) if cf is not None else None
    return JumpMetrics(
        n_xy=n_xy,
        unreachable=tuple(unreachable),
        N=big_n,
        c_f=cf,
        bound=bound,
    )


def induced_oracle_cycle(
    d: PartitionedDigraph, vertices, threshold: Optional[int] = None
) -> Optional[Tuple[int, GWalk]]:
    """Longest spanning generalized cycle of an induced subdigraph, mapped
    back to original vertex ids."""
    sub, old = induce(d, vertices)
    res = oracle_longest_spanning_gcycle(sub, threshold)
    if res is None:
        return None
    arcs, walk = res
    mapped = canonical_cycle(GWalk("cycle", tuple(old[v - 1] for v in walk.seq)))
    return arcs, mapped
