"""Shared helpers: naive reference oracles and instance builders.

The brute-force routines here enumerate permutations and subsets directly;
they exist to validate the packaged engines and must stay independent of
them."""

from itertools import combinations, permutations

import pytest

from gmpd.digraph import PartitionedDigraph
from gmpd.generators import random_extended, random_smd


def step_ok(d, u, v):
    return (u, v) in d.arcs or d.part(u) == d.part(v)


def brute_longest_spanning_gcycle(d):
    """Max arcs over spanning cyclic sequences, or None; O(n!) reference."""
    verts = list(d.vertices())
    n = d.n
    if n < 2:
        return None
    best = None
    for perm in permutations(verts[1:]):
        seq = (verts[0],) + perm
        arcs = 0
        ok = True
        for i in range(n):
            u, v = seq[i], seq[(i + 1) % n]
            if (u, v) in d.arcs:
                arcs += 1
            elif d.part(u) != d.part(v):
                ok = False
                break
        if ok and (best is None or arcs > best):
            best = arcs
    return best


def brute_longest_gpath(d):
    """Max arcs over all generalized paths; O(Σ k!·C(n,k)) reference."""
    verts = list(d.vertices())
    best = 0
    for r in range(1, d.n + 1):
        for sub in combinations(verts, r):
            for perm in permutations(sub):
                arcs = 0
                ok = True
                for i in range(r - 1):
                    u, v = perm[i], perm[i + 1]
                    if (u, v) in d.arcs:
                        arcs += 1
                    elif d.part(u) != d.part(v):
                        ok = False
                        break
                if ok:
                    best = max(best, arcs)
    return best


def brute_min_assignment(cost):
    """Exhaustive min-cost perfect assignment for tiny square grids."""
    n = len(cost)
    best = None
    best_map = None
    for perm in permutations(range(n)):
        total = 0
        ok = True
        for i, j in enumerate(perm):
            c = cost[i][j]
            if c >= 10 ** 8:
                ok = False
                break
            total += c
        if ok and (best is None or total < best or (total == best and list(perm) < best_map)):
            best = total
            best_map = list(perm)
    return (best, best_map) if best is not None else None


def fig1_digraph():
    return PartitionedDigraph(
        [1, 2, 3, 4, 4],
        [(1, 2), (2, 3), (1, 3), (4, 1), (4, 3), (2, 4), (1, 5), (3, 5), (5, 2)],
    )


def random_smd_digraph(n, c, density, seed):
    return random_smd(n, min(c, n), density, seed).digraph


def random_extended_digraph(n_sets, max_size, seed):
    return random_extended(n_sets, max_size, seed).digraph


@pytest.fixture
def fig1():
    return fig1_digraph()
