import pytest

from gmpd.digraph import PartitionedDigraph
from gmpd.errors import Degenerate
from gmpd.factor import (
    INF,
    c_f,
    completion_costs,
    lexmin_assignment,
    max_arc_gcycle_factor,
    max_arc_path_cycle_subdigraph,
    solve_assignment,
)
from gmpd.generators import fig2, noclose
from gmpd.walks import walk_length

from conftest import (
    brute_longest_gpath,
    brute_min_assignment,
    random_smd_digraph,
)


def test_assignment_matches_brute_force():
    import random

    rng = random.Random(5)
    for _ in range(120):
        n = rng.randint(2, 6)
        cost = [[rng.choice([0, 0, 1, 1, INF]) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            cost[i][i] = INF
        got = solve_assignment([row[:] for row in cost])
        want = brute_min_assignment(cost)
        if want is None:
            assert got is None
        else:
            assert got is not None and got[0] == want[0]


def test_lexmin_assignment_is_lexicographic_minimum():
    import random

    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(2, 5)
        cost = [[rng.choice([0, 1, 1, INF]) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            cost[i][i] = INF
        got = lexmin_assignment([row[:] for row in cost])
        want = brute_min_assignment(cost)
        if want is None:
            assert got is None
        else:
            assert got is not None
            assert got[0] == want[0] and got[1] == want[1]


def test_fig1_factor_is_hamiltonian(fig1):
    f = max_arc_gcycle_factor(fig1)
    assert f.arc_count(fig1) == 5
    assert c_f(fig1) == 5


def test_complete_digraph_triangle():
    d = PartitionedDigraph([1, 2, 3], [(u, v) for u in (1, 2, 3) for v in (1, 2, 3) if u != v])
    assert c_f(d) == 3


def test_fig2_factor_value():
    assert c_f(fig2().digraph) == 16


def test_noclose_factor_value():
    assert c_f(noclose(1, 3).digraph) == 3


def test_degenerate_single_vertex():
    d = PartitionedDigraph([1], [])
    with pytest.raises(Degenerate):
        max_arc_gcycle_factor(d)


def test_factor_cycles_have_two_or_more_vertices():
    for seed in range(40):
        d = random_smd_digraph(6 + seed % 3, 2 + seed % 3, 0.35, seed)
        try:
            f = max_arc_gcycle_factor(d)
        except Exception:
            continue
        assert all(len(cyc.seq) >= 2 for cyc in f.cycles)


def test_c_f_equals_n_minus_mincost():
    for seed in range(40):
        d = random_smd_digraph(5 + seed % 4, 2 + seed % 3, 0.4, seed + 10)
        inst = completion_costs(d)
        solved = solve_assignment([list(r) for r in inst.cost])
        if solved is None:
            continue
        assert c_f(d) == d.n - solved[0]


def test_path_cycle_semicomplete_gives_ham_path():
    d = PartitionedDigraph([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (1, 3), (2, 4), (1, 4)])
    p, rem = max_arc_path_cycle_subdigraph(d)
    assert walk_length(d, p) == 3 and not rem.cycles


def test_path_cycle_single_partite_set():
    d = PartitionedDigraph([1, 1, 1], [])
    p, rem = max_arc_path_cycle_subdigraph(d)
    total = walk_length(d, p) + rem.arc_count(d)
    assert total == 0
    covered = set(p.seq) | rem.vertex_set()
    assert covered == {1, 2, 3}


def test_path_cycle_total_matches_brute_force():
    for seed in range(60):
        n = 5 + seed % 3
        d = random_smd_digraph(n, 2 + seed % 3, 0.35, seed + 40)
        p, rem = max_arc_path_cycle_subdigraph(d)
        total = walk_length(d, p) + rem.arc_count(d)
        assert total == brute_longest_gpath(d)
