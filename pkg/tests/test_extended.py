import pytest

from gmpd.digraph import PartitionedDigraph, is_strong, validate
from gmpd.errors import NoSharedPartite, NotExtended, OneDirectional
from gmpd.extended import merge_bidirectional, merge_same_partite, spanning_gcycle_extsd
from gmpd.factor import c_f
from gmpd.search import oracle_longest_spanning_gcycle
from gmpd.walks import GWalk, cycle, validate_walk, walk_length

from conftest import random_extended_digraph


def _five_vertex_extended():
    # partite sets {1,2}, {3}, {4}, {5}; relations: V1 <-> V2 complete,
    # V2 -> V3 -> V4 -> V2 one-way ring, V1 -> V3, V1 <- V4 one-way
    part = [1, 1, 2, 3, 4]
    arcs = set()
    for u in (1, 2):
        arcs |= {(u, 3), (3, u)}
    arcs |= {(3, 4), (4, 5), (5, 3)}
    for u in (1, 2):
        arcs |= {(u, 4), (5, u)}
    return PartitionedDigraph(part, sorted(arcs))


def test_fixture_is_extended():
    d = _five_vertex_extended()
    rep = validate(d)
    assert rep.is_smd and rep.is_extended and rep.is_strong


def test_merge_same_partite_trivial_cycle():
    d = _five_vertex_extended()
    c1 = cycle(3, 4, 5)
    c2 = cycle(1, 2)
    # no shared partite set between {3,4,5} and {1,2}
    with pytest.raises(NoSharedPartite):
        merge_same_partite(d, c1, c2)


def test_merge_same_partite_exact_sum():
    # two cycles through the same partite set in a larger extended instance
    part = [1, 1, 2, 3]
    arcs = {(1, 3), (3, 1), (2, 3), (3, 2), (1, 4), (4, 1), (2, 4), (4, 2), (3, 4), (4, 3)}
    d = PartitionedDigraph(part, sorted(arcs))
    assert validate(d).is_extended
    c1 = cycle(1, 3)
    c2 = cycle(2, 4)
    merged = merge_same_partite(d, c1, c2)
    assert set(merged.seq) == {1, 2, 3, 4}
    assert walk_length(d, merged) == walk_length(d, c1) + walk_length(d, c2)


def test_merge_bidirectional_requires_both_ways():
    d = _five_vertex_extended()
    c1 = cycle(1, 3)
    c2 = cycle(4, 5)   # 4->5 real, 5~4? different sets... (5,4) not arc
    with pytest.raises(Exception):
        validate_walk(d, c2)


def test_merge_bidirectional_one_directional_error():
    part = [1, 2, 3, 4]
    arcs = {(1, 2), (2, 1), (3, 4), (4, 3), (1, 3), (1, 4), (2, 3), (2, 4)}
    d = PartitionedDigraph(part, sorted(arcs))
    with pytest.raises(OneDirectional):
        merge_bidirectional(d, cycle(1, 2), cycle(3, 4))


def test_merge_bidirectional_sum_bound():
    checked = 0
    for seed in range(200):
        d = random_extended_digraph(4, 2, seed)
        if d.n < 5:
            continue
        verts = sorted(d.vertices())
        try:
            c1 = GWalk("cycle", tuple(verts[:2]))
            c2 = GWalk("cycle", tuple(verts[2:5]))
            validate_walk(d, c1)
            validate_walk(d, c2)
        except Exception:
            continue
        fwd = any((u, v) in d.arcs for u in c1.seq for v in c2.seq)
        bwd = any((v, u) in d.arcs for u in c1.seq for v in c2.seq)
        if not (fwd and bwd):
            continue
        merged = merge_bidirectional(d, c1, c2)
        checked += 1
        assert set(merged.seq) == set(verts[:5])
        assert walk_length(d, merged) >= walk_length(d, c1) + walk_length(d, c2)
    assert checked >= 10


def test_spanning_cycle_requires_extended(fig1=None):
    from conftest import fig1_digraph

    with pytest.raises(NotExtended):
        spanning_gcycle_extsd(fig1_digraph())


def test_spanning_cycle_absent_for_non_strong():
    part = [1, 2, 3]
    arcs = {(1, 2), (2, 3), (1, 3)}
    d = PartitionedDigraph(part, sorted(arcs))
    assert validate(d).is_extended
    assert spanning_gcycle_extsd(d) is None


def test_spanning_cycle_hamiltonian_case():
    d = PartitionedDigraph([1, 2, 3], [(1, 2), (2, 3), (3, 1)])
    w = spanning_gcycle_extsd(d)
    assert w is not None and walk_length(d, w) == 3


def test_merge_two_trivial_cycles_same_set():
    # four vertices of one set beside a hub joined both ways
    part = [1, 1, 1, 1, 2]
    arcs = []
    for v in (1, 2, 3, 4):
        arcs += [(v, 5), (5, v)]
    d = PartitionedDigraph(part, arcs)
    assert validate(d).is_extended
    merged = merge_same_partite(d, cycle(1, 2), cycle(3, 4))
    assert set(merged.seq) == {1, 2, 3, 4}
    assert walk_length(d, merged) == 0


def test_spanning_cycle_equals_factor_and_oracle():
    strong_seen = 0
    for seed in range(160):
        d = random_extended_digraph(2 + seed % 4, 3, seed)
        if d.n > 10:
            continue
        w = spanning_gcycle_extsd(d)
        if w is None:
            assert not is_strong(d) or d.n < 2
            continue
        strong_seen += 1
        want = c_f(d)
        assert walk_length(d, w) == want
        res = oracle_longest_spanning_gcycle(d)
        assert res is not None and res[0] == want
    assert strong_seen >= 40
