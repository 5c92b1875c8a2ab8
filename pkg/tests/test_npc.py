from itertools import combinations_with_replacement

import pytest

from gmpd.digraph import validate
from gmpd.errors import ParseError, TooLarge
from gmpd.npc import (
    CNF3,
    build_np1,
    build_np2,
    dpll_satisfiable,
    parse_dimacs,
    witness_np1,
    witness_np2,
)

FIG_INSTANCE = CNF3(3, ((1, -2, 3), (-1, 2, -3), (1, -2, 3)))


def small_corpus():
    """All 3-CNFs with at most two variables and at most two clauses,
    duplicate literals included, deduplicated up to clause reordering."""
    out = []
    seen = set()
    for nv in (1, 2):
        lits = [l for v in range(1, nv + 1) for l in (v, -v)]
        clauses = sorted(set(tuple(sorted(c)) for c in combinations_with_replacement(lits, 3)))
        for m in (1, 2):
            for chosen in combinations_with_replacement(clauses, m):
                key = (nv, chosen)
                if key not in seen:
                    seen.add(key)
                    out.append(CNF3(nv, chosen))
    return out


def test_cnf_validation():
    with pytest.raises(ValueError):
        CNF3(1, ((1, 1), ))
    with pytest.raises(ValueError):
        CNF3(1, ((1, 2, 1),))
    with pytest.raises(ValueError):
        CNF3(1, ())


def test_parse_dimacs_roundtrip():
    text = "c comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n"
    f = parse_dimacs(text)
    assert f.nvars == 3 and f.clauses == ((1, -2, 3), (-1, 2, -3))
    with pytest.raises(ParseError):
        parse_dimacs("p cnf 2 1\n1 -2 0\n")


def test_dpll_basics():
    assert dpll_satisfiable(CNF3(1, ((1, 1, 1),)))
    assert not dpll_satisfiable(CNF3(1, ((1, 1, 1), (-1, -1, -1))))
    assert dpll_satisfiable(FIG_INSTANCE)


def test_fig_instance_layer_inventory():
    d, legend = build_np1(FIG_INSTANCE)
    # chained gadgets: x1 and x3 occur twice positively, once negatively;
    # x2 the reverse; no duplicate literals, so no spacer pairs
    gadget_names = {n for n in legend if n[0] in "yzuv" and not n.startswith("ustar")}
    assert len(gadget_names) == 19
    chain = ["u1", "y1_0", "y1_1", "y1_2", "v3"]
    for name in chain:
        assert name in legend
    arcs = d.arcs
    ids = legend
    path_y1 = ["u1", "y1_0", "y1_1", "y1_2", "u2"]
    for a, b in zip(path_y1, path_y1[1:]):
        assert (ids[a], ids[b]) in arcs
    path_z2 = ["u2", "z2_1", "z2_2", "z2_3", "u3"]
    for a, b in zip(path_z2, path_z2[1:]):
        assert (ids[a], ids[b]) in arcs


def test_np1_partite_sets_never_singletons():
    for f in (FIG_INSTANCE, CNF3(1, ((1, 1, 1),))):
        d, _ = build_np1(f)
        assert all(len(d.partite_set(i)) >= 2 for i in range(1, d.c + 1))


def test_np2_matches_figure_q_pairing():
    d, legend = build_np2(FIG_INSTANCE)
    part_of = {name: d.part(vid) for name, vid in legend.items()}
    assert part_of["q1_1"] == part_of["y1_1"]
    assert part_of["q2_1"] == part_of["z2_1"]
    assert part_of["q3_1"] == part_of["y3_1"]
    assert part_of["q1_2"] == part_of["z1_1"]
    assert part_of["q2_2"] == part_of["y2_1"]
    assert part_of["q3_2"] == part_of["z3_1"]
    assert part_of["q1_3"] == part_of["y1_2"]
    assert part_of["q2_3"] == part_of["z2_2"]
    assert part_of["q3_3"] == part_of["y3_2"]


def test_np2_chain_arcs_exact():
    d, legend = build_np2(FIG_INSTANCE)
    ids = legend
    # 3-cycles inside each added triple
    for j in (1, 2, 3):
        trio = [ids[f"q{i}_{j}"] for i in (1, 2, 3)]
        assert (trio[0], trio[1]) in d.arcs
        assert (trio[1], trio[2]) in d.arcs
        assert (trio[2], trio[0]) in d.arcs
    assert (ids["x"], ids["u1"]) in d.arcs
    for i in (1, 2, 3):
        assert (ids["v3"], ids[f"q{i}_1"]) in d.arcs
        assert (ids[f"q{i}_3"], ids["x"]) in d.arcs


def test_builders_emit_smd_on_figure_instance():
    for build in (build_np1, build_np2):
        d, _ = build(FIG_INSTANCE)
        assert validate(d).is_smd


def test_np2_forward_arc_inventory_audit():
    """Between different construction units, forward arcs are exactly the
    stated chain: everything else crossing units goes backward."""
    d, legend = build_np2(FIG_INSTANCE)
    ids = legend
    n, m = 3, 3
    gadget_unit = {}
    for name, vid in ids.items():
        if name[0] in "yzab":
            gadget_unit[vid] = int(name[1])
    for i in range(1, n + 1):
        gadget_unit.setdefault(ids[f"u{i}"], i)
    # boundary vertices belong to the earlier gadget for this audit
    gadget_unit[ids[f"v{n}"]] = n
    unit = {}
    for vid, g in gadget_unit.items():
        unit[vid] = ("w", g)
    for j in range(1, m + 1):
        for i in (1, 2, 3):
            unit[ids[f"q{i}_{j}"]] = ("v'", j)
    unit[ids["x"]] = ("x", 0)
    order = [("w", g) for g in range(1, n + 1)]
    order += [("v'", j) for j in range(1, m + 1)]
    order.append(("x", 0))
    rank = {u: k for k, u in enumerate(order)}
    stated_forward = set()
    for q in (ids["q1_1"], ids["q2_1"], ids["q3_1"]):
        stated_forward.add((ids[f"v{n}"], q))
    for j in range(1, m):
        for a in (1, 2, 3):
            for b in (1, 2, 3):
                stated_forward.add((ids[f"q{a}_{j}"], ids[f"q{b}_{j + 1}"]))
    for a in (1, 2, 3):
        stated_forward.add((ids[f"q{a}_{m}"], ids["x"]))
    stated_forward.add((ids["x"], ids["u1"]))
    interior = {vid for name, vid in ids.items() if name[0] in "yzab"}
    for u, v in d.arcs:
        ru, rv = rank[unit[u]], rank[unit[v]]
        if ru >= rv:
            continue
        cross_kind = unit[u][0] != unit[v][0]
        cross_gadget = (
            unit[u][0] == unit[v][0] == "w" and u in interior and v in interior
        )
        cross_triple = unit[u][0] == unit[v][0] == "v'"
        if cross_kind or cross_gadget or cross_triple:
            assert (u, v) in stated_forward, (u, v, unit[u], unit[v])
    for u, v in stated_forward:
        assert (u, v) in d.arcs


def test_witness_cap():
    d, _ = build_np1(FIG_INSTANCE)
    with pytest.raises(TooLarge):
        witness_np1(d, cap=10)


def test_np2_witness_length_equals_class_count():
    d, _ = build_np2(CNF3(1, ((1, 1, 1),)))
    w = witness_np2(d)
    assert w is not None and len(w.seq) == d.c


def test_np1_singleton_set_is_immediately_absent():
    from gmpd.digraph import PartitionedDigraph
    from gmpd.npc import witness_np1

    d = PartitionedDigraph([1, 2, 2], [(1, 2), (2, 1), (1, 3), (3, 1)])
    assert witness_np1(d) is None


def test_soundness_sample():
    """Spot-check the reduction equivalence on a structured sample; the
    acceptance suite runs the full corpus."""
    sample = [
        CNF3(1, ((1, 1, 1),)),
        CNF3(1, ((-1, -1, -1),)),
        CNF3(1, ((1, 1, 1), (-1, -1, -1))),
        CNF3(2, ((1, 2, -2), (-1, 1, 2))),
        CNF3(2, ((1, 1, 2), (-1, -2, -2))),
        FIG_INSTANCE,
    ]
    for f in sample:
        sat = dpll_satisfiable(f)
        for build, search in ((build_np1, witness_np1), (build_np2, witness_np2)):
            d, _ = build(f)
            assert validate(d).is_smd
            w = search(d)
            assert (w is not None) == sat
            if w is not None:
                assert all((u, v) in d.arcs for u, v in w.pairs())
