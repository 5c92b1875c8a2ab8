import json
import subprocess
import sys
from pathlib import Path

import pytest

from gmpd.cli import main
from gmpd.fileformat import emit_instance, parse_instance
from gmpd.errors import ParseError
from gmpd.generators import fig1, fig2, generate, noclose
from gmpd.walks import parse_walk, validate_walk

GOLDEN = Path(__file__).parent / "golden"


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


# -- file format -----------------------------------------------------------

@pytest.mark.parametrize("name", ["fig1.gmpd", "fig2.gmpd", "noclose_1_3.gmpd",
                                  "np1_fig5.gmpd", "np2_fig6.gmpd"])
def test_parse_emit_identity_on_goldens(name):
    text = (GOLDEN / name).read_text()
    inst = parse_instance(text)
    assert emit_instance(inst) == text


def test_generator_determinism():
    a = emit_instance(generate("random", ["8", "3", "0.5"], seed=42))
    b = emit_instance(generate("random", ["8", "3", "0.5"], seed=42))
    assert a == b
    assert emit_instance(fig2()) == (GOLDEN / "fig2.gmpd").read_text()
    assert emit_instance(fig1()) == (GOLDEN / "fig1.gmpd").read_text()
    assert emit_instance(noclose(1, 3)) == (GOLDEN / "noclose_1_3.gmpd").read_text()


def test_parse_rejects_duplicate_arc():
    text = "gmpd 1\n2 2\n1 2\n2\n1 2\n1 2\n"
    with pytest.raises(ParseError):
        parse_instance(text)


def test_parse_rejects_truncated_file():
    text = "gmpd 1\n3 2\n1 1 2\n4\n1 3\n"
    with pytest.raises(ParseError):
        parse_instance(text)


def test_internal_arc_parses_but_fails_validation(capsys, tmp_path):
    text = "gmpd 1\n2 2\n1 2\n2\n1 2\n2 1\n"
    inst = parse_instance(text)   # fine
    bad = "gmpd 1\n3 2\n1 1 2\n3\n1 2\n1 3\n2 3\n"
    parse_instance(bad)           # internal arc (1,2) accepted at parse
    p = tmp_path / "bad.gmpd"
    p.write_text(bad)
    code, out, _ = run_cli(["validate", str(p)], capsys)
    assert code == 1 and "is_smd false" in out


# -- subcommands -----------------------------------------------------------

def test_validate_fig1(capsys):
    code, out, _ = run_cli(["validate", str(GOLDEN / "fig1.gmpd")], capsys)
    assert code == 0
    assert "is_smd true" in out and "is_extended false" in out and "is_strong true" in out


def test_bound_fig2(capsys):
    code, out, _ = run_cli(["bound", str(GOLDEN / "fig2.gmpd")], capsys)
    assert code == 0
    lines = dict(l.split(" ", 1) for l in out.strip().splitlines())
    assert lines["N"] == "0" and lines["c_f"] == "16" and lines["bound"] == "16"


def test_factor_fig1_json(capsys):
    code, out, _ = run_cli(["--json", "factor", str(GOLDEN / "fig1.gmpd")], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["arc_count"] == 5 and data["cycles"] == 1


def test_longest_gpath_exit_and_witness(capsys):
    code, out, _ = run_cli(["longest-gpath", str(GOLDEN / "fig1.gmpd")], capsys)
    assert code == 0
    lines = dict(l.split(" ", 1) for l in out.strip().splitlines())
    assert lines["length"] == "4"
    walk = parse_walk(lines["witness"])
    validate_walk(fig1().digraph, walk)


def test_spanning_gcycle_ext_rejects_fig1(capsys):
    code, out, err = run_cli(["spanning-gcycle", "--ext", str(GOLDEN / "fig1.gmpd")], capsys)
    assert code == 2 and "NotExtended" in err


def test_spanning_gcycle_atleast_exit_codes(capsys, tmp_path):
    code, out, _ = run_cli(
        ["spanning-gcycle", "--atleast", "0", str(GOLDEN / "fig1.gmpd")], capsys
    )
    assert code == 0
    lines = dict(l.split(" ", 1) for l in out.strip().splitlines())
    walk = parse_walk(lines["witness"])
    validate_walk(fig1().digraph, walk)
    # non-strong bipartite pair of dominated two-cycles: nothing at n-1
    text = "gmpd 1\n4 2\n1 2 1 2\n6\n1 2\n2 1\n3 2\n3 4\n4 1\n4 3\n"
    p = tmp_path / "bip.gmpd"
    p.write_text(text)
    code, out, _ = run_cli(["spanning-gcycle", "--atleast", "1", str(p)], capsys)
    assert code == 1 and "status no" in out


def test_xy_gpath_cli(capsys):
    code, out, _ = run_cli(["xy-gpath", "4", "5", str(GOLDEN / "fig1.gmpd")], capsys)
    assert code == 0
    walk = parse_walk(out.strip().splitlines()[-1].split(" ", 1)[1])
    assert walk.seq[0] == 4 and walk.seq[-1] == 5


def test_oracle_gcycle_fig1(capsys):
    code, out, _ = run_cli(["oracle", "gcycle", str(GOLDEN / "fig1.gmpd")], capsys)
    assert code == 0
    lines = dict(l.split(" ", 1) for l in out.strip().splitlines())
    assert lines["length"] == "5"


def test_npc_witness_exit_codes(capsys, tmp_path):
    sat_cnf = tmp_path / "sat.cnf"
    sat_cnf.write_text("p cnf 1 1\n1 1 1 0\n")
    unsat_cnf = tmp_path / "unsat.cnf"
    unsat_cnf.write_text("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n")
    for what, cnf, expect in [
        ("witness1", sat_cnf, 0),
        ("witness1", unsat_cnf, 1),
        ("witness2", sat_cnf, 0),
        ("witness2", unsat_cnf, 1),
    ]:
        build = "build1" if what == "witness1" else "build2"
        code, out, _ = run_cli(["npc", build, str(cnf)], capsys)
        assert code == 0
        inst_path = tmp_path / f"{what}_{cnf.stem}.gmpd"
        inst_path.write_text(out)
        code, out, _ = run_cli(["npc", what, str(inst_path)], capsys)
        assert code == expect


def test_npc_witness_revalidates(capsys, tmp_path):
    code, out, _ = run_cli(["npc", "build1", str(GOLDEN / "fig56.cnf")], capsys)
    inst_path = tmp_path / "np1.gmpd"
    inst_path.write_text(out)
    inst = parse_instance(out)
    code, out, _ = run_cli(["npc", "witness1", str(inst_path)], capsys)
    assert code == 0
    walk = parse_walk(out.strip().splitlines()[-1].split(" ", 1)[1])
    tags = validate_walk(inst.digraph, walk)
    assert all(t == "real" for t in tags)


def test_gen_unknown_generator(capsys):
    code, out, err = run_cli(["gen", "nope"], capsys)
    assert code == 2 and "UnknownGenerator" in err


def test_tsp_cli_roundtrip(capsys, tmp_path):
    # fig1 completed with its one weight-1 clique
    from gmpd.digraph import PartitionedDigraph
    from gmpd.fileformat import InstanceFile

    d = fig1().digraph
    arcs = set(d.arcs) | {(4, 5), (5, 4)}
    inst = InstanceFile(
        digraph=PartitionedDigraph([1, 2, 3, 4, 5], arcs),
        weights=frozenset({(4, 5), (5, 4)}),
    )
    p = tmp_path / "tsp.gmpd"
    p.write_text(emit_instance(inst))
    assert parse_instance(p.read_text()).weights == frozenset({(4, 5), (5, 4)})
    code, out, _ = run_cli(["tsp", "path", str(p)], capsys)
    assert code == 0
    lines = dict(l.split(" ", 1) for l in out.strip().splitlines())
    assert lines["cost"] == "0"
    code, out, _ = run_cli(["tsp", "tour", "--mode", "at-most-k", "--k", "0", str(p)], capsys)
    assert code == 0


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "gmpd.cli", "validate", str(GOLDEN / "fig1.gmpd")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "is_smd true" in proc.stdout
