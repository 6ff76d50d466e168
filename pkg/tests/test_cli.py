import io
import subprocess
import sys
from pathlib import Path

import pytest

from common import es
from oddspan.cli import (
    Certificate,
    emit_certificate,
    emit_graph,
    main,
    parse_certificate,
    parse_graph,
)
from oddspan.errors import DuplicateEdge, ParseError, SelfLoop
from oddspan.families import gen_random
from oddspan.graph_core import Graph

GOLDEN = Path(__file__).parent / "golden"

C4 = "4 4\n0 1\n1 2\n2 3\n0 3\n"
P6 = "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n"
K4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
K6 = emit_graph(Graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6)]))


def run_cli(capsys, *argv, stdin=None):
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
        try:
            code = main(list(argv))
        finally:
            sys.stdin = old
    else:
        code = main(list(argv))
    return code, capsys.readouterr().out


def golden(sub, case):
    return (GOLDEN / sub / f"{case}.txt").read_text()


def test_parse_graph_examples():
    g = parse_graph(C4)
    assert g.n == 4 and g.edge_set() == es((0, 1), (1, 2), (2, 3), (0, 3))
    assert parse_graph("2 1\n0 1\n") == Graph(2, [(0, 1)])
    assert parse_graph("# comment\n3 1  # header\n\n0 2\n") == Graph(3, [(0, 2)])


def test_parse_graph_errors():
    with pytest.raises(ParseError) as info:
        parse_graph("")
    assert info.value.line == 1
    with pytest.raises(ParseError):
        parse_graph("4\n")
    with pytest.raises(ParseError):
        parse_graph("a b\n")
    with pytest.raises(ParseError):
        parse_graph("2 2\n0 1\n")  # promised two edges
    with pytest.raises(ParseError):
        parse_graph("2 0\n0 1\n")  # promised none
    with pytest.raises(ParseError):
        parse_graph("2 1\n0 1 2\n")
    with pytest.raises(ParseError):
        parse_graph("2 1\n0 2\n")  # out of range
    with pytest.raises(ParseError):
        parse_graph("-1 0\n")
    with pytest.raises(SelfLoop):
        parse_graph("3 1\n0 0\n")
    with pytest.raises(DuplicateEdge):
        parse_graph("2 2\n0 1\n1 0\n")


def test_graph_round_trip():
    for seed in range(20):
        g = gen_random(2 + seed % 9, 0.4, seed)
        assert parse_graph(emit_graph(g)) == g


def test_certificate_round_trip():
    cert = Certificate(
        "NOT_EXISTS",
        "split-criterion",
        parts=(("x", (0, 3)), ("y", (1, 2))),
        reason="split-condition",
    )
    back = parse_certificate(emit_certificate(cert))
    assert back.verdict == "NOT_EXISTS" and back.method == "split-criterion"
    assert back.parts == cert.parts and back.reason == cert.reason
    tree = Certificate("EXISTS", "dense-min-degree", edges=es((0, 1), (0, 2)), verified=True)
    back = parse_certificate(emit_certificate(tree))
    assert back.edges == tree.edges


def test_emit_refuses_unverified_exists():
    with pytest.raises(AssertionError):
        emit_certificate(Certificate("EXISTS", "dense-min-degree", edges=es((0, 1))))


def test_check_c4_matches_golden(capsys, tmp_path):
    code, out = run_cli(capsys, "check", stdin=C4)
    assert code == 1
    assert out == golden("check", "c4")


def test_check_is_deterministic(capsys):
    _, first = run_cli(capsys, "check", stdin=C4)
    _, second = run_cli(capsys, "check", stdin=C4)
    assert first == second


def test_check_k4_matches_golden(capsys):
    code, out = run_cli(capsys, "check", "--odd-spanning-tree", stdin=K4)
    assert code == 0
    assert out == golden("check", "k4")


def test_check_bridge_matches_golden(capsys):
    _, gtext = run_cli(capsys, "gen", "--family", "bridge-complete", "--s", "4", "--t", "4")
    code, out = run_cli(capsys, "check", stdin=gtext)
    assert code == 1
    assert out == golden("check", "bridge-k4-k4")


def test_check_odd_order(capsys):
    code, out = run_cli(capsys, "check", stdin="3 2\n0 1\n1 2\n")
    assert code == 1
    assert out.startswith("NOT_EXISTS odd-order")


def test_check_disconnected(capsys):
    code, out = run_cli(capsys, "check", stdin="4 2\n0 1\n2 3\n")
    assert code == 1
    assert out.startswith("NOT_EXISTS disconnected")


def test_check_forced_methods(capsys):
    code, out = run_cli(capsys, "check", "--method", "oracle", stdin=K4)
    assert code == 0 and out.splitlines()[0] == "EXISTS oracle-exhaustive"
    code, out = run_cli(capsys, "check", "--method", "dense", stdin=K6)
    assert code == 0 and out.splitlines()[0] == "EXISTS dense-min-degree"
    code, out = run_cli(capsys, "check", "--method", "split", stdin=K4)
    assert code == 0 and out.splitlines()[0] == "EXISTS split-criterion"
    code, out = run_cli(capsys, "check", "--method", "trifree", stdin=K4)
    assert code == 0 and out.splitlines()[0] == "EXISTS trifree-complement"
    code, _ = run_cli(capsys, "check", "--method", "split", stdin=C4)
    assert code == 65  # not a split graph


def test_construct_goldens(capsys):
    code, out = run_cli(capsys, "construct", "--dense", stdin=K6)
    assert code == 0 and out == golden("construct", "dense-k6")
    code, out = run_cli(capsys, "construct", "--double-star", stdin=P6)
    assert code == 0 and out == golden("construct", "double-star-p6")
    code, out = run_cli(capsys, "construct", "--factor", stdin=C4)
    assert code == 2 and out == golden("construct", "factor-c4-unknown")
    code, out = run_cli(capsys, "construct", "--factor", stdin=K6)
    assert code == 0 and out == golden("construct", "factor-k6")


def test_construct_factor_strict(capsys):
    code, out = run_cli(capsys, "construct", "--factor", "--strict", stdin=K6)
    assert code == 0 and out == golden("construct", "factor-k6")
    # C4 has edge connectivity 2, so strict mode refuses before packing
    code, _ = run_cli(capsys, "construct", "--factor", "--strict", stdin=C4)
    assert code == 65
    code, _ = run_cli(capsys, "construct", "--dense", "--strict", stdin=K6)
    assert code == 64


def test_construct_trifree_goldens(capsys):
    for family, case in [
        ("4 2\n0 1\n2 3\n", "trifree-two-k2"),
        (None, "trifree-c5-of-2"),
        (None, "trifree-k24-minus-e"),
    ]:
        if case == "trifree-c5-of-2":
            _, fam = run_cli(capsys, "gen", "--family", "c5k", "--k", "2")
        elif case == "trifree-k24-minus-e":
            _, fam = run_cli(capsys, "gen", "--family", "cbme", "--s", "2", "--t", "4")
        else:
            fam = family
        _, host = run_cli(capsys, "complement", stdin=fam)
        code, out = run_cli(capsys, "construct", "--trifree", stdin=host)
        assert code == 1
        assert out == golden("construct", case)


def test_construct_split_on_star(capsys):
    code, out = run_cli(capsys, "construct", "--split", stdin="4 3\n0 1\n0 2\n0 3\n")
    assert code == 0
    assert out.splitlines()[0] == "EXISTS split-criterion"


def test_gen_goldens(capsys):
    code, out = run_cli(capsys, "gen", "--family", "bridge-complete", "--s", "4", "--t", "4")
    assert code == 0 and out == golden("gen", "bridge-complete-4-4")
    code, out = run_cli(capsys, "gen", "--family", "random", "--n", "8", "--p", "0.5", "--seed", "42")
    assert code == 0 and out == golden("gen", "random-8-05-42")


def test_info_golden(capsys):
    _, gtext = run_cli(capsys, "gen", "--family", "bridge-complete", "--s", "4", "--t", "4")
    code, out = run_cli(capsys, "info", stdin=gtext)
    assert code == 0 and out == golden("info", "bridge-k4-k4")


def test_complement_round_trip(capsys):
    _, once = run_cli(capsys, "complement", stdin=C4)
    _, twice = run_cli(capsys, "complement", stdin=once)
    assert parse_graph(twice) == parse_graph(C4)
    assert parse_graph(once) == Graph(4, [(0, 2), (1, 3)])


def test_verify_subcommand(capsys, tmp_path):
    cert = tmp_path / "cert.txt"
    _, out = run_cli(capsys, "check", stdin=K4)
    cert.write_text(out)
    graph = tmp_path / "k4.txt"
    graph.write_text(K4)
    code, out = run_cli(capsys, "verify", str(graph), "--certificate", str(cert), "--tree")
    assert code == 0 and out == "OK\n"
    wrong = tmp_path / "c4.txt"
    wrong.write_text(C4)
    code, out = run_cli(capsys, "verify", str(wrong), "--certificate", str(cert))
    assert code == 1 and out.startswith("FAIL not-subgraph")

    _, fout = run_cli(capsys, "construct", "--factor", stdin=K6)
    fcert = tmp_path / "fcert.txt"
    fcert.write_text(fout)
    k6 = tmp_path / "k6.txt"
    k6.write_text(K6)
    code, out = run_cli(capsys, "verify", str(k6), "--certificate", str(fcert), "--factor")
    assert code == 0 and out == "OK\n"
    # a NOT_EXISTS certificate carries no witness edges
    ncert = tmp_path / "ncert.txt"
    _, nout = run_cli(capsys, "check", stdin=C4)
    ncert.write_text(nout)
    code, out = run_cli(capsys, "verify", str(wrong), "--certificate", str(ncert))
    assert code == 1 and out == "FAIL no-witness-edges\n"


def test_exit_codes_for_bad_input(capsys):
    assert run_cli(capsys, "check", stdin="3 1\n0 0\n")[0] == 65
    assert run_cli(capsys, "check", stdin="2 2\n0 1\n1 0\n")[0] == 65
    assert run_cli(capsys, "check", stdin="x\n")[0] == 65
    assert run_cli(capsys, "check", stdin="0 0\n")[0] == 65
    assert run_cli(capsys, "construct", "--dense", stdin="4 3\n0 1\n0 2\n0 3\n")[0] == 65
    assert run_cli(capsys, "construct", "--double-star", stdin=K4)[0] == 65
    assert run_cli(capsys, "check", "/nonexistent/file.txt")[0] == 65


def test_exit_codes_for_usage(capsys):
    assert main(["gen", "--family", "complete"]) == 64
    assert main(["bogus"]) == 64
    assert main(["construct"]) == 64  # missing method flag
    assert main([]) == 64
    assert main(["--help"]) == 0


def test_sweep_golden(capsys, monkeypatch):
    monkeypatch.setenv("ODD_SPAN_THREADS", "1")
    code, out = run_cli(capsys, "sweep", "--split", "--n", "4", "--cap", "5")
    assert code == 0
    assert out == golden("sweep", "split-n4-cap5")


def test_sweep_worker_count_does_not_change_output(capsys, monkeypatch):
    monkeypatch.setenv("ODD_SPAN_THREADS", "2")
    _, two = run_cli(capsys, "sweep", "--trifree", "--n", "4", "--cap", "8")
    monkeypatch.setenv("ODD_SPAN_THREADS", "1")
    _, one = run_cli(capsys, "sweep", "--trifree", "--n", "4", "--cap", "8")
    assert one == two


def test_console_script_pipeline():
    gen = subprocess.run(
        ["oddspan", "gen", "--family", "complete", "--n", "4"],
        capture_output=True, text=True, check=True,
    )
    check = subprocess.run(
        ["oddspan", "check"], input=gen.stdout, capture_output=True, text=True,
    )
    assert check.returncode == 0
    assert check.stdout.splitlines()[0] == "EXISTS split-criterion"
