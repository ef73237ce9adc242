import json
import subprocess
import sys

import numpy as np
import pydot
import pytest
from helpers import HAMMING_ADJ, STEANE_G, WHEEL_ADJ, random_transcript, random_valid_graph, steane_code, wheel_code

from graphstab.cli import main
from graphstab.errors import ParseError
from graphstab.formats import (
    format_code,
    format_graph,
    format_gram,
    format_transcript,
    parse_code,
    parse_graph,
    parse_gram,
    parse_transcript,
    to_dot,
)
from graphstab.gfp import trace_gram
from graphstab.graphcode import GraphCode
from graphstab.matfp import FpMatrix, row_space_equal
from graphstab.symplectic import SymplecticCode


def _graph_text(adj, p=2, k=1):
    return format_graph(GraphCode(adj, p, k))


def _code_text(gen, p=2):
    return format_code(SymplecticCode(gen, p))


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_round_trips(rng):
    for p in (2, 3, 5):
        g = random_valid_graph(rng, p, 4, 2)
        assert parse_graph(format_graph(g)) == g
        t = random_transcript(rng, p, 4, 3, 10)
        assert parse_transcript(format_transcript(t)) == t
    c = steane_code()
    assert parse_code(format_code(c)) == c
    basis = trace_gram(3, 2, [1, 0, 1])
    assert np.array_equal(parse_gram(format_gram(basis)).gram, basis.gram)


def test_comments_and_blank_lines():
    text = "# Steane\nsymplectic p=2 n=7\n\n" + "\n".join(" ".join(map(str, r)) + "  # row" for r in STEANE_G)
    assert parse_code(text) == steane_code()


@pytest.mark.parametrize(
    "text",
    [
        "",
        "symplectic p=2\n1 0",
        "graph p=2 k=0 n=1\n0",
        "symplectic p=2 n=1\n1 0 1",
        "symplectic p=2 n=1\n1 x",
        "symplectic p=2 n=1\n2 0",
        "symplectic p=4 n=1\n1 0",
    ],
)
def test_parse_code_errors(text):
    with pytest.raises(ParseError):
        parse_code(text)


def test_parse_other_errors():
    with pytest.raises(ParseError):
        parse_graph("graph p=2 k=0 n=2\n0 1\n")
    with pytest.raises(ParseError):
        parse_transcript("transcript p=2 n=2\nswap 0 1\n")
    with pytest.raises(ParseError):
        parse_transcript("transcript p=3 n=1\nlocalsp 0 1 1 1 1\n")
    with pytest.raises(ParseError):
        parse_gram("gram p=2 m=2\n1 1\n1 1\n")


def test_dot_output_parses():
    for g in (GraphCode(WHEEL_ADJ, 2, 1), GraphCode([[0, 2, 0], [2, 0, 1], [0, 1, 0]], 3, 1)):
        (parsed,) = pydot.graph_from_dot_data(to_dot(g))
        assert len(parsed.get_nodes()) == g.size
        assert len(parsed.get_edges()) == int(np.count_nonzero(np.triu(g.adj)))
    (parsed,) = pydot.graph_from_dot_data(to_dot(GraphCode([[0, 2, 0], [2, 0, 1], [0, 1, 0]], 3, 1)))
    labels = sorted(str(e.get("label")) for e in parsed.get_edges())
    assert labels == ["2", "None"]


def test_graph2stab(files, capsys, tmp_path):
    out = tmp_path / "wheel.code"
    assert main(["graph2stab", files("w.graph", _graph_text(WHEEL_ADJ)), "-o", str(out), "--gf4"]) == 0
    text = capsys.readouterr().out
    assert "GF(4)" in text and text.count(", phase ") == 6
    assert row_space_equal(parse_code(out.read_text()).gen, wheel_code().gen)

    assert main(["graph2stab", files("e.graph", "graph p=2 k=0 n=1\n0\n")]) == 0
    assert "X: 1 | 0, phase 0" in capsys.readouterr().out

    assert main(["graph2stab", files("w2.graph", _graph_text(WHEEL_ADJ)), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert (payload["k"], payload["n"], len(payload["generators"])) == (1, 7, 6)


def test_graph2stab_extension(files, capsys):
    path = files("e.graph", "graph p=2 k=0 n=2\n0 1\n1 0\n")
    assert main(["graph2stab", path, "--field-poly", "1 1 1", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["n"] == 4
    gram = files("m.gram", format_gram(trace_gram(2, 2, [1, 1, 1])))
    assert main(["graph2stab", path, "--gram", gram, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["n"] == 4


def test_stab2graph_and_roundtrip(files, capsys, tmp_path):
    code = files("steane.code", _code_text(STEANE_G))
    graph, dot, tr = tmp_path / "g", tmp_path / "g.dot", tmp_path / "t"
    assert main(["stab2graph", code, "-o", str(graph), "--dot", str(dot), "--transcript", str(tr)]) == 0
    g = parse_graph(graph.read_text())
    g.validate()
    assert (g.k, g.n) == (1, 7)
    assert pydot.graph_from_dot_data(dot.read_text())
    assert len(parse_transcript(tr.read_text())) > 0
    assert main(["roundtrip", code, "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["passed"] and rep["row_space_equal"] and rep["enumerator_equal"]


def test_enumerate(files, capsys):
    assert main(["enumerate", files("w.code", format_code(wheel_code()))]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == [
        "W = x^7 + 21*x^3*y^4 + 42*x*y^6",
        "W_dual = x^7 + 21*x^4*y^3 + 21*x^3*y^4 + 126*x^2*y^5 + 42*x*y^6 + 45*y^7",
        "d = 3",
    ]
    assert main(["enumerate", files("z.code", "symplectic p=2 n=1\n"), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["weights"] == [1, 0] and payload["dual_weights"] == [1, 3]
    assert main(["enumerate", files("w2.code", format_code(wheel_code())), "--budget", "8"]) == 3


def test_check(files, capsys):
    assert main(["check", files("h.graph", _graph_text(HAMMING_ADJ)), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] and len(payload["checks"]) == 3


@pytest.mark.parametrize(
    "argv_text,expected",
    [
        (("check", "graph p=2 k=0\n0\n"), 2),
        (("check", "graph p=2 k=0 n=1\n1\n"), 3),
        (("check", "graph p=2 k=0 n=2\n0 1\n0 0\n"), 3),
        (("check", "graph p=2 k=1 n=1\n0 0\n0 0\n"), 3),
        (("stab2graph", "symplectic p=2 n=1\n1 0\n0 1\n"), 3),
        (("enumerate", "not a code\n"), 2),
    ],
)
def test_exit_codes(files, capsys, argv_text, expected):
    cmd, text = argv_text
    assert main([cmd, files("input", text)]) == expected
    assert "error" in capsys.readouterr().err


def test_missing_file_is_parse_error(capsys, tmp_path):
    assert main(["enumerate", str(tmp_path / "absent")]) == 2


def test_module_entry_point(files):
    code = files("s.code", _code_text(STEANE_G))
    proc = subprocess.run([sys.executable, "-m", "graphstab", "roundtrip", code], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.count("PASS") == 2


def test_format_code_keeps_rows():
    gen = FpMatrix([[1, 1, 0, 0], [0, 1, 0, 0]], 2)
    assert format_code(SymplecticCode(gen)).splitlines()[0] == "symplectic p=2 n=2"
