import io
import json
from pathlib import Path

import pytest

from skeinkit import bracket as br
from skeinkit import homflypt as hf
from skeinkit.cli import run
from skeinkit.diagram import diagram
from skeinkit.poly import LaurentPoly

CORPUS = str(Path(__file__).parent / "data" / "corpus.pd")
TREFOIL = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def value_of(*argv):
    status, out, err = call(*argv)
    assert status == 0, err
    return json.loads(out)["value"]


def test_jones_trefoil():
    v = LaurentPoly.from_json(value_of("jones", "--pd", TREFOIL))
    t = LaurentPoly.var("t")
    assert v == -t ** -4 + t ** -3 + t ** -1


def test_bracket_strategies_agree():
    a = value_of("bracket", "--pd", TREFOIL)
    b = value_of("bracket", "--pd", TREFOIL, "--strategy", "skein")
    c = value_of("bracket", "--pd", TREFOIL, "--strategy", "skein_recursion")
    assert a == b == c
    assert LaurentPoly.from_json(a) == br.bracket(diagram(TREFOIL))


def test_scalar_subcommands():
    assert value_of("colorings", "-p", "3", "--pd", TREFOIL) == 9
    assert value_of("tl", "dim", "3") == 5
    assert value_of("tl", "annular-count", "3") == 20
    assert value_of("col3-check", "--pd", TREFOIL)["equal"] is True
    assert value_of("vassiliev", "--pd", TREFOIL, "--crossings", "1,2,3") == 0


def test_homflypt_and_conway():
    d = diagram(TREFOIL)
    assert LaurentPoly.from_json(value_of("homflypt", "--pd", TREFOIL)) == hf.homflypt(d)
    assert LaurentPoly.from_json(value_of("conway", "--pd", TREFOIL)) == hf.conway(d)


def test_algebra_subcommands():
    torus = value_of("torus", "reduce", "yx")
    assert {tuple(t["monomial"]) for t in torus} == {(1, 1, 0), (0, 0, 1)}
    assert value_of("torus", "reduce", "yx", "--strategy", "rightmost") == torus
    w = value_of("wperm", "normal", "s1 t s1")
    assert w["normal_word"] == "s1 t s1" and w["perm"] == [1, 2]
    assert w["weights"] == [0, 1]
    h = value_of("hecke", "mul", "2", "g1", "g1")
    assert len(h) == 2
    prod = value_of("tl", "mul", "[(1,2),(3,4)]", "[(1,2),(3,4)]")
    assert len(prod) == 1
    s2 = value_of("skein2", "--h1-rank", "1", "--h2-rank", "1", "--pairing", "[[1]]", "--bound", "2")
    assert [s["mul"] for s in s2["summands"]] == [2, 1, 1, 2]


def test_text_mode():
    status, out, _ = call("tl", "dim", "4", "--format", "text")
    assert status == 0 and out.strip().endswith("14")


def test_parse_error_exit_1():
    status, out, err = call("jones", "--pd", "X(1,2,3")
    assert status == 1
    assert json.loads(out)["error"]
    assert "position" in err or "column" in err


def test_usage_errors():
    for argv in (["frobnicate"], [], ["colorings", "-p", "4", "--pd", TREFOIL],
                 ["jones"], ["tl", "dim", "x"], ["jones", "/nonexistent/file.pd"]):
        status, _, err = call(*argv)
        assert status == 1, argv
        assert "usage" in err


def test_bad_algebra_input_exit_1():
    assert call("wperm", "normal", "s1 u2")[0] == 1
    assert call("skein2", "--h1-rank", "1", "--h2-rank", "1", "--pairing", "[[1, 2]]")[0] == 1
    assert call("tl", "dim", "-1")[0] == 1


def test_batch(tmp_path):
    f = tmp_path / "links.pd"
    f.write_text(f"# three links\nU1;\n{TREFOIL}\n\nX(1,1,2,2)\n")
    status, out, _ = call("jones", str(f))
    records = json.loads(out)
    assert status == 0 and len(records) == 3
    assert all(r["error"] is None for r in records)

    f.write_text(f"U1;\nX(1,2,3\n{TREFOIL}\n")
    status, out, _ = call("jones", str(f))
    records = json.loads(out)
    assert status == 0
    assert [r["error"] is None for r in records] == [True, False, True]

    f.write_text("")
    status, out, _ = call("jones", str(f))
    assert status == 0 and json.loads(out) == []


def test_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("U2;\n"))
    status, out, _ = call("colorings", "-p", "5", "-")
    assert status == 0 and json.loads(out)[0]["value"] == 25


@pytest.mark.parametrize("command", ["bracket", "homflypt", "conway"])
def test_json_round_trip_and_text_agree(corpus, command):
    status, out, _ = call(command, CORPUS)
    assert status == 0
    records = json.loads(out)
    status, text, _ = call(command, CORPUS, "--format", "text")
    lines = text.splitlines()
    assert len(records) == len(lines) == len(corpus)
    fn = {"bracket": br.bracket, "homflypt": hf.homflypt, "conway": hf.conway}[command]
    for rec, line, (name, d) in zip(records, lines, corpus.items()):
        expected = fn(d)
        if expected == br.EMPTY_LINK:
            assert rec["value"] == expected
            continue
        assert LaurentPoly.from_json(rec["value"]) == expected, name
        assert line.split("\t")[2] == str(expected)
