import io
import json

import pytest

from lrwkit.cli import run
from lrwkit.graph import canonical_form, cycle_graph, path_graph, pivot
from lrwkit.io import format_graph, parse_graph, parse_graphs


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def c5(tmp_path):
    p = tmp_path / "c5.txt"
    p.write_text(format_graph(cycle_graph(5)))
    return str(p)


def test_lrw_text_and_json(c5):
    code, out, _ = call("lrw", "--graph", c5)
    assert code == 0 and out.splitlines()[0] == "lrw 2"
    code, out, _ = call("lrw", "--graph", c5, "--json", "--verify")
    rec = json.loads(out)
    assert rec["format"] == "lrwkit/1" and rec["lrw"] == 2 and rec["verified"] is True


def test_exit_codes(tmp_path, c5):
    assert call()[0] == 2
    assert call("lrw")[0] == 2
    assert call("no-such-command")[0] == 2
    code, _, err = call("lrw", "--graph", str(tmp_path / "missing.txt"))
    assert code == 1 and err.startswith("error:")
    bad = tmp_path / "bad.txt"
    bad.write_text("n 2\n0 1\n0 0\n")
    code, _, err = call("lrw", "--graph", str(bad))
    assert code == 1 and "NotSigmaSymmetric" in err
    code, _, err = call("pivot", "--graph", c5, "--x", "0", "--y", "2")
    assert code == 1 and "NonEdgePivot" in err


def test_layout_and_pivot(c5):
    code, out, _ = call("layout-check", "--graph", c5, "--order", "0,1,2,3,4")
    assert code == 0 and "width 2" in out
    code, out, _ = call("pivot", "--graph", c5, "--x", "0", "--y", "1")
    assert code == 0 and parse_graph(out) == pivot(cycle_graph(5), 0, 1)


def test_minor_test_and_orbit(tmp_path, c5):
    p5 = tmp_path / "p5.txt"
    p5.write_text(format_graph(path_graph(5)))
    assert call("minor-test", "--graph", c5, "--minor", c5)[1].strip() == "minor true"
    assert call("minor-test", "--graph", str(p5), "--minor", c5)[1].strip() == "minor false"
    assert "size=3" in call("orbit", "--graph", c5)[1]


def test_obstruction_manifest():
    code, out, _ = call("obstructions", "--p", "0", "--nmax", "3", "--relation", "pivot", "--verify")
    assert code == 0
    graphs = parse_graphs(out)
    assert [canonical_form(g) for g in graphs] == [canonical_form(path_graph(2))]
    assert "count=1" in out and out.rstrip().endswith("verify ok")


def test_bounds():
    assert call("bounds", "--lk", "0", "--c", "5")[1].strip() == "6"
    assert call("bounds", "--plength", "1", "1", "2")[1].split() == ["plength", str(3 * 2**36)]
    assert call("bounds", "--main", "0", "2")[1].split() == ["main", "k=1", "s=1", "c=32768", "value=1073807361"]


def test_profile_and_dominance(tmp_path):
    g = tmp_path / "p3.txt"
    g.write_text(format_graph(path_graph(3)))
    code, out, _ = call("profile", "--graph", str(g), "--order", "0,1,2", "--dump")
    assert code == 0 and out.startswith("p-width")
    dump = tmp_path / "e.txt"
    dump.write_text(out)
    code, out, _ = call("dominance", "--a", str(dump), "--b", str(dump))
    assert code == 0 and "true" in out


def test_output_is_deterministic(c5):
    first = call("obstructions", "--p", "1", "--nmax", "5", "--relation", "pivot", "--json")
    assert first == call("obstructions", "--p", "1", "--nmax", "5", "--relation", "pivot", "--json")
    json.loads(first[1])
