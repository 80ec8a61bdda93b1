import json
import subprocess
import sys

import pytest

from outerdom import build_extremal, from_graph6, parse_edgelist
from outerdom.cli import main, run
from outerdom.formats import format_edgelist
from outerdom.graph import complete_graph, path_graph, wheel_graph


@pytest.fixture
def write(tmp_path):
    def _write(g, name="g.txt"):
        p = tmp_path / name
        p.write_text(format_edgelist(g))
        return str(p)
    return _write


def test_solve(write):
    res = run(["solve", write(path_graph(4))])
    assert res.exit_code == 0
    assert res.payload["value"] == 2 and res.payload["certificate"]["set"] == [0, 2]
    assert run(["solve", write(path_graph(4)), "--variant", "gamma"]).payload["value"] == 2


def test_check(write):
    f = write(path_graph(4))
    yes = run(["check", f, "--set", "0,2"])
    assert yes.payload["verdict"] is True and yes.payload["certificate"]["defender"] == {"1": 0, "3": 2}
    no = run(["check", f, "--set", "1"])
    assert no.exit_code == 0 and no.payload["verdict"] is False and no.payload["first_failing"] == 3
    dom = run(["check", f, "--set", "1,2", "--variant", "dominating"])
    assert dom.payload["verdict"] is True


def test_outerplanar(write):
    assert run(["outerplanar", write(path_graph(5))]).payload == {"outerplanar": True}
    res = run(["outerplanar", write(wheel_graph(5)), "--witness"])
    assert res.payload["outerplanar"] is False and res.payload["witness"]["kind"] in ("K4", "K23")


def test_gen_extremal(tmp_path):
    res = run(["gen-extremal", "2"])
    g, w = build_extremal(2)
    assert parse_edgelist(res.payload["graph"]).edges() == g.edges()
    assert res.payload["witness"] == w.to_json()
    out = tmp_path / "g.g6"
    res = run(["gen-extremal", "3", "--format", "graph6", "-o", str(out)])
    h = from_graph6(out.read_text().strip())
    assert (h.n, h.m) == (16, 21) and res.payload["output"] == str(out)


def test_characterize(write):
    g, _ = build_extremal(2)
    res = run(["characterize", write(g)])
    assert res.exit_code == 0
    assert (res.payload["gamma_s"], res.payload["bound"]) == (3, 3)
    assert res.payload["witness"]["hub"] == 0 and res.payload["profile"]["eq_tight"]
    p11 = run(["characterize", write(path_graph(11))])
    assert p11.exit_code == 0 and p11.payload["witness"] == "none" and p11.payload["gamma_s"] == 5


def test_sweeps():
    assert run(["verify-bound", "--max-n", "6"]).exit_code == 0
    assert run(["verify-lemma1", "--max-n", "6"]).exit_code == 0
    assert run(["verify-thm2", "--max-n", "4", "--criterion", "cover"]).exit_code == 0
    assert run(["verify-thm2", "--max-n", "4"]).exit_code == 1
    assert run(["verify-thm2", "--max-n", "4", "--secure-only"]).exit_code == 0


def test_emit_graph6(tmp_path):
    out = tmp_path / "stream.g6"
    assert run(["verify-bound", "--max-n", "5", "--emit-graph6", str(out)]).exit_code == 0
    assert len(out.read_text().split()) == 5 + 13


@pytest.mark.parametrize("argv", [
    ["solve", "/nonexistent/graph.txt"],
    ["gen-extremal", "1"],
    ["verify-bound", "--max-n", "12"],
])
def test_operational_errors(argv):
    res = run(argv)
    assert res.exit_code == 2 and res.payload["message"]


def test_malformed_inputs(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n1 1\n")
    assert run(["solve", str(bad)]).exit_code == 2
    bad.write_text("2 1\n0 1\n")
    assert run(["check", str(bad), "--set", "0,x"]).exit_code == 2
    assert run(["check", str(bad), "--set", "5"]).exit_code == 2
    assert run(["characterize", str(bad)]).exit_code == 2


def test_json_output_is_deterministic(write, capsys):
    f = write(complete_graph(4))
    assert main(["--json", "solve", f]) == 0
    first = capsys.readouterr().out
    assert main(["solve", f, "--json"]) == 0
    assert capsys.readouterr().out == first
    doc = json.loads(first)
    assert doc["status"] == "ok" and doc["value"] == 1


def test_console_entry_point(write):
    proc = subprocess.run([sys.executable, "-m", "outerdom.cli", "solve", write(path_graph(4))],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "gamma-s = 2" in proc.stdout
