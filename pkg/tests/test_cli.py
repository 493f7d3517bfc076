import io
import json
import subprocess
import sys

import pytest

from skewforcing import graphs as gr
from skewforcing.cli import main

C5 = gr.emit_graph6(gr.cycle(5))
C4 = gr.emit_graph6(gr.cycle(4))
P3 = gr.emit_graph6(gr.path(3))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text(gr.emit_edge_list(gr.path(4)))
    return str(path)


def test_zminus_graph6(capsys):
    code, out, _ = run(capsys, "zminus", "--graph6", C5)
    assert code == 0 and out.splitlines()[0] == "Z- = 1"


def test_zminus_edges_all(capsys, p4_file):
    code, out, _ = run(capsys, "zminus", "--edges", p4_file, "--all")
    assert code == 0
    assert "Z- = 0" in out and "sets: {}" in out


def test_zminus_json(capsys):
    code, out, _ = run(capsys, "zminus", "--graph6", C4, "--all", "--json")
    data = json.loads(out)
    assert code == 0 and data["zminus"] == 2 and len(data["sets"]) == 4


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(C5 + "\n"))
    code, out, _ = run(capsys, "zminus", "--graph6", "-")
    assert code == 0 and "Z- = 1" in out
    monkeypatch.setattr(sys, "stdin", io.StringIO("3 2\n0 1\n1 2\n"))
    code, out, _ = run(capsys, "zminus", "--edges", "-")
    assert code == 0 and "Z- = 1" in out


@pytest.mark.parametrize(
    "argv",
    [["zminus", "--graph6", "not~graph6"],
     ["zminus"],
     ["zminus", "--graph6", C5, "--edges", "x"],
     ["zminus", "--edges", "/nonexistent/file"],
     ["closure", "--graph6", P3, "--set", "3"],
     ["mr", "--graph6", P3, "--mode", "exhaustive", "--p", "4"],
     ["verify", "no-such-suite"],
     ["verify", "extreme", "--param", "bogus=1"],
     ["generate", "petersen"]],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_closure_outputs(capsys):
    code, out, _ = run(capsys, "closure", "--graph6", C4)
    assert code == 0 and out.strip() == "stalled: {}"
    code, out, _ = run(capsys, "closure", "--graph6", P3, "--set", "0")
    assert out.splitlines() == ["0 -> 1", "1 -> 2", "all black"]
    code, out, _ = run(capsys, "closure", "--graph6", C5, "--set", "{0}", "--json")
    data = json.loads(out)
    assert data["all_black"] and len(data["forces"]) == 4


def test_match(capsys):
    code, out, _ = run(capsys, "match", "--graph6", C4, "--ur")
    assert code == 0
    assert "match = 2" in out and "max uniquely restricted = 1" in out
    code, out, _ = run(capsys, "match", "--graph6", C4, "--ur", "--json")
    data = json.loads(out)
    assert data["match"] == 2 and data["ur_match"] == 1


def test_mr_formula_tree(capsys, tmp_path):
    path = tmp_path / "t.txt"
    path.write_text(gr.emit_edge_list(gr.path(6)))
    code, out, _ = run(capsys, "mr", "--edges", str(path), "--mode", "formula")
    assert code == 0 and out.strip() == "mr- = 2*match = 6"


def test_mr_modes(capsys):
    k33 = gr.emit_graph6(gr.complete_multipartite([3, 3]))
    code, out, _ = run(capsys, "mr", "--graph6", k33)
    assert out.strip() == "2 <= mr- <= 6"
    code, out, _ = run(capsys, "mr", "--graph6", C5, "--mode", "exhaustive")
    assert out.strip() == "mr-_GF(3) = 4"
    code, out, _ = run(capsys, "mr", "--graph6", C5, "--mode", "sampled", "--json")
    data = json.loads(out)
    assert data["MR"] == data["two_match"] == 4 and data["p"] == 11
    code, out, _ = run(capsys, "mr", "--graph6", gr.emit_graph6(gr.tensor_like_k3xk3()),
                       "--mode", "formula")
    assert "no closed form" in out


def test_mr_text_and_json_agree(capsys):
    _, text, _ = run(capsys, "mr", "--graph6", C5, "--p", "5")
    _, js, _ = run(capsys, "mr", "--graph6", C5, "--p", "5", "--json")
    data = json.loads(js)
    assert text.splitlines() == [f"{data['lower']} <= mr- <= {data['upper']}",
                                 f"mr-_GF(5) = {data['exact_gfp']}"]


def test_mr_budget_exit_2(capsys):
    code, _, err = run(capsys, "mr", "--graph6", gr.emit_graph6(gr.complete(9)),
                       "--mode", "exhaustive", "--p", "13")
    assert code == 2 and "budget" in err


def test_matroid(capsys):
    code, out, _ = run(capsys, "matroid", "--graph6", C4)
    assert code == 2
    assert out.strip() == "precondition failed: max matchings not uniquely restricted"
    code, out, _ = run(capsys, "matroid", "--graph6", P3)
    assert code == 0 and out.startswith("status: pass")
    assert "minimum forcing sets: {0} {2}" in out


def test_verify_special_table(capsys):
    code, out, _ = run(capsys, "verify", "special-table")
    assert code == 0 and out.startswith("special-table: PASS")


def test_verify_params_and_json(capsys):
    code, out, _ = run(capsys, "verify", "extreme", "--param", "n_max=4", "--json")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 9 and all(r["status"] == "pass" for r in recs)
    code, out, _ = run(capsys, "verify", "unicyclic", "--param", "samples=5", "--seed", "2")
    assert code == 0 and "checked=13" in out


def test_verify_failure_exits_1(capsys, monkeypatch):
    from skewforcing import harness

    def broken():
        r = harness.VerdictReport("broken")
        r.add(gr.path(2), 1, 0, False)
        return r

    monkeypatch.setitem(harness.SUITES, "broken", broken)
    code, out, _ = run(capsys, "verify", "broken")
    assert code == 1 and "[fail]" in out


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "cycle", "5")
    assert code == 0 and out.strip() == C5
    code, out, _ = run(capsys, "generate", "path", "3", "--edge-list")
    assert gr.parse_edge_list(out) == gr.path(3)
    code, out, _ = run(capsys, "generate", "complete_multipartite", "2", "3", "--json")
    assert json.loads(out)["order"] == 5


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skewforcing", "zminus", "--graph6", C5],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("Z- = 1")
