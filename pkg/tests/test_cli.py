import io
import json
import os
import subprocess
import sys

import pytest

from permpoly.cli import main
from permpoly.formats import format_edge_list, format_graph6
from permpoly.permanental import PolyReport, perm_poly
from permpoly.polynomial import parse_poly

from conftest import C4, C4_C4, C4_K1, C5, K13, K14, K23, P4, P5


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, g, fmt="edge_list"):
        p = tmp_path / name
        p.write_text(format_edge_list(g) if fmt == "edge_list" else format_graph6(g) + "\n")
        return str(p)

    return _write


def test_permpoly_c4(write):
    code, out, _ = run("permpoly", write("c4.txt", C4))
    assert code == 0
    assert "pi:    x^4+4x^2+4" in out
    assert "path: theorem_intercyclic" in out


def test_permpoly_non_bipartite(write):
    code, _, err = run("permpoly", write("c5.txt", C5))
    assert code == 3 and "not bipartite" in err


def test_permpoly_not_intercyclic(write):
    path = write("c4c4.txt", C4_C4)
    code, _, err = run("permpoly", path)
    assert code == 2 and "4k-intercyclic" in err and "--oracle" in err
    code, out, _ = run("permpoly", "--oracle", path)
    assert code == 0 and "path: oracle_fallback" in out
    assert "pi:    x^8+8x^6+24x^4+32x^2+16" in out


def test_oracle_cap_exit(write, monkeypatch):
    monkeypatch.setenv("PERMPOLY_ORACLE_CAP", "6")
    code, _, err = run("permpoly", "--oracle", write("c4c4.txt", C4_C4))
    assert code == 5 and "oracle" in err


def test_parse_error_exit(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n0 2\n")
    assert run("permpoly", str(bad))[0] == 4
    assert run("permpoly", str(tmp_path / "missing.txt"))[0] == 4


def test_usage_error_is_not_exit_2():
    with pytest.raises(SystemExit) as exc:
        run("permpoly", "--no-such-flag")
    assert exc.value.code == 1


def test_permpoly_json_round_trip(write):
    code, out, _ = run("permpoly", "--json", write("c4.txt", C4))
    data = json.loads(out)
    assert set(data) == {"n", "phi", "phi_p", "f", "pi", "path", "classification", "four_k_cycles"}
    assert data["pi"] == ["4", "0", "4", "0", "1"]
    report = PolyReport.from_json(data)
    assert report == perm_poly(C4)
    assert PolyReport.from_json(json.loads(json.dumps(report.to_json()))) == report


def test_figure1_via_cli(figure1, write):
    path = write("fig1.txt", figure1)
    code, out, _ = run("permpoly", path)
    pi_line = [ln for ln in out.splitlines() if ln.startswith("pi:")][0]
    assert parse_poly(pi_line.split(":", 1)[1]) == perm_poly(figure1).pi
    assert "x^10+12x^8+52x^6+91x^4+58x^2+9" in out
    code, out, _ = run("classify", path)
    assert out.strip() == "FourKIntercyclic, 5 four-k-cycles (3×C4, 2×C8)"


def test_classify(write):
    assert run("classify", write("p5.txt", P5))[1].strip() == "C4kFree"
    code, out, _ = run("classify", write("c4c4.txt", C4_C4))
    assert code == 0
    assert out.startswith("NotIntercyclic")
    assert "witness: [0, 1, 2, 3] [4, 5, 6, 7]" in out
    code, out, _ = run("classify", "--json", write("c4c4b.txt", C4_C4))
    assert json.loads(out)["witness"] == [[0, 1, 2, 3], [4, 5, 6, 7]]


def test_classify_non_bipartite_is_fine(write):
    assert run("classify", write("c5.txt", C5))[0] == 0


def test_cycles(write):
    code, out, _ = run("cycles", write("k23.txt", K23))
    assert code == 0
    assert out.split("\n")[:3] == ["0 2 1 3", "0 2 1 4", "0 3 1 4"]
    code, out, _ = run("cycles", write("p5.txt", P5))
    assert code == 0 and out.strip() == ""
    code, _, _ = run("cycles", "--budget", "2", write("k23b.txt", K23))
    assert code == 5
    code, out, _ = run("cycles", "--json", "--max-len", "3", write("k23c.txt", K23))
    assert json.loads(out) == {"n": 5, "count": 0, "cycles": []}


def test_budget_from_environment(write, monkeypatch):
    monkeypatch.setenv("PERMPOLY_CYCLE_BUDGET", "1")
    assert run("cycles", write("k23.txt", K23))[0] == 5


def test_cospectral(write, figure1):
    code, out, _ = run("cospectral", "--json", write("k14.txt", K14), write("c4k1.txt", C4_K1))
    assert code == 0
    assert json.loads(out) == {"same_f": False, "cospectral": True, "per_cospectral": False}
    f = write("fig.txt", figure1)
    assert json.loads(run("cospectral", "--json", f, f)[1]) == {
        "same_f": True, "cospectral": True, "per_cospectral": True}
    code, out, _ = run("cospectral", write("p4.txt", P4), write("k13.txt", K13))
    assert out.split() == ["same_f:", "true", "cospectral:", "false", "per_cospectral:", "false"]
    assert run("cospectral", write("c5.txt", C5), write("p4b.txt", P4))[0] == 3


def test_graph6_input(tmp_path):
    p = tmp_path / "k4.g6"
    p.write_text("C~\n")
    code, out, _ = run("cycles", "--json", str(p))
    assert json.loads(out)["count"] == 7
    assert run("permpoly", str(p))[0] == 3


def test_stdin(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("4 4\n0 1\n1 2\n2 3\n3 0\n"))
    code, out, _ = run("permpoly", "-")
    assert code == 0 and "x^4+4x^2+4" in out


@pytest.mark.parametrize("jobs", ["1", "2"])
def test_batch_matches_single_runs(write, figure1, jobs, tmp_path):
    graphs = {"b_c4.txt": C4, "a_fig.txt": figure1, "c_p4.txt": P4, "d_c4c4.txt": C4_C4}
    d = tmp_path / "batch"
    d.mkdir()
    for name, g in graphs.items():
        (d / name).write_text(format_edge_list(g))
    code, out, _ = run("permpoly", "--json", "--dir", str(d), "--jobs", jobs)
    batch = json.loads(out)
    assert [e["file"] for e in batch] == sorted(graphs)
    assert code == 2
    for entry in batch:
        single_code, single_out, _ = run("permpoly", "--json", str(d / entry["file"]))
        assert entry["exit"] == single_code
        if single_code == 0:
            assert entry["result"] == json.loads(single_out)
    code, out, _ = run("permpoly", "--dir", str(d), "--jobs", jobs)
    assert out.index("== a_fig.txt ==") < out.index("== b_c4.txt ==")


def test_module_entry_point(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text(format_edge_list(C4))
    proc = subprocess.run([sys.executable, "-m", "permpoly", "permpoly", str(p)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "x^4+4x^2+4" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "permpoly", "--help"], capture_output=True, text=True)
    assert "PERMPOLY_CYCLE_BUDGET" in proc.stdout and "PERMPOLY_ORACLE_CAP" in proc.stdout
