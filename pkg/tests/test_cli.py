import json
import subprocess
import sys

import pytest

from cliquesum.cli import main
from cliquesum.graph import complete_graph, complete_multipartite, erdos_renyi, format_edge_list


@pytest.fixture
def edge_file(tmp_path):
    def write(g, name="g.txt"):
        p = tmp_path / name
        p.write_text(format_edge_list(g))
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_triangle(capsys, edge_file):
    code, out, _ = run(capsys, "enumerate", edge_file(complete_graph(3)), "--quiet")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "0 1 2"
    assert "cliques=1" in lines[1]


def test_enumerate_k33(capsys, edge_file):
    code, out, _ = run(capsys, "enumerate", edge_file(complete_multipartite(3, 3)), "--quiet")
    lines = out.splitlines()
    assert len([l for l in lines if not l.startswith("#")]) == 9
    assert "cliques=9" in lines[-1]


def test_enumerate_uses_source_ids(capsys, tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("# header\n100 200\n200 300\n100 300\n")
    _, out, _ = run(capsys, "enumerate", str(p), "--quiet", "--order", "truss")
    assert out.splitlines()[0] == "100 200 300"


def test_enumerate_size_guard(capsys, edge_file):
    code, _, err = run(capsys, "enumerate", edge_file(complete_graph(5)), "--max-vertices", "3")
    assert code == 2 and "exceed" in err


def test_summarize_k4_tau_one(capsys, edge_file):
    code, out, _ = run(capsys, "summarize", edge_file(complete_graph(4)), "--tau", "1", "--quiet")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "0 1 2 3"
    assert "summary_size=1" in lines[1]


def test_summarize_is_byte_identical(capsys, edge_file):
    path = edge_file(erdos_renyi(60, 0.2, 1))
    outs = {run(capsys, "summarize", path, "--tau", "0.6", "--seed", "9", "--quiet")[1] for _ in range(3)}
    assert len(outs) == 1


def test_summarize_json_lines(capsys, edge_file):
    _, out, _ = run(
        capsys, "summarize", edge_file(erdos_renyi(30, 0.3, 2)), "--tau", "0.5", "--output", "json-lines", "--quiet"
    )
    recs = [json.loads(l) for l in out.splitlines()]
    assert "stats" in recs[-1]
    assert recs[-1]["stats"]["summary_size"] == len(recs) - 1


def test_verify_passes(capsys, edge_file):
    code, out, _ = run(
        capsys, "verify", edge_file(erdos_renyi(12, 0.5, 3)), "--tau", "0.7", "--sampling", "baseline", "--quiet"
    )
    assert code == 0
    assert "result=PASS" in out.splitlines()[-1]


def test_verify_negative_control(capsys, edge_file):
    code, out, _ = run(capsys, "verify", edge_file(erdos_renyi(12, 0.5, 3)), "--tau", "0.5", "--inject-empty", "--quiet")
    assert code == 1
    rows = [l for l in out.splitlines() if l.startswith("# clique")]
    assert rows and all("status=FAIL" in l for l in rows)


def test_verify_tau_one(capsys, edge_file):
    code, out, _ = run(capsys, "verify", edge_file(erdos_renyi(12, 0.5, 3)), "--tau", "1", "--runs", "50", "--quiet")
    assert code == 0
    assert all("mean=1 " in l for l in out.splitlines() if l.startswith("# clique"))


def test_bench_cardinality(capsys, edge_file):
    code, out, _ = run(
        capsys, "bench", edge_file(erdos_renyi(30, 0.3, 4)), "--samplings", "opt", "--seeds", "2",
        "--workers", "3", "--quiet",
    )
    recs = [json.loads(l) for l in out.splitlines()]
    assert code == 0
    # 5 tau values x 3 bounds x 3 orders
    assert len(recs) == 45
    assert {(r["config"]["tau"], r["config"]["bound"], r["config"]["order"]) for r in recs}.__len__() == 45
    assert all(r["seeds"] == [0, 1] for r in recs)


def test_bench_order_is_stable(capsys, edge_file):
    path = edge_file(erdos_renyi(25, 0.3, 5))
    args = ("bench", path, "--taus", "0.5,0.9", "--bounds", "core,truss", "--orders", "truss", "--quiet")
    a = [json.loads(l)["config"] for l in run(capsys, *args, "--workers", "1")[1].splitlines()]
    b = [json.loads(l)["config"] for l in run(capsys, *args, "--workers", "4")[1].splitlines()]
    assert a == b


def test_parse_error_exit_code(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("0 1\nx y\n")
    code, _, err = run(capsys, "enumerate", str(p))
    assert code == 2 and "line 2" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "enumerate", str(tmp_path / "nope.txt"))
    assert code == 2


def test_module_entry_point(edge_file):
    res = subprocess.run(
        [sys.executable, "-m", "cliquesum", "enumerate", edge_file(complete_graph(3)), "--quiet"],
        capture_output=True, text=True, check=True,
    )
    assert res.stdout.startswith("0 1 2\n")
