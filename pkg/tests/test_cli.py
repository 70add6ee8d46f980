import json
import shutil
import subprocess
import sys

import pytest

from framegraphs import generators as gen, io
from framegraphs.cli import main
from framegraphs.graph import format_multigraph, subdivide


@pytest.fixture
def run(capsys):
    def go(*argv):
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err
    return go


@pytest.fixture
def files(tmp_path):
    def write(name, g):
        path = tmp_path / name
        path.write_text(format_multigraph(g if hasattr(g, "edge_list") else g.to_multigraph()))
        return path
    return write


def test_decide(run, files):
    code, out, _ = run("decide", files("k4.txt", gen.k4()))
    assert code == 0 and json.loads(out)["answer"] == "no"
    code, out, _ = run("decide", files("c5.txt", gen.cycle_multigraph(5)))
    assert code == 0 and json.loads(out)["answer"] == "yes"


def test_parse_failures_exit_2(run, tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    code, out, err = run("decide", empty)
    assert code == 2 and out == "" and "line 1" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 1\n1 x\n")
    code, _, err = run("decide", bad)
    assert code == 2 and "line 3" in err
    code, _, _ = run("decide", tmp_path / "missing.txt")
    assert code == 2


def test_usage_errors_exit_2(run):
    with pytest.raises(SystemExit) as exc:
        run("decide", "--bogus", "x")
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run("frobnicate")
    assert exc.value.code == 2


def test_classify(run, files):
    k4s = files("k4s.txt", subdivide(gen.k4(), 1).realized)
    assert json.loads(run("classify", k4s)[1])["status"] == "Counterexample"
    assert json.loads(run("classify", files("c5.txt", gen.cycle_graph(5)))[1])["status"] == "RepresentableFamily"
    assert json.loads(run("classify", files("c3.txt", gen.cycle_graph(3)))[1])["status"] == "NotDecidedByTheorem"


def test_represent_and_validate(run, files, tmp_path):
    rep, svg = tmp_path / "rep.json", tmp_path / "rep.svg"
    code, _, _ = run("represent", files("bowtie.txt", gen.bowtie()), "--counts", "2", "--out", rep, "--svg", svg)
    assert code == 0 and svg.read_text().count("<rect") == 17
    code, out, _ = run("validate", rep)
    assert code == 0 and json.loads(out) == {"valid": True, "violations": []}
    code, out, err = run("represent", files("k4.txt", gen.k4()))
    assert code == 1 and out == "" and "SingleBlockNoFeedback" in err
    code, out, _ = run("represent", files("t.txt", gen.path_graph(4)), "--shape", "tree")
    assert code == 0 and len(json.loads(out)["frames"]) == 4
    code, out, _ = run("represent", files("c6.txt", gen.cycle_graph(6)), "--shape", "chandelier")
    assert code == 0 and json.loads(out)["vertices"] == 6


def test_validate_reports_violations(run, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"vertices": 2, "edges": [[0, 1]], "frames": [
        {"vertex": 0, "x1": 0, "x2": 10, "y1": 0, "y2": 10},
        {"vertex": 1, "x1": -5, "x2": 5, "y1": 2, "y2": 8}]}))
    code, out, _ = run("validate", path)
    kinds = {v["kind"] for v in json.loads(out)["violations"]}
    assert code == 1 and "clause-2" in kinds
    path.write_text(json.dumps({"vertices": 2, "edges": [], "frames": [
        {"vertex": 0, "x1": 0, "x2": 10, "y1": 0, "y2": 10},
        {"vertex": 1, "x1": 5, "x2": 15, "y1": 2, "y2": 8}]}))
    code, out, _ = run("validate", path)
    assert code == 1 and [v["kind"] for v in json.loads(out)["violations"]] == ["graph-mismatch"]


def test_burling(run, tmp_path):
    code, out, _ = run("burling", "--steps", 2, "--out", tmp_path / "p.json")
    assert code == 0 and json.loads(out) == {"steps": 2, "vertices": 13, "stable_sets": 8}
    assert io.read_pair(tmp_path / "p.json").sizes() == (13, 8)
    code, out, _ = run("burling", "--steps", 0)
    assert json.loads(out)["vertices"] == 1
    code, out, err = run("burling", "--steps", 3, "--chi", "--budget", 5)
    assert code == 3 and json.loads(out)["chromatic_number"] is None and "budget" in err


@pytest.mark.slow
def test_burling_chi_three_steps(run):
    code, out, _ = run("burling", "--steps", 3, "--chi")
    assert code == 0 and json.loads(out)["chromatic_number"] == 4


def test_construct_and_check(run, files, tmp_path):
    cert = tmp_path / "c.json"
    assert run("construct", files("c6.txt", gen.cycle_graph(6)), "--out", cert)[0] == 0
    code, out, _ = run("check-cert", cert)
    assert code == 0 and json.loads(out)["valid"] is True
    d = json.loads(cert.read_text())
    node = d["root"]
    path = "root"
    while node["op"] != "ADD":
        key = "child" if "child" in node else "right"
        node, path = node[key], f"{path}.{key}"
    node["set"] = 99
    cert.write_text(json.dumps(d))
    code, _, err = run("check-cert", cert)
    assert code == 1 and path in err
    code, _, _ = run("construct", files("c3.txt", gen.cycle_graph(3)))
    assert code == 1


def test_materialize(run, files, tmp_path):
    # P3 needs two ADDs, so it sits inside next^3
    cert = tmp_path / "p3.json"
    run("construct", files("p3.txt", gen.path_graph(3)), "--out", cert)
    code, out, _ = run("check-cert", cert, "--materialize", 3)
    info = json.loads(out)
    assert code == 0 and info["depth"] <= 3 and len(info["embedding"]) == 3


def test_k4(run, tmp_path):
    code, out, _ = run("k4", "--profile", "1,1,1,1,1,1")
    assert json.loads(out)["status"] == "NotRestrictedFrameGraph"
    rep = tmp_path / "k4.json"
    code, out, _ = run("k4", "--profile", "1,1,0,0,0,0", "--represent", rep)
    assert code == 0 and json.loads(out)["status"] == "RestrictedFrameGraph"
    assert run("validate", rep)[0] == 0
    assert json.loads(run("k4", "--profile", "0,0,0,0,0,0")[1])["status"] == "ContainsTriangle"
    assert run("k4", "--profile", "1,1,1")[0] == 1
    assert run("k4", "--profile", "1,1,1,1,1,1", "--represent", rep)[0] == 1


def test_output_is_byte_stable(run, files, tmp_path):
    g = files("theta.txt", gen.theta())
    outs = {run("--seed", s, "represent", g, "--counts", "3")[1] for s in (0, 0, 7)}
    assert len(outs) == 1
    certs = {run("construct", files("c9.txt", gen.cycle_graph(9)))[1] for _ in range(2)}
    assert len(certs) == 1


def test_written_files_read_back(run, files, tmp_path):
    rep, cert, pair = tmp_path / "r.json", tmp_path / "c.json", tmp_path / "p.json"
    run("represent", files("d.txt", gen.digon_chain()), "--out", rep)
    run("construct", files("c6.txt", gen.cycle_graph(6)), "--out", cert)
    run("burling", "--steps", 1, "--out", pair)
    for path, read, write in ((rep, io.read_rep, io.write_rep), (cert, io.read_cert, io.write_cert),
                              (pair, io.read_pair, io.write_pair)):
        before = path.read_bytes()
        write(path, read(path))
        assert path.read_bytes() == before


def test_console_script_and_logging(tmp_path, files):
    g = files("c5.txt", gen.cycle_multigraph(5))
    exe = shutil.which("framegraphs")
    cmd = [exe] if exe else [sys.executable, "-m", "framegraphs.cli"]
    res = subprocess.run(cmd + ["decide", str(g)], capture_output=True, text=True,
                         env={"FRAMES_LOG": "info", "PATH": ""}, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["answer"] == "yes"
    assert "INFO framegraphs" in res.stderr
