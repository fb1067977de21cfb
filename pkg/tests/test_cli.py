import subprocess
import sys

import pytest

from mptkit import io
from mptkit.graph import k222, net

from clirun import MATRIX, produced_files, run_cli, run_matrix


@pytest.fixture(scope="module")
def matrix(tmp_path_factory):
    d = tmp_path_factory.mktemp("matrix")
    return d, {name: (code, expected, out, err) for name, code, expected, out, err in run_matrix(d)}


@pytest.mark.parametrize("name", [row[0] for row in MATRIX])
def test_exit_codes(matrix, name):
    _, results = matrix
    code, expected, out, err = results[name]
    assert code == expected, err


def _graph(path):
    return io.load(str(path), "graph")


def test_pipelines_close(matrix):
    d, results = matrix
    assert _graph(d / "net.graph") == net()
    assert _graph(d / "k222.graph") == k222()
    assert _graph(d / "seg.graph") == _graph(d / "r.graph")
    assert _graph(d / "contact.graph") == _graph(d / "op.graph")
    assert _graph(d / "red.graph") == _graph(d / "red.graph.txt")
    assert (d / "r2.rep").read_text().splitlines()[2:] == (d / "r.rep").read_text().splitlines()[3:]
    assert (d / "r3.rep").read_text().splitlines()[2:] == (d / "r.rep").read_text().splitlines()[3:]
    assert (d / "r.svg").read_text().count('class="shape"') == 12


def test_verdict_text(matrix):
    _, results = matrix
    assert results["check-order-bad"][2].startswith("VIOLATION mpt-order (0,1,2,3)")
    assert results["recognize-k222"][2].splitlines()[0] == "NOT-MPT"
    assert "PAIR 0 2 : NOT-INTERVAL" in results["necessary-k222"][2]
    assert results["check-interval-net"][2].startswith("NOT-INTERVAL asteroidal-triple witness=0,2,4")
    assert results["solve-wis"][2].startswith("value ")


def test_diagnostics_name_file_and_line(matrix):
    d, results = matrix
    err = results["malformed"][3]
    assert f"{d}/bad.rep:4:" in err and "'x'" in err
    assert results["malformed"][2] == ""


def test_every_artifact_has_the_version_line(matrix):
    d, _ = matrix
    for name in ("net.rep", "r.graph", "r.ls", "r.order", "r.seg", "op.contact", "red.rep.txt", "red.map.txt"):
        assert (d / name).read_text().startswith("mptkit-format 1\n# kind: ")


def test_stdin_pipeline():
    _, rep, _ = run_cli(["gen", "--family", "net"])
    code, out, _ = run_cli(["adjacency", "--rep", "-"], stdin_text=rep)
    assert code == 0 and io.load_graph(io.parse_document(out)) == net()


def test_matrix_is_byte_reproducible(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    a.mkdir()
    b.mkdir()
    first = [(n, c, o) for n, c, _, o, _ in run_matrix(a)]
    second = [(n, c, o) for n, c, _, o, _ in run_matrix(b)]
    assert [(n, c, o.replace(str(a), "")) for n, c, o in first] == [
        (n, c, o.replace(str(b), "")) for n, c, o in second
    ]
    assert produced_files(a) == produced_files(b)


def test_console_entry_point(tmp_path):
    cmd = [sys.executable, "-m", "mptkit.cli", "gen", "--family", "random-mpt", "--n", "9", "--seed", "1"]
    one = subprocess.run(cmd, capture_output=True, check=True).stdout
    two = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert one == two and one.startswith(b"mptkit-format 1\n")
    bad = subprocess.run([sys.executable, "-m", "mptkit.cli", "frobnicate"], capture_output=True)
    assert bad.returncode == 2
