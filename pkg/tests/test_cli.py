import io
import json

import pytest

from isocut import cli

DUMBBELL = "p 6 7\ne 1 2\ne 2 3\ne 1 3\ne 3 4\ne 4 5\ne 5 6\ne 4 6\n"
STAR = "p 5 4\ne 0 1\ne 0 2\ne 0 3\ne 0 4\n"
PETERSEN = "p 10 15\n" + "".join(
    f"e {u} {v}\n"
    for u, v in [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
)
HYPER = "ph 4 2\nh 5 a b c\nh 2 c d\n"
ELEMENT = "p 4 4\ne s u\ne u t\ne s v\ne v t\nt s\nt t\n"
K4 = "p 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in [("dumbbell", DUMBBELL), ("star", STAR), ("petersen", PETERSEN), ("hyper", HYPER), ("elem", ELEMENT), ("k4", K4)]:
        p = tmp_path / f"{name}.g"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv, "--json")
    return code, json.loads(out)


def test_edge_cut_dumbbell(files):
    code, doc = call_json("edge-cut", files["dumbbell"], "--seed", 7)
    assert code == 0
    assert doc["value"] == 1 and doc["side"] == [1, 2, 3] and doc["removed"] == [["3", "4"]] and doc["seed"] == 7
    assert set(doc) >= {"problem", "value", "side", "removed", "terminals", "seed", "trials", "oracle_calls", "elapsed_ms"}


def test_vertex_cut_petersen_oracle(files):
    code, doc = call_json("vertex-cut", files["petersen"], "--exact", "--oracle")
    assert code == 0 and doc["value"] == 3 and doc["oracle"] == {"value": 3, "match": True}
    code, doc = call_json("vertex-cut", files["petersen"], "--sparsify", "--oracle")
    assert code == 0 and doc["value"] == 3


def test_isolate_star(files):
    code, doc = call_json("isolate", files["star"], "--terminals", "1,2,3,4")
    assert code == 0
    assert [c["value"] for c in doc["certificates"]] == [1, 1, 1, 1]
    assert doc["oracle_calls"] == 2 + 4


def test_hyper_and_element(files):
    code, doc = call_json("hyper-cut", files["hyper"], "--oracle")
    assert code == 0 and doc["value"] == 2 and doc["removed"] == [1]
    code, doc = call_json("elem-cut", files["elem"], "--oracle")
    assert code == 0 and doc["value"] == 2 and doc["oracle"]["match"]


def test_no_cut(files):
    code, doc = call_json("vertex-cut", files["k4"])
    assert code == 0 and doc["no_cut"] and doc["value"] == "inf"


def test_human_output(files):
    code, out, _ = call("edge-cut", files["dumbbell"])
    assert code == 0 and "value 1" in out


@pytest.mark.parametrize("problem", ["edge-cut", "hyper-cut", "elem-cut", "vertex-cut"])
def test_verify_round_trip(files, tmp_path, problem):
    src = {"edge-cut": "dumbbell", "hyper-cut": "hyper", "elem-cut": "elem", "vertex-cut": "petersen"}[problem]
    _, out, _ = call(problem, files[src], "--json")
    cert = tmp_path / "cert.json"
    cert.write_text(out)
    assert call("verify", files[src], cert)[:2] == (0, "valid\n")
    doc = json.loads(out)
    doc["value"] = doc["value"] + 1
    cert.write_text(json.dumps(doc))
    code, out, _ = call("verify", files[src], cert)
    assert code == 3 and out.startswith("invalid")


def test_verify_isolate(files, tmp_path):
    _, out, _ = call("isolate", files["star"], "--json")
    cert = tmp_path / "iso.json"
    cert.write_text(out)
    assert call("verify", files["star"], cert)[0] == 0


def test_oracle_mismatch_exit_code(files, monkeypatch):
    monkeypatch.setattr(cli, "brute_edge_cut", lambda g, R=None: (0, frozenset()))
    code, doc = call_json("edge-cut", files["dumbbell"], "--oracle")
    assert code == 3 and doc["oracle"]["match"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["edge-cut", "--no-such-flag"],
        ["edge-cut", "/nonexistent/file.g"],
        ["edge-cut", "{dumbbell}", "--terminals", "1,99"],
        ["vertex-cut", "{dumbbell}", "--terminals", "1,2"],
        [],
    ],
)
def test_usage_errors(files, argv):
    argv = [a.format(**files) for a in argv]
    code, _, err = call(*argv)
    assert code == 1 and err


def test_format_error(tmp_path):
    bad = tmp_path / "bad.g"
    bad.write_text("p 2 1\ne 0 x y\n")
    code, _, err = call("edge-cut", bad)
    assert code == 1 and "line 2" in err


def test_solver_error(tmp_path):
    big = tmp_path / "big.g"
    big.write_text("p 30 29\n" + "".join(f"e {i} {i + 1}\n" for i in range(29)))
    code, _, err = call("edge-cut", big, "--oracle")
    assert code == 2 and err


def test_version():
    code, out, _ = call("--version")
    assert code == 0 and out == "isocut 0.1.0 (certificate schema 1)\n"


def test_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(DUMBBELL))
    code, doc = call_json("edge-cut")
    assert code == 0 and doc["value"] == 1
