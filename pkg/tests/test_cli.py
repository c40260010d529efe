import json

import pytest

from soficlab.cli import main


def run(argv):
    return main([str(a) for a in argv])


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["--version"])
    assert exc.value.code == 0


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2


def test_ball_stats(capsys):
    assert run(["ball", "--family", "free", "--radius", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["elements"] == 17
    assert doc["by_length"] == {"0": 1, "1": 4, "2": 12} or doc["by_length"] == {
        0: 1,
        1: 4,
        2: 12,
    }


def test_certify_verify_pipeline(tmp_path, capsys):
    cert = tmp_path / "z.json"
    assert run(["certify", "--family", "z", "--folner", "100", "--radius", "2",
                "-o", cert]) == 0
    assert run(["verify", cert, "--eps", "1e-9", "--delta", "1"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] and report["defect"] == 0.0 and report["separation"] == 1.0


def test_verify_tampered_certificate_exits_1(tmp_path, capsys):
    cert = tmp_path / "z.json"
    run(["certify", "--family", "z", "--folner", "10", "--radius", "2", "-o", cert])
    doc = json.loads(cert.read_text())
    perm = doc["map"]["a"]
    perm[0], perm[1] = perm[1], perm[0]  # hand-corrupt one image
    cert.write_text(json.dumps(doc))
    assert run(["verify", cert, "--eps", "1e-9", "--delta", "1"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert not report["passed"]
    assert report["worst_defect_pair"] is not None


def test_verify_malformed_exits_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ nope")
    assert run(["verify", bad, "--eps", "1e-9", "--delta", "1"]) == 2
    bad.write_text(json.dumps({"schema": "other"}))
    assert run(["verify", bad, "--eps", "1e-9", "--delta", "1"]) == 2
    assert run(["verify", tmp_path / "missing.json", "--eps", "1", "--delta", "0"]) == 2


def test_certify_free_and_graph_round_trip(tmp_path, capsys):
    cert = tmp_path / "free.json"
    graph = tmp_path / "g.json"
    assert run(["certify", "--family", "free", "--radius", "1", "-o", cert]) == 0
    assert run(["graph", cert, "-o", graph]) == 0
    assert run(["match-fraction", graph, "--family", "free", "--radius", "1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["fraction"] == 1.0
    dot = tmp_path / "g.dot"
    assert run(["graph", cert, "-o", dot]) == 0
    assert dot.read_text().startswith("digraph")


def test_to_unitary_and_amplify(tmp_path, capsys):
    cert = tmp_path / "z.json"
    ucert = tmp_path / "zu.json"
    amped = tmp_path / "za.json"
    run(["certify", "--family", "z", "--folner", "4", "--radius", "1", "-o", cert])
    assert run(["to-unitary", cert, "-o", ucert]) == 0
    assert run(["amplify", ucert, "--times", "1", "-o", amped]) == 0
    doc = json.loads(amped.read_text())
    assert doc["target"] == {"kind": "unitary", "n": 16}
    # rank cap: 16^(2^2) = 65536 > 256
    assert run(["amplify", amped, "--times", "2", "-o", tmp_path / "x.json"]) == 2


def test_certify_requires_folner_for_amenable(tmp_path):
    assert run(["certify", "--family", "z", "--radius", "1",
                "-o", tmp_path / "x.json"]) == 2


def test_folner_command(capsys):
    assert run(["folner", "--family", "heisenberg", "-L", "4"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["size"] == 256
    assert doc["generator_defect"] == doc["reiter_norm_max"]


def test_hall_command(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(json.dumps(
        {"left_count": 1, "right_count": 2, "adjacency": [[0, 1]]}))
    assert run(["hall", good]) == 0
    assert json.loads(capsys.readouterr().out)["feasible"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(
        {"left_count": 1, "right_count": 1, "adjacency": [[0]]}))
    assert run(["hall", bad]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["witness"] == [0]


def test_paradox_commands(capsys):
    assert run(["paradox", "--radius", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["partition_ok"]
    assert run(["paradox", "--radius", "2", "--spread", "1"]) in (0, 1)


def test_demo_sinfty(capsys):
    assert run(["demo", "sinfty", "--k", "3"]) == 0
    lines = capsys.readouterr().out.split()
    assert lines == ["0.1875", "0.5625"]


def test_demo_amplify_deterministic(capsys):
    assert run(["demo", "amplify", "--rank", "2", "--pairs", "3", "--seed", "5"]) == 0
    first = capsys.readouterr().out
    assert run(["demo", "amplify", "--rank", "2", "--pairs", "3", "--seed", "5"]) == 0
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert len(doc["pairs"]) == 3


def test_certify_finite_family(tmp_path, capsys):
    table = tmp_path / "c5.json"
    table.write_text(json.dumps({
        "order": 5,
        "table": [[(i + j) % 5 for j in range(5)] for i in range(5)],
        "identity": 0,
        "generators": [1],
    }))
    cert = tmp_path / "c5cert.json"
    assert run(["certify", "--family", "finite", "--table", table,
                "--radius", "2", "-o", cert]) == 0
    assert run(["verify", cert, "--eps", "1e-9", "--delta", "0.1"]) == 0
