import json

from diskcontact.cli import main

DS_EXG4 = json.dumps(
    {
        "n": 4,
        "e": 2,
        "components": [
            {"v": "*", "labels": [0]},
            {"v": [1], "labels": [1, 4]},
            {"v": [1, 1], "labels": [2, 3]},
        ],
    }
)
MV_T1 = json.dumps({"uv": [1, 1], "ov": [1], "x": 1, "y": 1, "z": 1})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_enumerate_count(capsys):
    code, out = run(capsys, "enumerate", "--n", "2", "--e", "1", "--format", "count")
    assert code == 0 and out.strip() == "3"
    code, out = run(capsys, "enumerate", "--n", "3", "--e", "1", "--format", "count")
    assert code == 0 and out.strip() == "6"


def test_enumerate_deterministic(capsys):
    _, out1 = run(capsys, "enumerate", "--n", "3", "--e", "1")
    _, out2 = run(capsys, "enumerate", "--n", "3", "--e", "1")
    assert out1 == out2
    assert len(out1.strip().splitlines()) == 6


def test_enumerate_bad_args(capsys):
    assert run(capsys, "enumerate", "--n", "2", "--e", "5")[0] == 2
    assert run(capsys, "enumerate", "--n", "9", "--e", "1")[0] == 2
    code, _ = run(capsys, "--max-n", "9", "enumerate", "--n", "9", "--e", "0", "--format", "count")
    assert code == 0


def test_complex_matches_example(capsys):
    code, out = run(capsys, "complex", "--ds", DS_EXG4)
    assert code == 0
    blob = json.loads(out)
    heights = sorted(s["h"] for s in blob["summands"])
    assert heights == [-3, -2, -1, 0]
    assert len(blob["d"]) == 3


def test_hom_command(capsys):
    g12 = json.dumps(
        {
            "n": 4,
            "e": 2,
            "components": [
                {"v": "*", "labels": [0, 1, 2]},
                {"v": [1], "labels": [3]},
                {"v": [2], "labels": [4]},
            ],
        }
    )
    g24 = json.dumps(
        {
            "n": 4,
            "e": 2,
            "components": [
                {"v": "*", "labels": [0, 2, 4]},
                {"v": [1], "labels": [1]},
                {"v": [2], "labels": [3]},
            ],
        }
    )
    code, out = run(capsys, "hom", "--src", g12, "--dst", g24)
    assert code == 0 and json.loads(out)["dim"] == 0


def test_homdim_self_total_one(capsys):
    _, cx = run(capsys, "complex", "--ds", DS_EXG4)
    code, out = run(capsys, "homdim", "--src", cx.strip(), "--dst", cx.strip())
    assert code == 0
    assert json.loads(out)["total"] == 1


def test_triangle_command(capsys):
    code, out = run(capsys, "triangle", "--ds", DS_EXG4, "--move", MV_T1)
    assert code == 0
    blob = json.loads(out)
    assert blob["degrees"] == [1, 0, 0]
    assert len(blob["vertices"]) == 3


def test_chainmap_command(capsys):
    code, out = run(capsys, "chainmap", "--ds", DS_EXG4, "--move", MV_T1)
    assert code == 0
    blob = json.loads(out)
    assert blob["k"] == 1 and len(blob["f"]) == 3


def test_invalid_inputs_exit_3(capsys):
    bad_ds = json.dumps(
        {
            "n": 2,
            "e": 1,
            "components": [
                {"v": "*", "labels": [1, 2]},
                {"v": [1], "labels": [0]},
            ],
        }
    )
    assert main(["complex", "--ds", bad_ds]) == 3
    capsys.readouterr()
    bad_mv = json.dumps({"uv": [1], "ov": [1], "x": 0, "y": 0, "z": 0})
    assert main(["chainmap", "--ds", DS_EXG4, "--move", bad_mv]) == 3
    capsys.readouterr()


def test_unparseable_exits_2(capsys):
    assert main(["complex", "--ds", "{not json"]) == 2
    capsys.readouterr()


def test_verify_suite_pass(capsys):
    code, out = run(capsys, "verify", "--n", "2", "--e", "1", "--suite", "all")
    assert code == 0
    assert "FAIL" not in out
    assert "PASS suite=all" in out


def test_verify_unknown_suite(capsys):
    assert main(["verify", "--n", "2", "--e", "1", "--suite", "nope"]) == 2
    capsys.readouterr()


def test_export_quiver(capsys):
    code, out = run(capsys, "export-dot", "quiver", "--n", "2", "--e", "1")
    assert code == 0
    assert out.count("->") == 1


def test_export_bypass_graph_octahedron(capsys):
    code, out = run(capsys, "export-dot", "bypass-graph", "--n", "3", "--e", "1")
    assert code == 0
    # twelve arrows of the octahedron skeleton
    assert out.count("->") == 12
    _, out2 = run(capsys, "export-dot", "bypass-graph", "--n", "3", "--e", "1")
    assert out == out2


def test_export_triangle(capsys):
    code, out = run(capsys, "export-dot", "triangle", "--ds", DS_EXG4, "--move", MV_T1)
    assert code == 0
    lines = [l for l in out.splitlines() if "->" in l]
    assert len(lines) == 3
