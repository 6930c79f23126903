"""End-to-end checks of the command-line interface."""

from __future__ import annotations

import json

import pytest

from tjoin6 import cli, workbench


@pytest.fixture()
def dk4_file(tmp_path):
    path = tmp_path / "dk4.txt"
    path.write_text(workbench.generate("dk4").to_text())
    return str(path)


@pytest.fixture()
def dq3_file(tmp_path):
    path = tmp_path / "dq3.txt"
    path.write_text(workbench.generate("dq3").to_text())
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _err = run(capsys, "--format", "json", *argv)
    return code, json.loads(out)


def test_generate_round_trips(capsys, tmp_path):
    code, out, _ = run(capsys, "generate", "dq3")
    assert code == 0
    assert out == workbench.generate("dq3").to_text()


def test_generate_with_params(capsys):
    code, out, _ = run(capsys, "generate", "doubled-prism", "5")
    assert code == 0
    assert "vertices 10" in out


def test_analyze(capsys, dk4_file):
    code, obj = run_json(capsys, "analyze", dk4_file)
    assert code == 0
    assert obj["vertices"] == 4
    assert obj["six_regular"] is True
    assert len(obj["multigons"]) == 6


def test_cuts(capsys, dk4_file):
    code, obj = run_json(capsys, "cuts", dk4_file, "--max-size", "6")
    assert code == 0
    assert obj["minimum_odd_cut"]["size"] == 6
    assert obj["odd_cuts"]


def test_color_and_pack(capsys, dq3_file):
    code, obj = run_json(capsys, "color", dq3_file)
    assert code == 0
    assert obj["found"] is True
    code, obj = run_json(capsys, "pack", dq3_file)
    assert code == 0
    assert sorted(obj["packing"]) == [
        "alpha", "beta", "delta", "epsilon", "gamma", "phi",
    ]


def test_ecolor(capsys, dk4_file):
    code, obj = run_json(capsys, "ecolor", dk4_file, "--edge", "0")
    assert code == 0
    assert obj["found"] is True


def test_mate(capsys, dk4_file):
    code, obj = run_json(
        capsys, "mate", dk4_file, "--edge", "0", "--color", "alpha"
    )
    assert code == 0
    assert obj["status"] in ("mate", "none-found", "proper-coloring")


def test_swap_inline_spec(capsys, dq3_file):
    from tjoin6 import reductions

    g = workbench.generate("dq3")
    faces = [f for f in g.faces() if f.degree == 4]
    spec = reductions.swap_specs_from_face(g, faces[0].id)[0]
    code, obj = run_json(
        capsys, "swap", dq3_file, "--spec", json.dumps(spec.to_json())
    )
    assert code == 0
    assert obj["perturbation"]["within_bound"] is True


def test_catalog(capsys, dq3_file):
    code, obj = run_json(capsys, "catalog", dq3_file)
    assert code == 0
    lemmas = {m["lemma"] for m in obj["matches"]}
    assert "4-face-3-bigon" in lemmas


def test_discharge_quarters_and_units(capsys, dk4_file):
    code, obj = run_json(capsys, "discharge", dk4_file)
    assert code == 0
    assert obj["final"]["total_quarter_units"] == -24
    code, obj = run_json(capsys, "discharge", dk4_file, "--units")
    assert code == 0
    assert obj["final"]["total_units"] == -6


def test_audit_exit_codes(capsys, dk4_file, tmp_path):
    code, obj = run_json(capsys, "audit", dk4_file)
    assert code == 0
    assert obj["verdict"] == "consistent"
    bad = tmp_path / "bad.txt"
    bad.write_text("not a graph\n")
    code, _out, err = run(capsys, "audit", str(bad))
    assert code == 1
    assert "error" in err


def test_batch(capsys, tmp_path):
    for name in ("dk4", "dq3"):
        (tmp_path / f"{name}.txt").write_text(
            workbench.generate(name).to_text()
        )
    code, obj = run_json(capsys, "batch", str(tmp_path))
    assert code == 0
    assert len(obj["results"]) == 2
    assert all(r["verdict"] == "consistent" for r in obj["results"])


def test_text_format_renders(capsys, dk4_file):
    code, out, _ = run(capsys, "analyze", dk4_file)
    assert code == 0
    assert out.startswith("vertices: 4")
