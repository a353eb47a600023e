import json

from pathlib import Path

import pytest

from cli import build_parser, main
from utils.enums import ExitCode
from utils.loaders import dump
from utils.services import simplicial_service

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def interval(tmp_path):
    path = tmp_path / "interval.json"
    path.write_text(json.dumps(dump(simplicial_service.standard_simplex(1))), encoding="utf-8")
    return str(path)


def run_json(tmp_path, argv, name="report.json"):
    out = tmp_path / name
    code = main([*argv, "--json", str(out)])
    return code, json.loads(out.read_text(encoding="utf-8"))


def test_every_verb_is_registered():
    parser = build_parser()
    verbs = parser._subparsers._group_actions[0].choices
    assert set(verbs) == {"homology", "loop", "cobar", "rigidify", "pi1-algebra", "hochschild", "verify"}


def test_homology_of_the_two_sphere(tmp_path, capsys):
    code, report = run_json(tmp_path, ["homology", str(DATA / "sphere2.json"), "-N", "3"])
    assert code == ExitCode.PASS
    assert report["command"] == "homology"
    assert report["results"]["homology"]["betti"] == [1, 0, 1]
    assert report["results"]["provenance"] == "simplicial"
    assert len(report["input_digest"]) == 64
    assert "betti" in capsys.readouterr().out


def test_homology_of_a_cubical_file(tmp_path):
    code, report = run_json(tmp_path, ["homology", str(DATA / "circle-cubical.json"), "-N", "2"])
    assert code == ExitCode.PASS
    assert report["results"]["provenance"] == "cubical"
    assert report["results"]["homology"]["betti"] == [1, 1]


def test_homology_rejects_a_dg_category(capsys):
    assert main(["homology", str(DATA / "dgcat-one.json")]) == ExitCode.INPUT_ERROR
    assert "dg category" in capsys.readouterr().err


def test_missing_input_file(tmp_path, capsys):
    assert main(["homology", str(tmp_path / "nothing.json")]) == ExitCode.INPUT_ERROR
    assert capsys.readouterr().err.startswith("error:")


def test_loop_needs_one_vertex(interval, capsys):
    assert main(["loop", interval, "-N", "2"]) == ExitCode.INPUT_ERROR
    assert "error:" in capsys.readouterr().err


def test_cobar_needs_a_simplicial_set():
    assert main(["cobar", str(DATA / "circle-cubical.json")]) == ExitCode.INPUT_ERROR


def test_negative_cutoff_is_an_input_error():
    assert main(["rigidify", str(DATA / "sphere2.json"), "-N", "-1"]) == ExitCode.INPUT_ERROR


def test_unknown_ring_is_an_input_error():
    assert main(["homology", str(DATA / "sphere2.json"), "--ring", "GF(4)"]) == ExitCode.INPUT_ERROR


def test_loop_of_the_two_sphere(tmp_path):
    code, report = run_json(tmp_path, ["loop", str(DATA / "sphere2.json"), "-N", "3"])
    assert code == ExitCode.PASS
    assert report["results"]["loop_homology"]["betti"][:3] == [1, 1, 1]
    assert report["results"]["cobar_homology"]["betti"][:3] == [1, 1, 1]
    assert report["verdicts"]
    assert all(v["verdict"] == "PASS" for v in report["verdicts"])


def test_cobar_of_the_point(tmp_path):
    code, report = run_json(tmp_path, ["cobar", str(DATA / "point.json"), "-N", "2"])
    assert code == ExitCode.PASS
    assert report["results"]["generators"] == []
    assert report["results"]["homology"]["betti"][0] == 1


def test_rigidify_between_two_vertices(tmp_path, interval):
    code, report = run_json(tmp_path, ["rigidify", interval, "--source", "0", "--target", "1", "-N", "2"])
    assert code == ExitCode.PASS
    assert report["results"]["source"] == "0"
    assert report["results"]["target"] == "1"
    assert report["results"]["homology"]["betti"][0] == 1
    assert report["cutoffs"]["max_length"] is None


def test_pi1_algebra_of_the_circle_is_free(tmp_path, capsys):
    code, report = run_json(tmp_path, ["pi1-algebra", str(DATA / "sphere1.json"), "--probe-length", "3"])
    assert code == ExitCode.PASS
    assert report["results"]["presentation"]["relations"] == []
    assert len(report["results"]["presentation"]["generators"]) == 1
    assert "free algebra" in capsys.readouterr().out


@pytest.mark.parametrize("ring", ["Z", "GF(2)", "GF(3)"])
def test_pi1_algebra_of_bz3_has_dimension_three(tmp_path, ring):
    code, report = run_json(tmp_path, ["pi1-algebra", str(DATA / "bz3.json"), "--ring", ring, "--probe-length", "4"])
    assert code == ExitCode.PASS
    assert report["results"]["probe"] == {"length": 4, "dimension": 3, "stable": True}


def test_hochschild_of_the_two_sphere(tmp_path):
    code, report = run_json(tmp_path, ["hochschild", str(DATA / "sphere2.json"), "-N", "3"])
    assert code == ExitCode.PASS
    results = report["results"]
    assert results["ranks_agree"] is True
    assert results["cohochschild"]["provenance"] == "cohochschild"
    assert results["hochschild"]["provenance"] == "hochschild"


def test_verify_rigidify_suite(tmp_path):
    code, report = run_json(tmp_path, ["verify", "--suite", "rigidify"])
    assert code == ExitCode.PASS
    assert len(report["verdicts"]) == 3
    assert {v["details"]["suite"] for v in report["verdicts"]} == {"rigidify"}


def test_verify_rejects_an_unknown_suite():
    with pytest.raises(SystemExit) as e:
        main(["verify", "--suite", "everything"])
    assert e.value.code == 2


def test_json_reports_are_reproducible(tmp_path):
    argv = ["homology", str(DATA / "sphere3.json"), "-N", "3"]
    main([*argv, "--json", str(tmp_path / "a.json")])
    main([*argv, "--json", str(tmp_path / "b.json")])
    first = (tmp_path / "a.json").read_bytes()
    assert first == (tmp_path / "b.json").read_bytes()
    assert b"wall_time" not in first


def test_homology_rejects_a_length_cutoff(capsys):
    assert main(["homology", str(DATA / "sphere2.json"), "-L", "3"]) == ExitCode.INPUT_ERROR
    assert "--max-length" in capsys.readouterr().err


def test_loop_shows_the_h0_presentation(tmp_path, capsys):
    code, report = run_json(tmp_path, ["loop", str(DATA / "bz2.json"), "-N", "4", "-L", "6"])
    assert code == ExitCode.PASS
    assert report["results"]["h0_presentation"]["text"] == "⟨a | a^2 = 1⟩"
    assert "H0 = ⟨a | a^2 = 1⟩" in capsys.readouterr().out
