import json

from pathlib import Path

import pytest

from model import CubicalSetFG, DGCategory, SimplicialSet
from utils import loaders
from utils.errors import InputError, InvalidStructureError
from utils.services.fixture_service import FIXTURES, fixture

DATA = Path(__file__).resolve().parent.parent / "data"


def write(tmp_path, document, name="input.json"):
    path = tmp_path / name
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


@pytest.mark.parametrize("name, kind", [
    ("point.json", SimplicialSet),
    ("sphere1.json", SimplicialSet),
    ("sphere2.json", SimplicialSet),
    ("sphere3.json", SimplicialSet),
    ("bz2.json", SimplicialSet),
    ("bz3.json", SimplicialSet),
    ("wedge22.json", SimplicialSet),
    ("circle-cubical.json", CubicalSetFG),
    ("dgcat-one.json", DGCategory),
])
def test_bundled_inputs_load(name, kind):
    structure, sha = loaders.load(DATA / name)
    assert isinstance(structure, kind)
    assert len(sha) == 64


def test_sphere_file_matches_the_builder():
    S, _ = loaders.load(DATA / "sphere2.json")
    assert S.is_one_vertex()
    assert S.counts() == fixture("sphere2").counts()


@pytest.mark.parametrize("name", ["bz2", "bz3", "wedge22"])
def test_bundled_models_match_their_builders(name):
    S, _ = loaders.load(DATA / f"{name}.json")
    built = loaders.dump(fixture(name))
    shipped = loaders.dump(S)
    assert shipped["name"] == built["name"]
    assert sorted(shipped["simplices"], key=lambda s: s["id"]) == sorted(built["simplices"], key=lambda s: s["id"])


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_dumped_fixtures_load_back(tmp_path, name):
    original = fixture(name)
    structure, _ = loaders.load(write(tmp_path, loaders.dump(original)))
    assert type(structure) is type(original)
    assert structure.name == original.name
    if not isinstance(original, DGCategory):
        assert structure.counts() == original.counts()


def test_digest_is_stable(tmp_path):
    path = write(tmp_path, loaders.dump(fixture("sphere2")))
    assert loaders.load(path)[1] == loaders.load(path)[1]


def test_format_is_detected_without_a_format_field():
    assert loaders.detect_format({"simplices": []}) == "cobarlab/simplicial-set@1"
    assert loaders.detect_format({"cells": []}) == "cobarlab/cubical-set@1"
    assert loaders.detect_format({"prime": 2, "objects": []}) == "cobarlab/dg-category@1"
    with pytest.raises(InputError):
        loaders.detect_format({"vertices": []})


def test_unknown_format_is_reported(tmp_path):
    with pytest.raises(InputError) as e:
        loaders.load(write(tmp_path, {"format": "cobarlab/other@1"}))
    assert e.value.location == "$.format"


def test_wrong_face_count_points_at_the_simplex(tmp_path):
    document = {"simplices": [{"id": "v", "dim": 0}, {"id": "e", "dim": 1, "faces": [{"base": "v"}]}]}
    with pytest.raises(InputError) as e:
        loaders.load(write(tmp_path, document))
    assert e.value.location == "$.simplices[1]"


def test_bad_degeneracy_word_points_at_the_field(tmp_path):
    document = {"simplices": [
        {"id": "v", "dim": 0},
        {"id": "e", "dim": 1, "faces": [{"word": [1, 0], "base": "v"}, {"base": "v"}]},
    ]}
    with pytest.raises(InputError) as e:
        loaders.load(write(tmp_path, document))
    assert e.value.location == "$.simplices[1].faces[0].word"


def test_unknown_face_is_a_structure_error(tmp_path):
    document = {"simplices": [{"id": "e", "dim": 1, "faces": [{"base": "v"}, {"base": "v"}]}]}
    with pytest.raises(InvalidStructureError):
        loaders.load(write(tmp_path, document))


def test_malformed_json_reports_line_and_column(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"simplices": [\n  {"id": }\n]}', encoding="utf-8")
    with pytest.raises(InputError) as e:
        loaders.load(path)
    assert e.value.location.startswith(f"{path}:2:")


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        loaders.load(tmp_path / "absent.json")


def test_top_level_must_be_an_object(tmp_path):
    with pytest.raises(InputError):
        loaders.load(write(tmp_path, [1, 2, 3]))


def test_composition_with_unknown_label(tmp_path):
    document = loaders.dump(fixture("dgcat-one"))
    document["composition"][0]["outer"] = ["o", "o", "nope"]
    with pytest.raises(InvalidStructureError):
        loaders.load(write(tmp_path, document))
