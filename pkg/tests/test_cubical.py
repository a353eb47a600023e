import random

import pytest

from model import BoxMorphism
from utils.errors import InvalidStructureError
from utils.services import cubical_service, linalg_service, simplicial_service, verify_service
from utils.services.fixture_service import fixture

CUBICAL_FIXTURES = ["cube0", "cube1", "cube2", "cube3", "circle-cubical", "sphere2-cubical"]


def test_standard_cube_counts():
    assert cubical_service.standard_cube(2).counts() == [4, 4, 1]
    assert cubical_service.standard_cube(3).counts() == [8, 12, 6, 1]


@pytest.mark.parametrize("name", CUBICAL_FIXTURES)
def test_fixtures_satisfy_the_cubical_identities(name):
    assert cubical_service.identity_violations(fixture(name)) == []


def test_box_generators():
    assert BoxMorphism.coface(1, 1, 0).table == ((0, 0), (0, 1))
    assert BoxMorphism.codegeneracy(2, 2).table == ((0,), (0,), (1,), (1,))
    assert BoxMorphism.coconnection(2, 1).table == ((0,), (1,), (1,), (1,))


def test_non_monotone_table_is_rejected():
    with pytest.raises(InvalidStructureError):
        BoxMorphism(1, 1, ((1,), (0,)))


def test_broken_cubical_identity_is_found():
    entries = [
        ("v", 0, {}),
        ("w", 0, {}),
        ("a", 1, {(1, 0): ((), "v"), (1, 1): ((), "w")}),
        ("b", 1, {(1, 0): ((), "v"), (1, 1): ((), "v")}),
        ("s", 2, {(1, 0): ((), "a"), (1, 1): ((), "a"), (2, 0): ((), "b"), (2, 1): ((), "b")}),
    ]
    K = cubical_service.assemble_cubical("broken", entries)
    with pytest.raises(InvalidStructureError):
        cubical_service.validate(K)


def test_missing_faces_are_rejected():
    with pytest.raises(InvalidStructureError):
        cubical_service.assemble_cubical("broken", [("v", 0, {}), ("e", 1, {(1, 0): ((), "v")})])


@pytest.mark.parametrize("name, betti", [
    ("cube2", (1, 0, 0)),
    ("circle-cubical", (1, 1, 0)),
    ("sphere2-cubical", (1, 0, 1)),
])
def test_cubical_homology(name, betti):
    K = fixture(name)
    report = linalg_service.homology(cubical_service.chains_cubical(K, 3), 2)
    assert report.betti == betti


def test_triangulated_square():
    S = cubical_service.triangulate(cubical_service.standard_cube(2))
    assert S.counts() == [4, 5, 2]
    simplicial_service.validate(S)


def test_triangulated_cube_has_six_top_simplices():
    S = cubical_service.triangulate(cubical_service.standard_cube(3))
    assert len(S.nondegenerate(3)) == 6
    simplicial_service.validate(S)


def test_triangulated_sphere_is_one_vertex():
    S = cubical_service.triangulate(fixture("sphere2-cubical"))
    assert S.is_one_vertex()
    assert S.counts() == [1, 1, 2]


@pytest.mark.parametrize("name", CUBICAL_FIXTURES)
def test_triangulation_preserves_homology(name):
    K = fixture(name)
    N = max(K.top_dim, 1)
    cubical = linalg_service.homology(cubical_service.chains_cubical(K, N + 1), N)
    simplicial = linalg_service.homology(simplicial_service.chains(cubical_service.triangulate(K), N + 1), N)
    assert cubical.betti == simplicial.betti
    assert cubical.torsion == simplicial.torsion


def test_cubical_suite_passes():
    agree, top_simplices = verify_service.cubical_suite(random.Random(0))
    assert agree.passed, agree.counterexample
    assert agree.checked == 5
    assert top_simplices.passed
