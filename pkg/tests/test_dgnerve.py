import random

import pytest

from model import HomSpace
from utils.errors import InvalidStructureError
from utils.services import dgnerve_service, verify_service
from utils.services.fixture_service import dgcat_one, dgcat_two


def test_dg_nerve_simplex_counts_of_one_object():
    C = dgcat_one()
    assert len(dgnerve_service.dg_nerve_simplices(C, 0)) == 1
    assert len(dgnerve_service.dg_nerve_simplices(C, 1)) == 2
    assert len(dgnerve_service.dg_nerve_simplices(C, 2)) == 8


def test_identity_edge_is_degenerate():
    C = dgcat_one()
    edges = dgnerve_service.dg_nerve_simplices(C, 1)
    words = sorted(dgnerve_service.ez_form(C, x)[0] for x in edges)
    assert words == [(), (0,)]


def test_nerve_as_a_simplicial_set():
    S = dgnerve_service.nerve_simplicial_set(dgcat_one(), 1)
    assert S.counts() == [1, 1]


def test_every_ordered_pair_of_objects_spans_an_edge():
    C = dgcat_two()
    simplices = dgnerve_service.dg_nerve_simplices(C, 1)
    assert {x.objects for x in simplices} == {("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")}
    assert len(simplices) == 7


def test_face_of_a_two_simplex():
    C = dgcat_one()
    x = dgnerve_service.dg_nerve_simplices(C, 2)[-1]
    edge = dgnerve_service.structure_map(C, x, (0, 2))
    assert edge.dim == 1
    assert edge.f((0, 1)) == x.f((0, 2))


@pytest.mark.parametrize("make", [dgcat_one, dgcat_two])
@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_functors_out_of_simplex_paths_are_nerve_simplices(make, n):
    records = dgnerve_service.adjunction_check(make(), n)
    for record in records:
        assert record.passed, f"{record.name}: {record.counterexample}"


def test_identity_must_have_degree_zero():
    hom = HomSpace("o", "o", ("1", "t"), (0, 1), ((0, 0), (0, 0)))
    composition = {("o", "o", "o"): {(0, 0): (1, 0), (0, 1): (0, 1), (1, 0): (0, 1), (1, 1): (0, 0)}}
    with pytest.raises(InvalidStructureError):
        dgnerve_service.make_category("bad", 2, ("o",), {("o", "o"): hom}, composition, {"o": (0, 1)})


def test_differential_must_square_to_zero():
    hom = HomSpace("o", "o", ("1", "u", "v"), (0, 1, 2), ((0, 0, 0), (1, 0, 0), (0, 1, 0)))
    with pytest.raises(InvalidStructureError):
        dgnerve_service.make_category("bad", 2, ("o",), {("o", "o"): hom}, {}, {"o": (1, 0, 0)})


def test_adjunction_suite_covers_both_categories_through_dimension_three():
    records = verify_service.adjunction_suite(random.Random(0))
    assert all(r.passed for r in records), [r.to_dict() for r in records if not r.passed]
    assert any(r.name == "dgcat-two: dg functors ≅ dg nerve simplices in dimension 3" for r in records)
    assert any(r.name.startswith("dgcat-one: ") for r in records)
