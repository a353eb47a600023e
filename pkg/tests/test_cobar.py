import random

import pytest

from model import AlgebraPresentation, Ring
from utils.errors import ConnectivityError, TruncationError
from utils.services import cobar_service, linalg_service, rigidify_service, simplicial_service, verify_service
from utils.services.fixture_service import classifying_space, cyclic_group, fixture, point, sphere, symmetric_group3


def cobar_of(S, N, L=None):
    return cobar_service.cobar(simplicial_service.aw_coalgebra(S, N + 1), N, L)


def test_two_sphere_model_has_one_closed_generator():
    A = cobar_of(sphere(2), 4)
    assert dict(A.generators) == {"s0,1,2": 1}
    assert A.differential["s0,1,2"] == {}


def test_three_sphere_model_has_one_generator_in_degree_two():
    A = cobar_of(sphere(3), 4)
    assert dict(A.generators) == {"s0,1,2,3": 2}
    assert A.differential["s0,1,2,3"] == {}


def test_point_has_trivial_cobar():
    A = cobar_of(point(), 3)
    assert dict(A.generators) == {}
    assert cobar_service.homology_algebra(A, 2).report.betti == (1, 0, 0)


def test_cobar_requires_a_connected_coalgebra():
    C = simplicial_service.aw_coalgebra(simplicial_service.standard_simplex(1), 2)
    with pytest.raises(ConnectivityError):
        cobar_service.cobar(C, 1)


def test_differential_on_an_edge_cycle():
    A = cobar_of(classifying_space("BZ2", *cyclic_group(2), 2), 1, 4)
    assert A.differential["s(a,a)"] == {("sa",): -2, ("sa", "sa"): -1}
    assert cobar_service.differential_of(A, ("sa", "s(a,a)")) == {("sa", "sa"): -2, ("sa", "sa", "sa"): -1}


def test_degree_zero_generators_need_a_weight_cutoff():
    A = cobar_of(classifying_space("BZ2", *cyclic_group(2), 2), 1)
    with pytest.raises(TruncationError):
        cobar_service.basis(A)


def test_loop_homology_of_the_two_sphere():
    H = cobar_service.homology_algebra(cobar_of(sphere(2), 6), 5)
    assert H.report.betti == (1, 1, 1, 1, 1, 1)
    assert not H.report.truncated


def test_loop_homology_of_the_two_sphere_through_degree_eight():
    S = sphere(2)
    x = S.vertices[0]
    loops = rigidify_service.mapping_complex(S, x, x, 9)
    assert linalg_service.homology(loops.complex, 8).betti == (1,) * 9
    H = cobar_service.homology_algebra(cobar_of(S, 9), 8)
    assert H.report.betti == (1,) * 9
    assert H.report.torsion == ((),) * 9


def test_loop_homology_of_the_three_sphere_vanishes_in_odd_degrees():
    H = cobar_service.homology_algebra(cobar_of(sphere(3), 8), 7)
    assert H.report.betti == (1, 0, 1, 0, 1, 0, 1, 0)
    assert all(H.report.betti[n] == 0 for n in (1, 3, 5, 7))
    assert any(c != 0 for c in H.products[(2, 0, 4, 0)])


def test_loop_homology_of_the_three_sphere_is_polynomial():
    H = cobar_service.homology_algebra(cobar_of(sphere(3), 7), 6)
    assert H.report.betti == (1, 0, 1, 0, 1, 0, 1)
    assert any(c != 0 for c in H.products[(2, 0, 2, 0)])
    assert any(c != 0 for c in H.products[(2, 0, 4, 0)])


def test_exact_degree_with_a_weight_cap():
    A = cobar_of(classifying_space("BZ2", *cyclic_group(2), 4), 6, 8)
    assert cobar_service.exact_degree(A, 6, None) == 5
    assert cobar_service.exact_degree(A, 6, 8) == 3


@pytest.mark.parametrize("name, N, L", [("sphere2", 5, None), ("sphere3", 6, None), ("bz2", 4, 6), ("point", 3, None)])
def test_loop_complex_and_cobar_are_isomorphic(name, N, L):
    records = cobar_service.loop_cobar_iso(fixture(name), N, L)
    assert len(records) == 3
    for record in records:
        assert record.passed, f"{record.name}: {record.counterexample}"
        assert record.checked > 0


def test_phi_adds_the_unit_on_edges():
    S = classifying_space("BZ2", *cyclic_group(2), 2)
    w = rigidify_service.make_word(S, ["a"])
    assert cobar_service.phi(S, w) == {("sa",): 1, (): 1}
    assert cobar_service.psi(S, ("sa",), "*") == {w: 1, rigidify_service.make_word(S, [], "*", "*"): -1}


def test_loop_cobar_iso_rejects_several_vertices():
    with pytest.raises(ConnectivityError):
        cobar_service.loop_cobar_iso(simplicial_service.standard_simplex(1), 2)


def test_h0_presentation_of_cyclic_group():
    P = cobar_service.h0_presentation(classifying_space("BZ2", *cyclic_group(2), 2))
    assert P.generators == ("a",)
    assert P.relations == (((("a", "a"), 1), ((), -1)),)
    assert cobar_service.dimension_probe(P, 3) == (3, 2, True)


def test_h0_presentation_of_a_circle_is_free():
    P = cobar_service.h0_presentation(sphere(1))
    assert P.generators == ("0,1",)
    assert P.relations == ()
    probe = cobar_service.dimension_probe(P, 3)
    assert probe.dimension == 4
    assert not probe.stable


def test_h0_presentation_of_a_simply_connected_model():
    P = cobar_service.h0_presentation(sphere(2))
    assert P.generators == ()
    assert str(P) == "⟨ | ⟩"
    assert cobar_service.dimension_probe(P, 2).dimension == 1


@pytest.mark.parametrize("elements, table, order, length", [
    (*cyclic_group(2), 2, 3),
    (*cyclic_group(3), 3, 4),
    (*symmetric_group3(), 6, 3),
])
def test_h0_of_a_group_has_group_order_dimension(elements, table, order, length):
    P = cobar_service.h0_presentation(classifying_space("BG", elements, table, 2), Ring.rationals())
    probe = cobar_service.dimension_probe(P, length)
    assert probe.dimension == order
    assert probe.stable


def test_structural_properties_on_random_instances():
    records = verify_service.structural_suite(random.Random(7), instances=15)
    assert all(r.passed for r in records), [r.to_dict() for r in records if not r.passed]


def test_iso_suite_on_small_truncations():
    fixtures = (("sphere2", 5, None, True), ("sphere3", 6, None, True), ("bz2", 4, 6, True), ("bz3", 3, 4, False))
    records = verify_service.iso_suite(random.Random(0), fixtures)
    assert all(r.passed for r in records), [r.to_dict() for r in records if not r.passed]
    homology = records[-1]
    assert homology.checked == 3
    assert homology.details["compared"] == ["sphere2", "sphere3", "bz2"]
    assert "Smith normal form" in homology.details["skipped"]["bz3"]
    bz3 = [r for r in records if r.name.startswith("bz3: ")]
    assert len(bz3) == 3
    assert all(r.details["max_length"] == 4 and "cutoff_note" in r.details for r in bz3)


@pytest.mark.slow
def test_iso_suite_passes():
    records = verify_service.iso_suite(random.Random(0))
    assert all(r.passed for r in records), [r.to_dict() for r in records if not r.passed]
    assert [name for name, _, _, _ in verify_service.ISO_FIXTURES] == ["sphere2", "sphere3", "bz2", "bz3"]
    assert all("cutoff_note" in r.details for r in records if r.name.startswith("bz3: "))


@pytest.mark.parametrize("ring", ["Z", "Q", "GF(2)", "GF(3)"])
def test_h0_of_cyclic_group_of_order_three_in_every_ring(ring):
    P = cobar_service.h0_presentation(classifying_space("BZ3", *cyclic_group(3), 2), Ring.parse(ring))
    assert all(sorted(c for _, c in r) == [-1, 1] for r in P.relations)
    assert cobar_service.dimension_probe(P, 4) == (4, 3, True)


def test_reduced_binomials_identify_words():
    P = AlgebraPresentation("a² = 1 mod 3", Ring.prime_field(3), ("a",), (((("a", "a"), 1), ((), 2)),))
    assert cobar_service.dimension_probe(P, 3) == (3, 2, True)
    assert str(P) == "⟨a | a^2 = 1⟩"


def test_relation_rank_is_taken_in_the_coefficient_field():
    relation = (((("a",), 2),),)
    over_gf2 = AlgebraPresentation("2a", Ring.prime_field(2), ("a",), relation)
    over_q = AlgebraPresentation("2a", Ring.rationals(), ("a",), relation)
    assert cobar_service.dimension_probe(over_gf2, 2).dimension == 3
    assert cobar_service.dimension_probe(over_q, 2).dimension == 1
