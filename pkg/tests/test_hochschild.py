import random

import pytest

from utils.errors import ConnectivityError, TruncationError
from utils.services import cobar_service, hochschild_service, simplicial_service, verify_service
from utils.services.fixture_service import classifying_space, cyclic_group, point, sphere


def test_point_has_no_differentials():
    C = simplicial_service.aw_coalgebra(point(), 4)
    co = hochschild_service.cohochschild(C, 3)
    assert co.complex.ranks() == [1, 0, 0, 0]
    assert co.homology.betti == (1, 0, 0)
    ch = hochschild_service.hochschild(cobar_service.cobar(C, 3), 3)
    assert ch.homology.betti == (1, 0, 0)


def test_hochschild_chains_of_the_two_sphere_model():
    A = cobar_service.cobar(simplicial_service.aw_coalgebra(sphere(2), 6), 5)
    report = hochschild_service.hochschild(A, 5)
    assert report.complex.ranks()[:4] == [1, 1, 2, 3]
    assert report.exact_through == 4
    assert report.homology.betti[:4] == (1, 1, 1, 1)
    assert report.homology.torsion[2] == (2,)


def test_bar_and_rotation_terms():
    A = cobar_service.cobar(simplicial_service.aw_coalgebra(sphere(2), 4), 3)
    a = ("s0,1,2",)
    assert hochschild_service.hochschild_differential(A, (a, a)) == {(a + a,): -2}
    assert hochschild_service.hochschild_differential(A, ((), a + a)) == {}
    assert hochschild_service.hochschild_differential(A, ((), a, a)) == {((), a + a): 1}


def test_cohochschild_and_hochschild_agree_on_the_two_sphere():
    records = verify_service.hochschild_suite(random.Random(0), N=5)
    assert records[0].passed, records[0].counterexample
    assert records[0].details["cohochschild"] == [1, 1, 1, 1]


def test_cohochschild_needs_the_coalgebra_one_degree_higher():
    C = simplicial_service.aw_coalgebra(sphere(2), 3)
    with pytest.raises(TruncationError):
        hochschild_service.cohochschild(C, 3)


def test_cohochschild_needs_a_connected_coalgebra():
    C = simplicial_service.aw_coalgebra(simplicial_service.standard_simplex(1), 3)
    with pytest.raises(ConnectivityError):
        hochschild_service.cohochschild(C, 2)


def test_edge_cycle_needs_a_weight_cap():
    S = classifying_space("BZ2", *cyclic_group(2), 3)
    A = cobar_service.cobar(simplicial_service.aw_coalgebra(S, 3), 2)
    with pytest.raises(TruncationError):
        hochschild_service.hochschild(A, 2)
    report = hochschild_service.hochschild(A, 2, 4)
    assert report.truncated
    assert report.exact_through == 1
