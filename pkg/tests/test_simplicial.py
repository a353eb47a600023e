import gc
import random
import weakref

import pytest

from hypothesis import given, settings, strategies as st

from model import SimplexRef
from utils.errors import InvalidStructureError
from utils.services import linalg_service, simplicial_service, verify_service
from utils.services.fixture_service import classifying_space, cyclic_group, sphere


def test_standard_simplex_counts():
    S = simplicial_service.standard_simplex(3)
    assert S.counts() == [4, 6, 4, 1]
    assert simplicial_service.identity_violations(S) == []


def test_faces_of_a_standard_simplex():
    S = simplicial_service.standard_simplex(2)
    top = S.ref("0,1,2")
    assert simplicial_service.face(S, top, 0) == S.ref("1,2")
    assert simplicial_service.face(S, top, 2) == S.ref("0,1")
    assert simplicial_service.front(S, top, 1) == S.ref("0,1")
    assert simplicial_service.back(S, top, 1) == S.ref("1,2")
    assert simplicial_service.vertices(S, top) == ("0", "1", "2")


def test_degeneracy_then_face_is_the_identity():
    S = simplicial_service.standard_simplex(2)
    edge = S.ref("0,1")
    degenerate = simplicial_service.degeneracy(S, edge, 0)
    assert degenerate.is_degenerate
    assert degenerate.dim == 2
    assert simplicial_service.face(S, degenerate, 0) == edge
    assert simplicial_service.face(S, degenerate, 1) == edge


def test_sphere_collapses_its_boundary():
    S = sphere(2)
    assert S.is_one_vertex()
    assert S.counts() == [1, 0, 1]
    top = S.ref(S.nondegenerate(2)[0])
    assert simplicial_service.face(S, top, 1) == SimplexRef(S.base_vertex, (0,), 1)


def test_wedge_identifies_base_vertices():
    W = simplicial_service.wedge(sphere(2), sphere(2))
    assert W.counts() == [1, 0, 2]
    report = linalg_service.homology(simplicial_service.chains(W, 3), 2)
    assert report.betti == (1, 0, 2)


def test_nerve_of_cyclic_group_has_torsion():
    B = classifying_space("BZ2", *cyclic_group(2), 4)
    assert B.counts() == [1, 1, 1, 1, 1]
    report = linalg_service.homology(simplicial_service.chains(B, 4), 3)
    assert report.betti == (1, 0, 0, 0)
    assert report.torsion == ((), (2,), (), (2,))


def test_nerve_rejects_a_table_without_identity():
    table = {("a", "a"): "b", ("a", "b"): "b", ("b", "a"): "b", ("b", "b"): "a"}
    with pytest.raises(InvalidStructureError):
        simplicial_service.nerve_monoid(["a", "b"], table, 2)


def test_assemble_rejects_a_face_of_the_wrong_dimension():
    entries = [("v", 0, []), ("e", 1, [((), "v"), ((0,), "v")])]
    with pytest.raises(InvalidStructureError):
        simplicial_service.assemble("broken", entries)


def test_validate_finds_a_broken_identity():
    entries = [
        ("a", 0, []), ("b", 0, []),
        ("x", 1, [((), "b"), ((), "a")]),
        ("y", 1, [((), "b"), ((), "a")]),
        ("t", 2, [((), "x"), ((), "x"), ((), "y")]),
    ]
    S = simplicial_service.assemble("broken", entries)
    with pytest.raises(InvalidStructureError):
        simplicial_service.validate(S)


def test_quotient_requires_a_face_closed_subcomplex():
    S = simplicial_service.standard_simplex(1)
    with pytest.raises(InvalidStructureError):
        simplicial_service.quotient(S, ["0,1"])


def test_alexander_whitney_coproduct_of_a_triangle():
    S = simplicial_service.standard_simplex(2)
    C = simplicial_service.aw_coalgebra(S, 2)
    assert C.coproduct["0,1,2"] == {("0", "0,1,2"): 1, ("0,1", "1,2"): 1, ("0,1,2", "2"): 1}
    assert not C.connected


def test_coalgebra_laws_on_a_simplex():
    C = simplicial_service.aw_coalgebra(simplicial_service.standard_simplex(3), 3)
    for record in simplicial_service.check_coalgebra(C):
        assert record.passed, record.counterexample


@settings(max_examples=25, derandomize=True, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_random_simplicial_sets_are_valid_and_coalgebras(seed):
    S = verify_service.random_simplicial_set(random.Random(seed))
    simplicial_service.validate(S)
    C = simplicial_service.aw_coalgebra(S, S.top_dim)
    assert all(record.passed for record in simplicial_service.check_coalgebra(C))


def test_operator_results_are_kept_on_the_set_they_belong_to():
    S = sphere(2)
    top = S.ref("0,1,2")
    edge = simplicial_service.face(S, top, 0)
    assert S.operators[(top, (1, 2))] == edge
    assert sphere(2).operators == {}
    alive = weakref.ref(S)
    del S
    gc.collect()
    assert alive() is None
