import pytest

from hypothesis import given, settings, strategies as st

from model import Matrix, Ring
from utils.errors import BoundaryError, TruncationError
from utils.services import linalg_service, simplicial_service
from utils.services.fixture_service import sphere

small_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda rows: st.integers(min_value=1, max_value=4).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(min_value=-6, max_value=6), min_size=cols, max_size=cols),
            min_size=rows, max_size=rows)))


def test_smith_normal_form_small_example():
    M = Matrix.from_rows([[2, 4], [6, 8]])
    D, U, V = linalg_service.smith_normal_form(M)
    assert D.to_lists() == [[2, 0], [0, 4]]
    assert (U @ M @ V) == D
    assert abs(linalg_service.determinant(U)) == 1
    assert abs(linalg_service.determinant(V)) == 1


def test_invariant_factors_of_zero_matrix():
    assert linalg_service.invariant_factors(Matrix.zeros(2, 3)) == []


@settings(max_examples=60, derandomize=True, deadline=None)
@given(small_matrices)
def test_smith_normal_form_is_a_unimodular_diagonalization(rows):
    M = Matrix.from_rows(rows)
    D, U, V = linalg_service.smith_normal_form(M)
    assert U @ M @ V == D
    assert abs(linalg_service.determinant(U)) == 1
    assert abs(linalg_service.determinant(V)) == 1

    diagonal = [D[k, k] for k in range(min(D.shape))]
    for i in range(D.rows):
        for j in range(D.cols):
            if i != j:
                assert D[i, j] == 0
    assert all(d >= 0 for d in diagonal)
    nonzero = [d for d in diagonal if d]
    assert diagonal[:len(nonzero)] == nonzero
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert len(nonzero) == M.rank(Ring.integers())


def test_homology_reports_torsion():
    basis = {0: ["v"], 1: ["e"], 2: ["f"]}
    boundary = {"v": {}, "e": {}, "f": {"e": 2}}
    complex = linalg_service.build_complex(Ring.integers(), basis, boundary.__getitem__, "RP2")
    report = linalg_service.homology(complex)
    assert report.betti == (1, 0, 0)
    assert report.torsion == ((), (2,), ())
    assert linalg_service.universal_coefficients(report, 2) == (1, 1, 1)
    assert linalg_service.universal_coefficients(report, 3) == (1, 0, 0)


def test_homology_over_a_prime_field_sees_the_torsion():
    basis = {0: ["v"], 1: ["e"], 2: ["f"]}
    boundary = {"v": {}, "e": {}, "f": {"e": 2}}
    complex = linalg_service.build_complex(Ring.parse("GF(2)"), basis, boundary.__getitem__)
    report = linalg_service.homology(complex)
    assert report.betti == (1, 1, 1)
    assert report.torsion == ((), (), ())


def test_build_complex_rejects_terms_outside_the_truncation():
    with pytest.raises(TruncationError):
        linalg_service.build_complex(Ring.integers(), {0: ["v"], 1: ["e"]}, lambda b: {"w": 1} if b == "e" else {})


def test_boundary_that_does_not_square_to_zero_is_rejected():
    basis = {0: ["v"], 1: ["e"], 2: ["f"]}
    boundary = {"v": {}, "e": {"v": 1}, "f": {"e": 1}}
    with pytest.raises(BoundaryError):
        linalg_service.build_complex(Ring.integers(), basis, boundary.__getitem__)


def test_sphere_homology():
    S = sphere(2)
    report = linalg_service.homology(simplicial_service.chains(S, 3), 2)
    assert report.betti == (1, 0, 1)
    assert not report.truncated
