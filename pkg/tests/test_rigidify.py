import pytest

from model import CobarWord
from utils.errors import InvalidStructureError, TruncationError
from utils.services import linalg_service, rigidify_service, simplicial_service
from utils.services.fixture_service import classifying_space, cyclic_group, sphere


def word(beads, degree, weight, point="*"):
    return CobarWord(tuple(beads), point, point, degree, weight)


def test_paths_across_a_triangle_form_an_interval():
    S = simplicial_service.standard_simplex(2)
    M = rigidify_service.mapping_complex(S, "0", "2", 1)
    long, short = CobarWord(("0,1", "1,2"), "0", "2", 0, 2), CobarWord(("0,2",), "0", "2", 0, 1)
    top = CobarWord(("0,1,2",), "0", "2", 1, 2)
    assert M.words(0) == (short, long)
    assert M.words(1) == (top,)
    assert M.complex.boundary_of(1, top) == {short: -1, long: 1}
    assert linalg_service.homology(M.complex, 1).betti == (1, 0)


def test_loops_on_the_two_sphere_have_zero_differential():
    S = sphere(2)
    M = rigidify_service.mapping_complex(S, "*", "*", 4)
    assert M.complex.ranks() == [1, 1, 1, 1, 1]
    assert all(M.complex.differential(n).is_zero() for n in range(1, 5))
    assert M.truncated


def test_degenerate_face_becomes_the_empty_word():
    S = classifying_space("BZ2", *cyclic_group(2), 2)
    M = rigidify_service.mapping_complex(S, "*", "*", 1, 4)
    square = word(["(a,a)"], 1, 2)
    assert M.complex.boundary_of(1, square) == {word(["a", "a"], 0, 2): 1, word([], 0, 0): -1}
    assert M.truncated


def test_edge_cycle_requires_a_length_cutoff():
    S = classifying_space("BZ2", *cyclic_group(2), 2)
    assert rigidify_service.has_edge_cycle(S)
    with pytest.raises(TruncationError):
        rigidify_service.mapping_complex(S, "*", "*", 2)


def test_mapping_complex_rejects_a_non_vertex():
    with pytest.raises(InvalidStructureError):
        rigidify_service.mapping_complex(simplicial_service.standard_simplex(2), "0,1", "2", 1)


def test_negative_cutoffs_are_rejected():
    with pytest.raises(TruncationError):
        rigidify_service.mapping_complex(simplicial_service.standard_simplex(1), "0", "1", -1)


def test_composition_is_concatenation():
    S = simplicial_service.standard_simplex(2)
    u = rigidify_service.make_word(S, ["1,2"])
    v = rigidify_service.make_word(S, ["0,1"])
    composite = rigidify_service.compose(u, v)
    assert composite.beads == ("0,1", "1,2")
    assert composite.degree == u.degree + v.degree
    with pytest.raises(ValueError):
        rigidify_service.compose(v, u)


def test_unit_laws():
    S = sphere(2)
    w = rigidify_service.make_word(S, ["0,1,2", "0,1,2"])
    unit = rigidify_service.make_word(S, [], "*", "*")
    assert rigidify_service.multiply(unit, w) == w == rigidify_service.multiply(w, unit)
    assert w.degree == 2


def test_product_table_of_sphere_loops():
    M = rigidify_service.mapping_complex(sphere(2), "*", "*", 2)
    assert len(M.product_table()) == 6


def test_exact_degree():
    assert rigidify_service.exact_degree(sphere(2), 6) == 5
    assert rigidify_service.exact_degree(sphere(2), 6, 8) == 3
    assert rigidify_service.exact_degree(sphere(3), 6, 6) == 3


@pytest.mark.parametrize("n", [1, 2, 3])
def test_paths_through_a_simplex_match_the_cube(n):
    mapping, record = rigidify_service.cube_correspondence(n)
    assert record.passed, record.counterexample
    assert len(mapping) == 3 ** (n - 1)


def test_leibniz_rule_on_loops():
    S = classifying_space("BZ2", *cyclic_group(2), 3)
    M = rigidify_service.mapping_complex(S, "*", "*", 2, 5)
    for (u, v), uv in M.product_table().items():
        lhs = rigidify_service.chain_differential(S, {uv: 1})
        rhs = rigidify_service.multiply_chains(rigidify_service.chain_differential(S, {u: 1}), {v: 1})
        for w, c in rigidify_service.multiply_chains({u: 1}, rigidify_service.chain_differential(S, {v: 1})).items():
            rhs[w] = rhs.get(w, 0) + (-1) ** u.degree * c
        assert lhs == {w: c for w, c in rhs.items() if c}
