import logging

from itertools import permutations, product
from typing import Callable, Dict, List, Tuple, Union

from model import CubicalSetFG, DGCategory, HomSpace, SimplicialSet
from utils.errors import InputError

from . import cubical_service, dgnerve_service
from .simplicial_service import assemble, boundary_subcomplex, nerve_monoid, quotient, standard_simplex, wedge

logger = logging.getLogger(__name__)

Fixture = Union[SimplicialSet, CubicalSetFG, DGCategory]
Table = Dict[Tuple[str, str], str]


def cyclic_group(m: int) -> Tuple[List[str], Table]:
    """ℤ/m written multiplicatively on e, a, a2, ..."""

    names = ["e", "a"] + [f"a{k}" for k in range(2, m)]
    names = names[:m]
    table = {(names[i], names[j]): names[(i + j) % m] for i, j in product(range(m), repeat=2)}
    return names, table


def symmetric_group3() -> Tuple[List[str], Table]:
    """S₃ with permutations named by their images, the identity named e; (ab)(i) = a(b(i))"""

    perms = list(permutations(range(3)))

    def name(p):
        return "e" if p == (0, 1, 2) else "".join(map(str, p))

    table = {(name(a), name(b)): name(tuple(a[b[i]] for i in range(3))) for a, b in product(perms, repeat=2)}
    return [name(p) for p in perms], table


def point() -> SimplicialSet:
    return assemble("point", [("*", 0, [])], "*")


def sphere(n: int) -> SimplicialSet:
    """Δⁿ/∂Δⁿ"""

    simplex = standard_simplex(n)
    return quotient(simplex, boundary_subcomplex(simplex), f"S{n}")


def classifying_space(name: str, elements: List[str], table: Table, D: int) -> SimplicialSet:
    return nerve_monoid(elements, table, D, name)


def dgcat_one() -> DGCategory:
    """One object with hom = GF(2)⟨1, t⟩, |t| = 1, t² = 0"""

    hom = HomSpace("o", "o", ("1", "t"), (0, 1), ((0, 0), (0, 0)))
    composition = {("o", "o", "o"): {(0, 0): (1, 0), (0, 1): (0, 1), (1, 0): (0, 1), (1, 1): (0, 0)}}
    return dgnerve_service.make_category("dgcat-one", 2, ("o",), {("o", "o"): hom}, composition, {"o": (1, 0)})


def dgcat_two() -> DGCategory:
    """Objects a, b with hom(a, b) = GF(2)⟨f, h⟩, |f| = 0, |h| = 1, dh = f"""

    homs = {
        ("a", "a"): HomSpace("a", "a", ("id",), (0,), ((0,),)),
        ("b", "b"): HomSpace("b", "b", ("id",), (0,), ((0,),)),
        ("a", "b"): HomSpace("a", "b", ("f", "h"), (0, 1), ((0, 0), (1, 0))),
    }
    composition = {
        ("a", "a", "a"): {(0, 0): (1,)},
        ("b", "b", "b"): {(0, 0): (1,)},
        ("a", "a", "b"): {(0, 0): (1, 0), (1, 0): (0, 1)},
        ("a", "b", "b"): {(0, 0): (1, 0), (0, 1): (0, 1)},
    }
    return dgnerve_service.make_category("dgcat-two", 2, ("a", "b"), homs, composition, {"a": (1,), "b": (1,)})


FIXTURES: Dict[str, Callable[[], Fixture]] = {
    "point": point,
    "sphere1": lambda: sphere(1),
    "sphere2": lambda: sphere(2),
    "sphere3": lambda: sphere(3),
    "wedge22": lambda: wedge(sphere(2), sphere(2), "S2∨S2"),
    "bz2": lambda: classifying_space("Bℤ/2≤4", *cyclic_group(2), 4),
    "bz3": lambda: classifying_space("Bℤ/3≤3", *cyclic_group(3), 3),
    "bs3": lambda: classifying_space("BS3≤2", *symmetric_group3(), 2),
    "cube0": lambda: cubical_service.standard_cube(0),
    "cube1": lambda: cubical_service.standard_cube(1),
    "cube2": lambda: cubical_service.standard_cube(2),
    "cube3": lambda: cubical_service.standard_cube(3),
    "circle-cubical": cubical_service.cubical_circle,
    "sphere2-cubical": cubical_service.cubical_sphere2,
    "dgcat-one": dgcat_one,
    "dgcat-two": dgcat_two,
}


def fixture(name: str) -> Fixture:
    try:
        factory = FIXTURES[name]
    except KeyError:
        raise InputError(f"unknown fixture '{name}', expected one of {', '.join(FIXTURES)}")
    logger.debug("building fixture %s", name)
    return factory()
