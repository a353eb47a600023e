import logging

from itertools import combinations, product
from typing import Callable, Dict, Iterator, List, Mapping, Sequence, Tuple

from model import CobarWord, DGCategory, DGNerveSimplex, HomSpace, SimplicialSet, Vector, VerificationRecord
from utils.config import cfg
from utils.errors import EnumerationBoundError, InvalidStructureError

from . import rigidify_service, simplicial_service

logger = logging.getLogger(__name__)

Subset = Tuple[int, ...]
Family = Dict[Subset, Vector]


def add(p: int, *vectors: Vector) -> Vector:
    return tuple(sum(entries) % p for entries in zip(*vectors))


def scale(p: int, c: int, v: Vector) -> Vector:
    return tuple(c * a % p for a in v)


def differential(C: DGCategory, source: str, target: str, v: Vector) -> Vector:
    hom = C.hom(source, target)
    out = hom.zero()
    for j, c in enumerate(v):
        if c:
            out = add(C.prime, out, scale(C.prime, c, hom.differential[j]))
    return out


def compose(C: DGCategory, X: str, Y: str, Z: str, g: Vector, f: Vector) -> Vector:
    """g ∘ f for f in hom(X, Y) and g in hom(Y, Z)"""

    out = C.hom(X, Z).zero()
    table = C.composition.get((X, Y, Z), {})
    for (i, j), value in table.items():
        c = g[i] * f[j] % C.prime
        if c:
            out = add(C.prime, out, scale(C.prime, c, value))
    return out


def _basis_vector(hom: HomSpace, i: int) -> Vector:
    return tuple(int(k == i) for k in range(hom.rank))


def _supported_in(hom: HomSpace, v: Vector, degree: int) -> bool:
    return all(c == 0 or hom.degrees[k] == degree for k, c in enumerate(v))


def make_category(name: str, prime: int, objects: Sequence[str], homs: Mapping[Tuple[str, str], HomSpace],
                  composition: Mapping[Tuple[str, str, str], Dict[Tuple[int, int], Vector]],
                  identities: Mapping[str, Vector]) -> DGCategory:
    """Fills absent hom spaces with zero and validates the result."""

    objects = tuple(objects)
    full = dict(homs)
    for X, Y in product(objects, repeat=2):
        full.setdefault((X, Y), HomSpace(X, Y, (), (), ()))
    C = DGCategory(name, prime, objects, full, composition, identities)
    validate(C)
    return C


def validate(C: DGCategory) -> None:
    """Raises InvalidStructureError unless C is a dg category: d² = 0, graded Leibniz, associativity and units."""

    p = C.prime
    for (X, Y), hom in C.homs.items():
        if len(hom.degrees) != hom.rank or len(hom.differential) != hom.rank:
            raise InvalidStructureError(f"hom({X},{Y}) has inconsistent basis data", C.name)
        for j in range(hom.rank):
            dj = hom.differential[j]
            if len(dj) != hom.rank or not _supported_in(hom, dj, hom.degrees[j] - 1):
                raise InvalidStructureError(f"d of basis element {hom.labels[j]} of hom({X},{Y}) has the wrong degree",
                                            C.name)
            if any(differential(C, X, Y, dj)):
                raise InvalidStructureError(f"d² is not zero on {hom.labels[j]} in hom({X},{Y})", C.name)
    for X in C.objects:
        unit = C.identities.get(X)
        hom = C.hom(X, X)
        if unit is None or len(unit) != hom.rank or not _supported_in(hom, unit, 0) or any(differential(C, X, X, unit)):
            raise InvalidStructureError(f"identity of {X} must be a degree 0 cycle", C.name)
    for X, Y, Z in product(C.objects, repeat=3):
        f_hom, g_hom = C.hom(X, Y), C.hom(Y, Z)
        for i, j in product(range(g_hom.rank), range(f_hom.rank)):
            g, f = _basis_vector(g_hom, i), _basis_vector(f_hom, j)
            gf = compose(C, X, Y, Z, g, f)
            if not _supported_in(C.hom(X, Z), gf, g_hom.degrees[i] + f_hom.degrees[j]):
                raise InvalidStructureError(f"composition ({Y},{Z})[{i}] ∘ ({X},{Y})[{j}] has the wrong degree", C.name)
            leibniz = add(p, compose(C, X, Y, Z, differential(C, Y, Z, g), f),
                          scale(p, (-1) ** g_hom.degrees[i], compose(C, X, Y, Z, g, differential(C, X, Y, f))))
            if differential(C, X, Z, gf) != leibniz:
                raise InvalidStructureError(f"composition is not a chain map on ({Y},{Z})[{i}] ∘ ({X},{Y})[{j}]",
                                            C.name)
    for X, Y in product(C.objects, repeat=2):
        hom = C.hom(X, Y)
        for j in range(hom.rank):
            f = _basis_vector(hom, j)
            if compose(C, X, Y, Y, C.identities[Y], f) != f or compose(C, X, X, Y, f, C.identities[X]) != f:
                raise InvalidStructureError(f"unit law fails on {hom.labels[j]} in hom({X},{Y})", C.name)
    for W, X, Y, Z in product(C.objects, repeat=4):
        for i, j, k in product(range(C.hom(Y, Z).rank), range(C.hom(X, Y).rank), range(C.hom(W, X).rank)):
            h, g, f = _basis_vector(C.hom(Y, Z), i), _basis_vector(C.hom(X, Y), j), _basis_vector(C.hom(W, X), k)
            left = compose(C, W, Y, Z, h, compose(C, W, X, Y, g, f))
            right = compose(C, W, X, Z, compose(C, X, Y, Z, h, g), f)
            if left != right:
                raise InvalidStructureError(f"composition is not associative on {W}->{X}->{Y}->{Z}", C.name)


def subsets(n: int) -> List[Subset]:
    """Subsets of [n] with at least two elements, smaller ones first."""

    return [I for k in range(2, n + 2) for I in combinations(range(n + 1), k)]


def nerve_boundary(C: DGCategory, objects: Sequence[str], family: Family, I: Subset) -> Vector:
    """Σ_k (-1)^k (f_{I-a_k} - f_{I∩[a_k,i+]} ∘ f_{I∩[i-,a_k]}) over the interior a_1 < ... < a_m of I."""

    p = C.prime
    first, last = I[0], I[-1]
    out = C.hom(objects[first], objects[last]).zero()
    for k, a in enumerate(I[1:-1], start=1):
        head = tuple(v for v in I if v <= a)
        tail = tuple(v for v in I if v >= a)
        split = compose(C, objects[first], objects[a], objects[last], family[tail], family[head])
        term = add(p, family[tuple(v for v in I if v != a)], scale(p, -1, split))
        out = add(p, out, scale(p, (-1) ** k, term))
    return out


def _candidates(C: DGCategory, hom: HomSpace, degree: int) -> Iterator[Vector]:
    slots = hom.degree_slots(degree)
    for values in product(range(C.prime), repeat=len(slots)):
        v = [0] * hom.rank
        for slot, c in zip(slots, values):
            v[slot] = c
        yield tuple(v)


def _search_size(C: DGCategory, n: int) -> int:
    total = 0
    for objects in product(C.objects, repeat=n + 1):
        count = 1
        for I in subsets(n):
            count *= C.prime ** len(C.hom(objects[I[0]], objects[I[-1]]).degree_slots(len(I) - 2))
        total += count
    return total


def _families(C: DGCategory, n: int,
              required: Callable[[Sequence[str], Family, Subset], Vector]) -> Iterator[Tuple[Tuple[str, ...], Family]]:
    """All object tuples and families f_I with d f_I equal to ``required(objects, family, I)``."""

    size = _search_size(C, n)
    if size > cfg.enumeration_limit:
        raise EnumerationBoundError(f"dimension {n} of {C.name} needs {size} candidates, "
                                    f"above the limit of {cfg.enumeration_limit}")
    order = subsets(n)
    for objects in product(C.objects, repeat=n + 1):
        def extend(k: int, family: Family) -> Iterator[Family]:
            if k == len(order):
                yield dict(family)
                return
            I = order[k]
            X, Y = objects[I[0]], objects[I[-1]]
            target = required(objects, family, I)
            for v in _candidates(C, C.hom(X, Y), len(I) - 2):
                if differential(C, X, Y, v) == target:
                    family[I] = v
                    yield from extend(k + 1, family)
                    del family[I]

        for family in extend(0, {}):
            yield tuple(objects), family


def _simplex(objects: Sequence[str], family: Family) -> DGNerveSimplex:
    return DGNerveSimplex(tuple(objects), tuple(sorted(family.items(), key=lambda t: (len(t[0]), t[0]))))


def dg_nerve_simplices(C: DGCategory, n: int) -> List[DGNerveSimplex]:
    """All n-simplices of the dg nerve, in a deterministic order."""

    if n > cfg.nerve_bound:
        raise EnumerationBoundError(f"dg nerve dimension {n} is above the bound {cfg.nerve_bound}")
    out = [_simplex(objects, family)
           for objects, family in _families(C, n, lambda objects, family, I: nerve_boundary(C, objects, family, I))]
    logger.info("dg nerve of %s has %d simplices in dimension %d", C.name, len(out), n)
    return out


def structure_map(C: DGCategory, x: DGNerveSimplex, alpha: Sequence[int]) -> DGNerveSimplex:
    """The simplicial operator of a monotone alpha: [m] -> [dim x] on the dg nerve."""

    alpha = tuple(alpha)
    if any(a > b for a, b in zip(alpha, alpha[1:])) or any(a < 0 or a > x.dim for a in alpha):
        raise InvalidStructureError(f"{list(alpha)} is not monotone into [{x.dim}]")
    objects = tuple(x.objects[a] for a in alpha)
    family = {}
    for J in subsets(len(alpha) - 1):
        image = tuple(alpha[j] for j in J)
        source, target = objects[J[0]], objects[J[-1]]
        if len(set(image)) == len(image):
            family[J] = x.f(image)
        elif len(J) == 2:
            family[J] = C.identities[source]
        else:
            family[J] = C.hom(source, target).zero()
    return _simplex(objects, family)


def _codegeneracy_face(k: int, j: int) -> Tuple[int, ...]:
    """δ_j ∘ σ_j on [k], the operator x -> s_j d_j x."""

    return tuple(range(j)) + (j + 1, j + 1) + tuple(range(j + 2, k + 1))


def ez_form(C: DGCategory, x: DGNerveSimplex) -> Tuple[Tuple[int, ...], DGNerveSimplex]:
    """Degeneracy word and nondegenerate base of a nerve simplex."""

    word = tuple(j for j in range(x.dim) if structure_map(C, x, _codegeneracy_face(x.dim, j)) == x)
    keep = tuple(i for i in range(x.dim + 1) if i not in word)
    return word, structure_map(C, x, keep)


def nerve_simplicial_set(C: DGCategory, n: int) -> SimplicialSet:
    """The dg nerve through dimension n as a finitely presented simplicial set."""

    ids: Dict[DGNerveSimplex, str] = {}
    entries = []
    for k in range(n + 1):
        for x in dg_nerve_simplices(C, k):
            word, base = ez_form(C, x)
            if word:
                continue
            ids[x] = f"{k}:{len([e for e in entries if e[1] == k])}"
            faces = []
            for i in range(k + 1) if k else ():
                y = structure_map(C, x, tuple(v for v in range(k + 1) if v != i))
                face_word, face_base = ez_form(C, y)
                faces.append((face_word, ids[face_base]))
            entries.append((ids[x], k, faces))
    return simplicial_service.assemble(f"N_dg({C.name})≤{n}", entries)


def apply_functor(C: DGCategory, objects: Sequence[str], family: Family, word: CobarWord) -> Vector:
    """F on a word of Λ(Δⁿ): beads compose in path order, the empty word is an identity."""

    start = int(word.source)
    value = C.identities[objects[start]]
    current = start
    for bead in word.beads:
        I = tuple(int(v) for v in bead.split(","))
        if I[0] != current:
            raise InvalidStructureError(f"word {word} is not a path")
        value = compose(C, objects[start], objects[current], objects[I[-1]], family[I], value)
        current = I[-1]
    return value


def _functor_boundary(C: DGCategory, n: int, objects: Sequence[str], family: Family, I: Subset) -> Vector:
    S = simplicial_service.standard_simplex(n)
    word = rigidify_service.make_word(S, (simplicial_service.standard_simplex_id(I),))
    out = C.hom(objects[I[0]], objects[I[-1]]).zero()
    for w, c in rigidify_service.word_differential(S, word).items():
        out = add(C.prime, out, scale(C.prime, c, apply_functor(C, objects, family, w)))
    return out


def dg_functors(C: DGCategory, n: int) -> List[Tuple[Tuple[str, ...], Family]]:
    """dg functors Λ(Δⁿ) -> C given by objects and values on the one-bead words [σ_I]."""

    return list(_families(C, n, lambda objects, family, I: _functor_boundary(C, n, objects, family, I)))


def adjunction_check(C: DGCategory, n: int) -> List[VerificationRecord]:
    """Compares dg functors out of Λ(Δⁿ) with n-simplices of the dg nerve, and checks naturality."""

    functors = dg_functors(C, n)
    simplices = dg_nerve_simplices(C, n)
    images = [_simplex(objects, family) for objects, family in functors]

    bijection = VerificationRecord(f"dg functors ≅ dg nerve simplices in dimension {n}")
    bijection.check(len(set(images)) == len(images), "two functors have the same image")
    bijection.check(set(images) == set(simplices), lambda: f"{len(images)} functors against {len(simplices)} simplices")
    bijection.details = {"functors": len(functors), "simplices": len(simplices)}

    naturality = VerificationRecord(f"naturality in dimension {n}")
    operators = []
    if n >= 1:
        operators += [tuple(v for v in range(n + 1) if v != i) for i in range(n + 1)]
    operators += [tuple(range(j + 1)) + tuple(range(j, n + 1)) for j in range(n + 1)]
    for (objects, family), x in zip(functors, images):
        for alpha in operators:
            m = len(alpha) - 1
            pulled = {}
            for J in subsets(m):
                word = rigidify_service.make_word(simplicial_service.standard_simplex(m),
                                                  (simplicial_service.standard_simplex_id(J),))
                value = C.hom(objects[alpha[J[0]]], objects[alpha[J[-1]]]).zero()
                for w, c in rigidify_service.transport_word(n, m, alpha, word).items():
                    value = add(C.prime, value, scale(C.prime, c, apply_functor(C, objects, family, w)))
                pulled[J] = value
            lhs = _simplex(tuple(objects[a] for a in alpha), pulled)
            rhs = structure_map(C, x, alpha)
            naturality.check(lhs == rhs, lambda: f"{x} along {list(alpha)}")
    return [bijection, naturality]
