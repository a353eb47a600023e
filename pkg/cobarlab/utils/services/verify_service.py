import logging
import random
import time

from typing import Callable, Dict, List, Optional

from humanize import precisedelta

from model import BoxMorphism, CobarWord, Necklace, NecklaceMorphism, SimplicialSet, VerificationRecord
from utils import add_sum, sign
from utils.config import cfg
from utils.enums import GeneratorType, Suite
from utils.errors import InputError

from . import (cobar_service, cubical_service, dgnerve_service, fixture_service, hochschild_service, linalg_service,
               necklace_service, rigidify_service, simplicial_service)

logger = logging.getLogger(__name__)

MORPHISM_TARGET = 120
PAIR_TARGET = 120
STRUCTURAL_INSTANCES = 200


def random_simplicial_set(rng: random.Random, max_dim: int = 3) -> SimplicialSet:
    """A subcomplex of Δⁿ generated by a few random simplices, n <= max_dim."""

    n = rng.randint(1, max_dim)
    simplex = simplicial_service.standard_simplex(n)
    ids = [x for k in range(1, n + 1) for x in simplex.nondegenerate(k)]
    chosen = rng.sample(ids, rng.randint(1, min(4, len(ids))))
    return simplicial_service.subcomplex(simplex, chosen, f"Δ{n}⊇{{{';'.join(sorted(chosen))}}}")


def one_vertex(S: SimplicialSet) -> SimplicialSet:
    """S with all of its vertices collapsed to one."""

    return simplicial_service.quotient(S, S.vertices, f"{S.name}/V")


def _boundary_squares_to_zero(S: SimplicialSet, record: VerificationRecord) -> None:
    complex = simplicial_service.chains(S, S.top_dim)
    for n in range(2, complex.top + 1):
        for x in complex.basis[n]:
            twice: Dict[str, int] = {}
            for y, c in complex.boundary_of(n, x).items():
                add_sum(twice, complex.boundary_of(n - 1, y), c)
            record.check(not twice, lambda: f"∂∂({x}) = {twice} in {S.name}")


def _random_word(rng: random.Random, letters: List[str], max_length: int = 2) -> tuple:
    return tuple(rng.choice(letters) for _ in range(rng.randint(1, max_length)))


def structural_suite(rng: random.Random, instances: int = STRUCTURAL_INSTANCES) -> List[VerificationRecord]:
    """Chain, coalgebra, cobar and loop-product identities on random small simplicial sets."""

    boundary = VerificationRecord("∂∂ = 0")
    coalgebra = [VerificationRecord("counit"), VerificationRecord("coassociativity"),
                 VerificationRecord("coproduct is a chain map")]
    d_squared = VerificationRecord("cobar D² = 0")
    derivation = VerificationRecord("cobar derivation law")
    word_squared = VerificationRecord("loop differential squares to zero")
    leibniz = VerificationRecord("loop product Leibniz rule")
    composition = VerificationRecord("composition associative and unital")

    for _ in range(instances):
        S = random_simplicial_set(rng)
        T = one_vertex(S)
        for X in (S, T):
            _boundary_squares_to_zero(X, boundary)
            for total, record in zip(coalgebra, simplicial_service.check_coalgebra(
                    simplicial_service.aw_coalgebra(X, X.top_dim))):
                total.merge(record)

        A = cobar_service.cobar(simplicial_service.aw_coalgebra(T, T.top_dim), max(T.top_dim - 1, 0))
        letters = sorted(A.generators)
        for g in letters:
            twice = cobar_service.apply_differential(A, cobar_service.differential_of(A, (g,)))
            d_squared.check(not twice, lambda: f"D²({g}) = {twice} in {T.name}")
        if letters:
            u, v = _random_word(rng, letters), _random_word(rng, letters)
            expected: Dict[tuple, int] = {}
            add_sum(expected, cobar_service.multiply(cobar_service.differential_of(A, u), {v: 1}))
            add_sum(expected, cobar_service.multiply({u: 1}, cobar_service.differential_of(A, v)), sign(A.degree(u)))
            actual = cobar_service.differential_of(A, u + v)
            derivation.check(actual == expected, lambda: f"D({u}{v}) in {T.name}")

        x = T.vertices[0]
        basis, _ = rigidify_service.enumerate_words(T, x, x, 2, 4)
        words = [w for ws in basis.values() for w in ws]
        unit = CobarWord((), x, x, 0, 0)
        concat = rigidify_service.multiply
        for w in words:
            twice = rigidify_service.chain_differential(T, rigidify_service.word_differential(T, w))
            word_squared.check(not twice, lambda: f"∂∂{w} = {twice} in {T.name}")
        for _ in range(min(3, len(words))):
            u, v, w = rng.choice(words), rng.choice(words), rng.choice(words)
            uv = concat(u, v)
            expected: Dict[CobarWord, int] = {}
            add_sum(expected, rigidify_service.multiply_chains(rigidify_service.word_differential(T, u), {v: 1}))
            add_sum(expected, rigidify_service.multiply_chains({u: 1}, rigidify_service.word_differential(T, v)),
                    sign(u.degree))
            leibniz.check(rigidify_service.word_differential(T, uv) == expected, lambda: f"∂({u}·{v}) in {T.name}")
            associative = concat(uv, w) == concat(u, concat(v, w))
            unital = concat(unit, u) == u == concat(u, unit)
            composition.check(associative and unital, lambda: f"({u}, {v}, {w}) in {T.name}")

    records = [boundary, *coalgebra, d_squared, derivation, word_squared, leibniz, composition]
    for record in records:
        record.details["instances"] = instances
    return records


def _all_necklaces(bound: int) -> List[Necklace]:
    return [T for v in range(1, bound + 1) for T in necklace_service.necklaces(v)]


def _box_kind_matches(kind: GeneratorType, box: BoxMorphism) -> bool:
    if kind == GeneratorType.INJECTIVE:
        return box.target_dim == box.source_dim + 1
    if kind == GeneratorType.CODEGENERACY:
        return box.target_dim == box.source_dim - 1
    return box.is_identity


def codegeneracy_pair(m: int, n: int) -> tuple:
    """Δ^{m+1}∨Δⁿ -> Δᵐ∨Δⁿ by the last codegeneracy, Δᵐ∨Δ^{n+1} -> Δᵐ∨Δⁿ by the first.

    Both merge vertices m and m+1 and have the same P₁ image.
    """

    T = Necklace((m, n))
    U, V = Necklace((m + 1, n)), Necklace((m, n + 1))
    merge = tuple(u if u <= m else u - 1 for u in range(m + n + 2))
    return NecklaceMorphism(U, T, merge), NecklaceMorphism(V, T, merge)


def necklace_suite(rng: random.Random, bound: Optional[int] = None) -> List[VerificationRecord]:
    bound = bound or cfg.necklace_bound
    pool = _all_necklaces(bound)
    roundtrip = VerificationRecord("factorization composes back to the morphism")
    direct = VerificationRecord("P₁ from generators agrees with P₁ from vertex subsets")
    classification = VerificationRecord("generators go to cofaces, codegeneracies or connections, and identities")
    functorial = VerificationRecord("P₁(g∘f) = P₁(g)∘P₁(f)")
    collision = VerificationRecord("distinct codegeneracies with equal P₁ images")

    corpus: List[NecklaceMorphism] = []
    for _ in range(10000):
        if len(corpus) >= MORPHISM_TARGET:
            break
        T, U = rng.choice(pool), rng.choice(pool)
        found = necklace_service.enumerate_morphisms(T, U, bound)
        corpus.extend(rng.sample(found, min(3, len(found))))
    for f in corpus:
        generators = necklace_service.factorize(f)
        roundtrip.check(necklace_service.compose_all(generators, f.source) == f, lambda: str(f))
        for g in generators:
            kind = necklace_service.classify(g)
            classification.check(kind is not None and _box_kind_matches(kind, necklace_service.p1_of_generator(g)),
                                 lambda: f"{g} of type {kind}")
        direct.check(necklace_service.p1_of_morphism(f) == necklace_service.p1_direct(f), lambda: str(f))

    pairs = 0
    for _ in range(10000):
        if pairs >= PAIR_TARGET:
            break
        f = rng.choice(corpus)
        W = rng.choice(pool)
        found = necklace_service.enumerate_morphisms(f.target, W, bound)
        if not found:
            continue
        g = rng.choice(found)
        pairs += 1
        lhs = necklace_service.p1_of_morphism(necklace_service.compose(g, f))
        rhs = necklace_service.p1_of_morphism(g) @ necklace_service.p1_of_morphism(f)
        functorial.check(lhs == rhs, lambda: f"{f} then {g}")

    for m, n in ((1, 1), (2, 1), (1, 2), (2, 3)):
        f, g = codegeneracy_pair(m, n)
        collision.check(f != g and necklace_service.classify(f) == necklace_service.classify(g)
                        == GeneratorType.CODEGENERACY and necklace_service.p1_of_generator(f)
                        == necklace_service.p1_of_generator(g), lambda: f"{f} and {g}")

    roundtrip.details = {"morphisms": len(corpus), "bound": bound}
    functorial.details = {"pairs": pairs}
    return [roundtrip, classification, direct, functorial, collision]


def cubical_suite(rng: random.Random) -> List[VerificationRecord]:
    agree = VerificationRecord("triangulation keeps homology")
    for name in ("cube0", "cube1", "cube2", "cube3", "circle-cubical"):
        K = fixture_service.fixture(name)
        top = max(K.top_dim, 0)
        cubical = linalg_service.homology(cubical_service.chains_cubical(K, top), top)
        simplicial = linalg_service.homology(simplicial_service.chains(cubical_service.triangulate(K), top), top)
        agree.check((cubical.betti, cubical.torsion) == (simplicial.betti, simplicial.torsion),
                    lambda: f"{name}: {cubical.to_dict()} against {simplicial.to_dict()}")
    top_simplices = VerificationRecord("the triangulated 3-cube has 6 top simplices")
    count = len(cubical_service.triangulate(cubical_service.standard_cube(3)).nondegenerate(3))
    top_simplices.check(count == 6, f"{count} top simplices")
    return [agree, top_simplices]


def adjunction_suite(rng: random.Random) -> List[VerificationRecord]:
    records = []
    for name in ("dgcat-one", "dgcat-two"):
        C = fixture_service.fixture(name)
        for n in range(min(3, cfg.nerve_bound) + 1):
            for record in dgnerve_service.adjunction_check(C, n):
                record.name = f"{name}: {record.name}"
                records.append(record)
    return records


# (fixture, N, L, compare homology)
ISO_FIXTURES = (
    ("sphere2", 6, None, True),
    ("sphere3", 6, None, True),
    ("bz2", 6, 8, True),
    ("bz3", 6, 6, False),
)

ISO_BOUNDS = {
    "bz3": "word length capped at 6: at 8 the two edges of Bℤ/3 give a loop basis too large to check in one run; "
           "the homology comparison is left out since the integral Smith normal form of the capped complexes "
           "dominates the run, and the checked chain isomorphism already gives equal homology",
}


def iso_suite(rng: random.Random, fixtures=ISO_FIXTURES) -> List[VerificationRecord]:
    records = []
    homology = VerificationRecord("loop homology equals cobar homology", details={"compared": [], "skipped": {}})
    for name, N, L, compare in fixtures:
        S = fixture_service.fixture(name)
        bound = ISO_BOUNDS.get(name)
        if bound is not None:
            logger.warning("iso suite on %s: %s", name, bound)
        for record in cobar_service.loop_cobar_iso(S, N, L):
            record.name = f"{name}: {record.name}"
            if bound is not None:
                record.details["cutoff_note"] = bound
            records.append(record)
        if not compare:
            homology.details["skipped"][name] = bound or "not compared"
            continue
        x = S.vertices[0]
        loops = rigidify_service.mapping_complex(S, x, x, N, L)
        A = cobar_service.cobar(simplicial_service.aw_coalgebra(S, N + 1), N, L)
        a = linalg_service.homology(loops.complex, N - 1)
        b = linalg_service.homology(cobar_service.dga_complex(A), N - 1)
        homology.check((a.betti, a.torsion) == (b.betti, b.torsion),
                       lambda: f"{name}: {a.to_dict()} against {b.to_dict()}")
        homology.details["compared"].append(name)
    return records + [homology]


def hochschild_suite(rng: random.Random, N: int = 5) -> List[VerificationRecord]:
    record = VerificationRecord("coHochschild and Hochschild ranks agree on the 2-sphere")
    S = fixture_service.fixture("sphere2")
    C = simplicial_service.aw_coalgebra(S, N + 1)
    co = hochschild_service.cohochschild(C, N)
    ch = hochschild_service.hochschild(cobar_service.cobar(C, N), N)
    for n in range(4):
        record.check(co.homology.betti[n] == ch.homology.betti[n],
                     lambda: f"degree {n}: {co.homology.betti[n]} against {ch.homology.betti[n]}")
    record.details = {"cohochschild": list(co.homology.betti[:4]), "hochschild": list(ch.homology.betti[:4])}
    return [record]


def rigidify_suite(rng: random.Random) -> List[VerificationRecord]:
    return [rigidify_service.cube_correspondence(n)[1] for n in (1, 2, 3)]


SUITES: Dict[Suite, Callable[[random.Random], List[VerificationRecord]]] = {
    Suite.NECKLACE: necklace_suite,
    Suite.CUBICAL: cubical_suite,
    Suite.ADJUNCTION: adjunction_suite,
    Suite.ISO: iso_suite,
    Suite.HOCHSCHILD: hochschild_suite,
    Suite.STRUCTURAL: structural_suite,
    Suite.RIGIDIFY: rigidify_suite,
}


def run(suite: Suite, seed: int = 0) -> List[VerificationRecord]:
    """Runs a suite, or every suite for Suite.ALL, each with its own generator seeded by ``seed``."""

    if not isinstance(suite, Suite):
        try:
            suite = Suite(suite)
        except ValueError:
            raise InputError(f"unknown suite '{suite}', expected one of {', '.join(s.value for s in Suite)}")
    records = []
    for s in Suite.expand(suite):
        started = time.perf_counter()
        found = SUITES[s](random.Random(seed))
        for record in found:
            record.details["suite"] = str(s)
        records.extend(found)
        logger.info("suite %s: %d checks in %s", s, sum(r.checked for r in found),
                    precisedelta(time.perf_counter() - started, minimum_unit="milliseconds"))
    return records
