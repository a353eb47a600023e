import logging

from itertools import product
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from sympy import Rational

from model import (AlgebraPresentation, ChainComplex, CobarWord, DGCoalgebra, HomologyReport, Matrix,
                   PresentedDGA, Ring, SimplicialSet, VerificationRecord, Word)
from utils import add_sum, add_term, clean, sign
from utils.errors import ConnectivityError, TruncationError

from . import linalg_service, rigidify_service
from .simplicial_service import aw_coalgebra, face, reduced_coproduct

logger = logging.getLogger(__name__)

Polynomial = Dict[Word, int]


def generator(label) -> str:
    return f"s{label}"


def cobar(C: DGCoalgebra, N: int, L: Optional[int] = None, name: Optional[str] = None) -> PresentedDGA:
    """The cobar construction on a connected dg coalgebra, truncated to degree N and weight L.

    D(sc) = -s∂c + Σ (-1)^{|c'|} sc'·sc'' over the reduced coproduct.
    """

    complex = C.complex
    if not C.connected:
        ConnectivityError.throw_one_vertex(complex.name, complex.rank(0))
    generators, weights, differential = {}, {}, {}
    for n in range(1, min(N + 1, complex.top) + 1):
        for c in complex.basis[n]:
            generators[generator(c)] = n - 1
            weights[generator(c)] = n
    for n in range(1, min(N + 1, complex.top) + 1):
        for c in complex.basis[n]:
            value: Polynomial = {}
            if n >= 2:
                for b, coeff in complex.boundary_of(n, c).items():
                    add_term(value, (generator(b),), -coeff)
            for (a, b), coeff in reduced_coproduct(C, c).items():
                add_term(value, (generator(a), generator(b)), sign(C.degree(a)) * coeff)
            differential[generator(c)] = {w: k for w, k in value.items() if all(g in generators for g in w)}
    A = PresentedDGA(name or f"Ω({complex.name})", complex.ring, generators, differential, weights, N, L)
    logger.info("cobar of %s has %d generators through degree %d", complex.name, len(generators), N)
    return A


def multiply(a: Polynomial, b: Polynomial, modulus: Optional[int] = None) -> Polynomial:
    out: Polynomial = {}
    for u, c in a.items():
        for v, d in b.items():
            add_term(out, u + v, c * d, modulus)
    return out


def differential_of(A: PresentedDGA, word: Word) -> Polynomial:
    """D extended to a word as a derivation with the Koszul sign."""

    out: Polynomial = {}
    prefix_degree = 0
    for i, g in enumerate(word):
        for middle, coeff in A.differential.get(g, {}).items():
            add_term(out, word[:i] + middle + word[i + 1:], sign(prefix_degree) * coeff)
        prefix_degree += A.generators[g]
    return out


def apply_differential(A: PresentedDGA, poly: Polynomial) -> Polynomial:
    out: Polynomial = {}
    for w, c in poly.items():
        add_sum(out, differential_of(A, w), c)
    return out


def basis(A: PresentedDGA, degree: Optional[int] = None) -> Dict[int, List[Word]]:
    """Words inside the truncation, grouped by degree and ordered by (length, word)."""

    if A.max_weight is None and A.has_degree_zero_generators:
        raise TruncationError(f"{A.name} has generators of degree 0, a weight cutoff L is required")
    letters = sorted(A.generators)
    out: Dict[int, List[Word]] = {n: [] for n in range(A.max_degree + 1)}

    def extend(word: Word, deg: int, weight: int) -> None:
        out[deg].append(word)
        for g in letters:
            d, w = deg + A.generators[g], weight + A.weights[g]
            if d <= A.max_degree and (A.max_weight is None or w <= A.max_weight):
                extend(word + (g,), d, w)

    extend((), 0, 0)
    for words in out.values():
        words.sort(key=lambda w: (len(w), w))
    if degree is not None:
        return {degree: out.get(degree, [])}
    return out


def dga_complex(A: PresentedDGA) -> ChainComplex:
    return linalg_service.build_complex(A.ring, basis(A), lambda w: differential_of(A, w), A.name)


def exact_degree(A: PresentedDGA, N: int, L: Optional[int], base_ratio: bool = False) -> int:
    """Highest degree whose homology is unaffected by the cutoffs.

    Every chain of degree e has weight at most r·e, where r bounds weight/degree over generators of
    positive degree, so a weight cap L keeps all chains of degree at most L / r.
    """

    if L is None:
        return N - 1
    bounds = [L * d // A.weights[g] for g, d in A.generators.items() if d > 0]
    if base_ratio:
        bounds.append(L)
    return min([N - 1] + [b - 1 for b in bounds])


def _phi_letter(S: SimplicialSet, sigma: str) -> Polynomial:
    n = S.dim_of(sigma)
    out = {(generator(sigma),): sign(n - 1)}
    if n == 1:
        out[()] = 1
    return out


def phi(S: SimplicialSet, word: CobarWord) -> Polynomial:
    """The algebra map from loop words to cobar words: [σ] goes to ±sσ, plus the unit for edges."""

    out: Polynomial = {(): 1}
    for sigma in word.beads:
        out = multiply(out, _phi_letter(S, sigma))
    return out


def psi(S: SimplicialSet, word: Word, point: str) -> Dict[CobarWord, int]:
    """Inverse of phi: sσ goes to ±[σ], minus the empty word for edges."""

    unit = CobarWord((), point, point, 0, 0)
    out = {unit: 1}
    for g in word:
        sigma = g[1:]
        n = S.dim_of(sigma)
        letter = {rigidify_service.make_word(S, (sigma,)): sign(n - 1)}
        if n == 1:
            letter[unit] = -1
        out = rigidify_service.multiply_chains(out, letter)
    return out


def loop_cobar_iso(S: SimplicialSet, N: int, L: Optional[int] = None,
                  ring: Ring = None) -> List[VerificationRecord]:
    """Checks that the loop complex of a one-vertex S and the cobar of its chains are isomorphic dgas.

    Returns records for inverse bijection, multiplicativity and the chain map property, all restricted
    to the truncation (N, L).
    """

    ring = ring or Ring.integers()
    if not S.is_one_vertex():
        ConnectivityError.throw_one_vertex(S.name, len(S.vertices))
    x = S.vertices[0]
    M = rigidify_service.mapping_complex(S, x, x, N, L, ring)
    A = cobar(aw_coalgebra(S, N + 1, ring), N, L)
    cobar_complex = dga_complex(A)
    mod = ring.modulus

    inverse = VerificationRecord("φ and ψ are inverse")
    algebra = VerificationRecord("φ is multiplicative")
    chain_map = VerificationRecord("φ and ψ commute with differentials")

    inverse.check(M.complex.ranks() == cobar_complex.ranks(),
                  lambda: f"basis sizes {M.complex.ranks()} against {cobar_complex.ranks()}")
    loop_words = [w for n in range(N + 1) for w in M.words(n)]
    for w in loop_words:
        image = phi(S, w)
        back: Dict[CobarWord, int] = {}
        for v, c in image.items():
            add_sum(back, psi(S, v, x), c)
        inverse.check(clean(back.items(), mod) == {w: 1}, lambda: f"ψφ{w} = {back}")
        lhs = phi_of_chain(S, M.complex.boundary_of(w.degree, w) if w.degree else {})
        rhs = apply_differential(A, image)
        chain_map.check(clean(lhs.items(), mod) == clean(rhs.items(), mod), lambda: f"φ∂{w} = {lhs}, Dφ{w} = {rhs}")
    for n in range(N + 1):
        for word in cobar_complex.basis.get(n, ()):
            image = psi(S, word, x)
            again = {}
            for v, c in image.items():
                add_sum(again, phi(S, v), c)
            inverse.check(clean(again.items(), mod) == {word: 1}, lambda: f"φψ{word} = {again}")
            lhs = {}
            for v, c in image.items():
                if v.degree:
                    add_sum(lhs, M.complex.boundary_of(v.degree, v), c)
            rhs = {}
            for v, c in apply_differential(A, {word: 1}).items():
                add_sum(rhs, psi(S, v, x), c)
            chain_map.check(clean(lhs.items(), mod) == clean(rhs.items(), mod), lambda: f"∂ψ{word} != ψD{word}")
    for u, v in M.product_table():
        lhs = phi(S, rigidify_service.multiply(u, v))
        rhs = multiply(phi(S, u), phi(S, v))
        algebra.check(lhs == rhs, lambda: f"φ({u}·{v})")
    for record in (inverse, algebra, chain_map):
        record.details = {"basis_sizes": M.complex.ranks(), "max_degree": N, "max_length": L}
    return [inverse, algebra, chain_map]


def phi_of_chain(S: SimplicialSet, chain: Dict[CobarWord, int]) -> Polynomial:
    out: Polynomial = {}
    for w, c in chain.items():
        add_sum(out, phi(S, w), c)
    return out


class AlgebraHomology(NamedTuple):
    report: HomologyReport
    representatives: Dict[int, List[List[Rational]]]
    products: Dict[Tuple[int, int, int, int], List[Rational]]


def homology_algebra(A: PresentedDGA, N: int) -> AlgebraHomology:
    """Homology of a truncated cobar dga through degree N; A should be truncated at degree N+1 or above."""

    return complex_homology_algebra(dga_complex(A), N)


def complex_homology_algebra(complex: ChainComplex, N: int,
                             multiply_labels=lambda u, v: u + v) -> AlgebraHomology:
    """Homology through degree N of a dga given as a complex, with products of chosen classes.

    ``multiply_labels`` concatenates two basis labels.

    ``products[(p, i, q, j)]`` holds the coordinates of (class i of degree p)·(class j of degree q).
    """

    if complex.top < N + 1:
        logger.warning("%s is built through degree %d only, homology in degree %d may not be final",
                       complex.name, complex.top, N)
    report = linalg_service.homology(complex, N, truncated=complex.top < N + 1)
    reps = {n: linalg_service.cycle_representatives(complex, n) for n in range(min(N, complex.top) + 1)}
    products = {}
    for p, q in product(reps, repeat=2):
        if p + q > N:
            continue
        for (i, a), (j, b) in product(enumerate(reps[p]), enumerate(reps[q])):
            vector = [Rational(0)] * complex.rank(p + q)
            inside = True
            for s, ca in zip(complex.basis[p], a):
                for t, cb in zip(complex.basis[q], b):
                    if ca == 0 or cb == 0:
                        continue
                    label = multiply_labels(s, t)
                    try:
                        vector[complex.index(p + q, label)] += ca * cb
                    except KeyError:
                        inside = False
            if inside:
                products[(p, i, q, j)] = linalg_service.class_coordinates(complex, p + q, reps[p + q], vector)
    return AlgebraHomology(report, reps, products)


def _word_of_edge(S: SimplicialSet, ref) -> Word:
    return () if ref.is_degenerate else (ref.base,)


def h0_presentation(S: SimplicialSet, ring: Ring = None) -> AlgebraPresentation:
    """Generators are the edges of S; each 2-simplex σ relates [d₂σ|d₀σ] to [d₁σ].

    Relations keep their integer coefficients ±1 whatever the ring; ``ring`` only says where they are read.
    """

    ring = ring or Ring.integers()
    if not S.is_one_vertex():
        ConnectivityError.throw_one_vertex(S.name, len(S.vertices))
    relations = []
    for sigma in S.nondegenerate(2):
        ref = S.ref(sigma)
        terms: Polynomial = {}
        add_term(terms, _word_of_edge(S, face(S, ref, 2)) + _word_of_edge(S, face(S, ref, 0)), 1)
        add_term(terms, _word_of_edge(S, face(S, ref, 1)), -1)
        if terms:
            relations.append(tuple(sorted(terms.items(), key=lambda t: (-t[1], len(t[0]), t[0]))))
    return AlgebraPresentation(f"H0(Λ({S.name}))", ring, S.nondegenerate(1), tuple(relations))


class ProbeResult(NamedTuple):
    length: int
    dimension: int
    stable: bool

    def to_dict(self) -> Dict[str, object]:
        return {"length": self.length, "dimension": self.dimension, "stable": self.stable}


def _words_up_to(letters: Sequence[str], length: int) -> List[Word]:
    return [w for k in range(length + 1) for w in product(letters, repeat=k)]


def _is_binomial(relation, ring: Ring) -> bool:
    """c·m₁ − c·m₂ with c a unit of the ring, so that it just identifies m₁ with m₂."""

    if len(relation) != 2:
        return False
    (_, a), (_, b) = relation
    if ring.modulus is not None:
        return (a + b) % ring.modulus == 0 and a % ring.modulus != 0
    return a + b == 0 and (abs(a) == 1 or (ring.is_field and a != 0))


def _quotient_dimension(P: AlgebraPresentation, length: int) -> int:
    words = _words_up_to(P.generators, length)
    if all(_is_binomial(r, P.ring) for r in P.relations):
        parent = {w: w for w in words}

        def find(w):
            while parent[w] != w:
                parent[w] = parent[parent[w]]
                w = parent[w]
            return w

        for relation in P.relations:
            (m1, _), (m2, _) = relation
            room = length - max(len(m1), len(m2))
            for k in range(room + 1):
                for u in product(P.generators, repeat=k):
                    for v in _words_up_to(P.generators, room - k):
                        parent[find(u + m1 + v)] = find(u + m2 + v)
        return len({find(w) for w in words})
    index = {w: i for i, w in enumerate(words)}
    rows = []
    for relation in P.relations:
        room = length - max(len(m) for m, _ in relation)
        for u in _words_up_to(P.generators, room):
            for v in _words_up_to(P.generators, room - len(u)):
                row = [0] * len(words)
                for m, c in relation:
                    row[index[u + m + v]] += c
                rows.append(row)
    if not rows:
        return len(words)
    field = P.ring if P.ring.is_field else Ring.rationals()
    return len(words) - Matrix.from_rows(rows, len(words)).rank(field)


def dimension_probe(P: AlgebraPresentation, length: int) -> ProbeResult:
    """Dimension of the presented algebra seen through words of length at most ``length``.

    ``stable`` records agreement with the probe one length shorter.
    """

    dimension = _quotient_dimension(P, length)
    stable = length >= 1 and _quotient_dimension(P, length - 1) == dimension
    logger.info("dimension probe of %s at length %d: %d (stable=%s)", P.name, length, dimension, stable)
    return ProbeResult(length, dimension, stable)
