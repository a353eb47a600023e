import logging

from typing import Dict, List, Optional, Sequence, Tuple

from model import CobarWord, MappingComplex, Ring, SimplexRef, SimplicialSet, VerificationRecord
from utils import add_sum, add_term, sign
from utils.errors import InvalidStructureError, TruncationError

from . import cubical_service, linalg_service
from .simplicial_service import back, face, first_vertex, front, last_vertex, standard_simplex, standard_simplex_ref

logger = logging.getLogger(__name__)

Chain = Dict[CobarWord, int]


def make_word(S: SimplicialSet, beads: Sequence[str], source: Optional[str] = None,
              target: Optional[str] = None) -> CobarWord:
    """A CobarWord from nondegenerate simplices of positive dimension; endpoints are needed only for the empty word."""

    beads = tuple(beads)
    for a, b in zip(beads, beads[1:]):
        if last_vertex(S, a) != first_vertex(S, b):
            raise InvalidStructureError(f"beads '{a}' and '{b}' do not share a vertex", S.name)
    if beads:
        source, target = first_vertex(S, beads[0]), last_vertex(S, beads[-1])
    dims = [S.dim_of(b) for b in beads]
    if any(d < 1 for d in dims):
        raise InvalidStructureError("a word cannot contain a vertex", S.name)
    return CobarWord(beads, source, target, sum(d - 1 for d in dims), sum(dims))


def normalize_beads(refs: Sequence[SimplexRef]) -> Optional[Tuple[str, ...]]:
    """Deletes degenerate edges; None when a degenerate bead of higher dimension kills the word."""

    out = []
    for ref in refs:
        if not ref.is_degenerate:
            out.append(ref.base)
        elif ref.dim > 1:
            return None
    return tuple(out)


def word_differential(S: SimplicialSet, word: CobarWord) -> Chain:
    """Σ over beads σ of dimension m and inner positions j of ±([..d_jσ..] - [..f^jσ|l^{m-j}σ..])."""

    out: Chain = {}
    offset = 0
    for i, sigma in enumerate(word.beads):
        ref = S.ref(sigma)
        m = ref.dim
        head, tail = [S.ref(b) for b in word.beads[:i]], [S.ref(b) for b in word.beads[i + 1:]]
        for j in range(1, m):
            coeff = sign(offset + j)
            for replacement, c in (([face(S, ref, j)], coeff),
                                   ([front(S, ref, j), back(S, ref, m - j)], -coeff)):
                beads = normalize_beads(head + replacement + tail)
                if beads is not None:
                    add_term(out, make_word(S, beads, word.source, word.target), c)
        offset += m - 1
    return out


def has_edge_cycle(S: SimplicialSet) -> bool:
    """Whether the nondegenerate edges, oriented from first to last vertex, contain a directed cycle."""

    graph: Dict[str, List[str]] = {}
    for e in S.nondegenerate(1):
        graph.setdefault(first_vertex(S, e), []).append(last_vertex(S, e))
    state: Dict[str, int] = {}

    def visit(v: str) -> bool:
        state[v] = 1
        for w in graph.get(v, ()):
            if state.get(w) == 1 or (w not in state and visit(w)):
                return True
        state[v] = 2
        return False

    return any(v not in state and visit(v) for v in S.vertices)


def enumerate_words(S: SimplicialSet, x: str, y: str, N: int,
                    L: Optional[int] = None) -> Tuple[Dict[int, List[CobarWord]], bool]:
    """Words from x to y of degree at most N and weight at most L, and whether a cutoff removed any word."""

    starting: Dict[str, List[Tuple[str, int]]] = {}
    for n in range(1, min(S.top_dim, N + 1) + 1):
        for sigma in S.nondegenerate(n):
            starting.setdefault(first_vertex(S, sigma), []).append((sigma, n))
    ends = {sigma: last_vertex(S, sigma) for entries in starting.values() for sigma, _ in entries}
    cut = S.top_dim > N + 1
    basis: Dict[int, List[CobarWord]] = {n: [] for n in range(N + 1)}

    def extend(vertex: str, beads: Tuple[str, ...], degree: int, weight: int) -> None:
        nonlocal cut
        if vertex == y:
            basis[degree].append(CobarWord(beads, x, y, degree, weight))
        for sigma, n in starting.get(vertex, ()):
            if degree + n - 1 > N or (L is not None and weight + n > L):
                cut = True
                continue
            extend(ends[sigma], beads + (sigma,), degree + n - 1, weight + n)

    extend(x, (), 0, 0)
    for n in basis:
        basis[n].sort(key=lambda w: w.sort_key)
    return basis, cut


def mapping_complex(S: SimplicialSet, x: str, y: str, N: int, L: Optional[int] = None,
                    ring: Ring = None) -> MappingComplex:
    """Normalized chains on the space of paths from x to y, truncated to degree N and weight L.

    Parameters
    ----------
    S : SimplicialSet
        Any valid simplicial set
    x, y : str
        Vertices of S
    N : int
        Degree cutoff
    L : int, optional
        Cap on the total dimension of the beads of a word; mandatory when the edges of S contain a cycle

    Returns
    -------
    MappingComplex
        Basis words ordered by length then simplex identifiers
    """

    ring = ring or Ring.integers()
    for v in (x, y):
        if v not in S or S.dim_of(v) != 0:
            raise InvalidStructureError(f"'{v}' is not a vertex", S.name)
    if N < 0 or (L is not None and L < 0):
        raise TruncationError(f"cutoffs must be non-negative, got N={N}, L={L}")
    if L is None and has_edge_cycle(S):
        raise TruncationError(f"'{S.name}' has a cycle of edges, a length cutoff L is required")
    basis, cut = enumerate_words(S, x, y, N, L)
    complex = linalg_service.build_complex(ring, basis, lambda w: word_differential(S, w),
                                           f"Λ({S.name})({x},{y})")
    logger.info("mapping complex %s -> %s of %s: %s", x, y, S.name, complex.ranks())
    return MappingComplex(complex.name, x, y, N, L, complex, cut)


def exact_degree(S: SimplicialSet, N: int, L: Optional[int] = None) -> int:
    """Highest degree whose homology the cutoffs leave untouched; a bead of dimension n has weight n, degree n-1."""

    if L is None:
        return N - 1
    bounds = [L * (n - 1) // n - 1 for n in range(2, S.top_dim + 1) if S.nondegenerate(n)]
    return min([N - 1] + bounds)


def compose(u: CobarWord, v: CobarWord) -> CobarWord:
    """u ∘ v for v: x -> y and u: y -> z, the word of v followed by the word of u."""

    return v.then(u)


def multiply(u: CobarWord, v: CobarWord) -> CobarWord:
    """Loop product, u traversed first."""

    return u.then(v)


def multiply_chains(a: Chain, b: Chain) -> Chain:
    out: Chain = {}
    for u, c in a.items():
        for v, d in b.items():
            add_term(out, multiply(u, v), c * d)
    return out


def chain_differential(S: SimplicialSet, chain: Chain) -> Chain:
    out: Chain = {}
    for w, c in chain.items():
        add_sum(out, word_differential(S, w), c)
    return out


def transport_word(n: int, m: int, alpha: Sequence[int], word: CobarWord) -> Chain:
    """The image of a word of Λ(Δᵐ) under the map induced by a monotone alpha: [m] -> [n]."""

    alpha = tuple(alpha)
    if len(alpha) != m + 1 or any(a > b for a, b in zip(alpha, alpha[1:])) or alpha[-1] > n or alpha[0] < 0:
        raise InvalidStructureError(f"{list(alpha)} is not a monotone map [{m}] -> [{n}]")
    target = standard_simplex(n)
    refs = []
    for bead in word.beads:
        vertex_list = [alpha[int(v)] for v in bead.split(",")]
        refs.append(standard_simplex_ref(target, vertex_list))
    beads = normalize_beads(refs)
    if beads is None:
        return {}
    return {make_word(target, beads, str(alpha[int(word.source)]), str(alpha[int(word.target)])): 1}


def cube_pattern(n: int, word: CobarWord) -> str:
    """The cell of the (n-1)-cube matching a word of Λ(Δⁿ)(0, n)."""

    letters = ["0"] * (n - 1)
    for bead in word.beads:
        vertex_list = [int(v) for v in bead.split(",")]
        for v in vertex_list[1:-1]:
            letters[v - 1] = "*"
        for v in (vertex_list[0], vertex_list[-1]):
            if 0 < v < n:
                letters[v - 1] = "1"
    return cubical_service.cube_cell_id("".join(letters))


def cube_correspondence(n: int, ring: Ring = None) -> Tuple[Dict[CobarWord, Tuple[str, int]], VerificationRecord]:
    """Matches Λ(Δⁿ)(0, n) with the cubical chains of the (n-1)-cube.

    A word w goes to (-1)^{deg w} times its cell; the record checks that this is a bijection of bases
    commuting with the differentials.
    """

    if n < 1:
        raise InvalidStructureError(f"no path complex between distinct vertices of Δ{n}")
    S = standard_simplex(n)
    paths = mapping_complex(S, "0", str(n), n - 1, ring=ring)
    cube = cubical_service.chains_cubical(cubical_service.standard_cube(n - 1), n - 1, ring)
    record = VerificationRecord(f"Λ(Δ{n})(0,{n}) ≅ cube chains")
    mapping = {}
    for d in range(n):
        words = paths.words(d)
        cells = {cube_pattern(n, w) for w in words}
        record.check(cells == set(cube.basis.get(d, ())) and len(cells) == len(words),
                     lambda: f"degree {d}: {sorted(cells)} against {list(cube.basis.get(d, ()))}")
        for w in words:
            mapping[w] = (cube_pattern(n, w), sign(d))
    for w, (cell, s) in mapping.items():
        if w.degree == 0:
            continue
        lhs: Dict[str, int] = {}
        for c, coeff in cube.boundary_of(w.degree, cell).items():
            add_term(lhs, c, s * coeff)
        rhs: Dict[str, int] = {}
        for v, coeff in paths.complex.boundary_of(w.degree, w).items():
            cell_v, s_v = mapping[v]
            add_term(rhs, cell_v, s_v * coeff)
        record.check(lhs == rhs, lambda: f"{w}: {lhs} != {rhs}")
    return mapping, record
