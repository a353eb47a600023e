import logging

from itertools import product
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from model import BoxMorphism, ChainComplex, CubeRef, CubicalSetFG, Ring, SimplexRef, SimplicialSet
from utils import add_term, sign
from utils.errors import InvalidStructureError

from . import linalg_service
from .simplicial_service import assemble

logger = logging.getLogger(__name__)

Vertex = Tuple[int, ...]


class Cell(NamedTuple):
    """K(map)(base) for a nondegenerate base cell"""

    map: BoxMorphism
    base: str

    @property
    def is_degenerate(self) -> bool:
        return not self.map.is_identity


def assemble_cubical(name: str, entries: Iterable[Tuple[str, int, Mapping[Tuple[int, int], Tuple[Sequence[str], str]]]],
                     basepoint: Optional[str] = None) -> CubicalSetFG:
    entries = list(entries)
    dims = {}
    cells: Dict[int, List[str]] = {}
    for c, n, _ in entries:
        if c in dims:
            raise InvalidStructureError(f"cell id '{c}' used twice in '{name}'")
        dims[c] = n
        cells.setdefault(n, []).append(c)
    faces = {}
    for c, n, face_specs in entries:
        expected = {(j, eps) for j in range(1, n + 1) for eps in (0, 1)}
        if set(face_specs) != expected:
            raise InvalidStructureError(f"cell '{c}' of dimension {n} must list faces (j, ε) for j in 1..{n}", name)
        table = {}
        for key, (word, base) in face_specs.items():
            if base not in dims:
                raise InvalidStructureError(f"face {key} of '{c}' references unknown cell '{base}'", name)
            ref = CubeRef(base, tuple(word), dims[base] + len(word))
            if ref.dim != n - 1:
                raise InvalidStructureError(f"face {key} of '{c}' has dimension {ref.dim}, expected {n - 1}", name)
            table[key] = ref
        faces[c] = table
    if basepoint is not None and dims.get(basepoint) != 0:
        raise InvalidStructureError(f"basepoint '{basepoint}' is not a vertex", name)
    top = max(cells, default=-1)
    return CubicalSetFG(name, {n: tuple(cells.get(n, ())) for n in range(top + 1)}, faces, basepoint)


def cell_of(ref: CubeRef) -> Cell:
    return Cell(ref.structural_map(), ref.base)


def apply_operator(K: CubicalSetFG, cell: Cell, theta: BoxMorphism) -> Cell:
    """K(theta) applied to a cell, normalized so that its base is nondegenerate."""

    nu, base = cell.map @ theta, cell.base
    while True:
        constant = nu.constant_coordinates()
        if not constant:
            return Cell(nu, base)
        k = max(constant)
        face = cell_of(K.faces[base][(k, constant[k])])
        nu, base = face.map @ nu.drop_coordinate(k), face.base


def face(K: CubicalSetFG, cell: Cell, j: int, epsilon: int) -> Cell:
    n = cell.map.source_dim
    return apply_operator(K, cell, BoxMorphism.coface(n - 1, j, epsilon))


def identity_violations(K: CubicalSetFG, max_dim: Optional[int] = None) -> List[str]:
    top = K.top_dim if max_dim is None else min(max_dim, K.top_dim)
    out = []
    for n in range(2, top + 1):
        for c in K.nondegenerate(n):
            for i, j in ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)):
                for eps, eta in product((0, 1), repeat=2):
                    # ∂^η_i ∂^ε_j = ∂^ε_{j-1} ∂^η_i for i < j
                    lhs = face(K, cell_of(K.faces[c][(j, eps)]), i, eta)
                    rhs = face(K, cell_of(K.faces[c][(i, eta)]), j - 1, eps)
                    if lhs != rhs:
                        out.append(f"faces ({i},{eta}) and ({j},{eps}) of '{c}' do not commute")
    return out


def validate(K: CubicalSetFG, max_dim: Optional[int] = None) -> None:
    violations = identity_violations(K, max_dim)
    if violations:
        raise InvalidStructureError(violations[0], K.name)


def cube_cell_id(pattern: str) -> str:
    return f"[{pattern}]"


def standard_cube(n: int) -> CubicalSetFG:
    """□ⁿ with cells indexed by words over {0, 1, *}"""

    if n < 0:
        raise InvalidStructureError(f"no standard cube of dimension {n}")
    entries = []
    for letters in product("01*", repeat=n):
        pattern = "".join(letters)
        stars = [p for p, a in enumerate(pattern) if a == "*"]
        faces = {}
        for j, p in enumerate(stars, start=1):
            for eps in (0, 1):
                faces[(j, eps)] = ((), cube_cell_id(pattern[:p] + str(eps) + pattern[p + 1:]))
        entries.append((cube_cell_id(pattern), len(stars), faces))
    entries.sort(key=lambda e: e[1])
    return assemble_cubical(f"□{n}", entries, cube_cell_id("0" * n))


def cubical_circle() -> CubicalSetFG:
    return assemble_cubical("cubical circle", [("v", 0, {}), ("e", 1, {(1, 0): ((), "v"), (1, 1): ((), "v")})], "v")


def cubical_sphere2() -> CubicalSetFG:
    faces = {(j, eps): (("e1",), "v") for j in (1, 2) for eps in (0, 1)}
    return assemble_cubical("cubical 2-sphere", [("v", 0, {}), ("s", 2, faces)], "v")


def _boundary(K: CubicalSetFG, c: str) -> Dict[str, int]:
    out: Dict[str, int] = {}
    n = K.dim_of(c)
    for j in range(1, n + 1):
        for eps, coeff in ((1, 1), (0, -1)):
            ref = K.faces[c][(j, eps)]
            if not ref.word:
                add_term(out, ref.base, sign(j) * coeff)
    return out


def chains_cubical(K: CubicalSetFG, N: int, ring: Ring = None) -> ChainComplex:
    """Normalized cubical chains through degree N: ∂ = Σ_j (-1)^j (∂¹_j - ∂⁰_j)."""

    ring = ring or Ring.integers()
    basis = {n: K.nondegenerate(n) for n in range(N + 1)}
    return linalg_service.build_complex(ring, basis, lambda c: _boundary(K, c), K.name)


def normalize(K: CubicalSetFG, cell: str, chain: Tuple[Vertex, ...]) -> Tuple[str, Tuple[Vertex, ...]]:
    """Pushes a chain of vertices of a cell into the smallest face containing it."""

    while True:
        n = K.dim_of(cell)
        constant = [(k, chain[0][k - 1]) for k in range(1, n + 1) if len({v[k - 1] for v in chain}) == 1]
        if not constant:
            return cell, chain
        k, eps = constant[-1]
        ref = K.faces[cell][(k, eps)]
        mu = ref.structural_map()
        chain = tuple(mu(v[:k - 1] + v[k:]) for v in chain)
        cell = ref.base


def _strict_chains(n: int) -> Iterator[Tuple[Vertex, ...]]:
    """Strictly increasing chains in {0,1}ⁿ from the bottom vertex to the top vertex."""

    top = (1,) * n

    def extend(chain):
        if chain[-1] == top:
            yield chain
            return
        last = chain[-1]
        free = [k for k in range(n) if last[k] == 0]
        for bits in product((0, 1), repeat=len(free)):
            if not any(bits):
                continue
            step = list(last)
            for k, b in zip(free, bits):
                step[k] = b
            yield from extend(chain + (tuple(step),))

    yield from extend(((0,) * n,))


def _simplex_id(cell: str, chain: Tuple[Vertex, ...]) -> str:
    return f"{cell}<" + ",".join("".join(map(str, v)) for v in chain) + ">"


def triangulate(K: CubicalSetFG) -> SimplicialSet:
    """The simplicial set obtained by gluing the posets {0,1}ⁿ along the cells of K."""

    entries = []
    for n in range(K.top_dim + 1):
        for c in K.nondegenerate(n):
            for chain in _strict_chains(n):
                m = len(chain) - 1
                faces = []
                for i in range(m + 1) if m else ():
                    base, rest = normalize(K, c, chain[:i] + chain[i + 1:])
                    distinct = sorted(set(rest))
                    ref = SimplexRef.from_surjection(_simplex_id(base, tuple(distinct)),
                                                     tuple(distinct.index(v) for v in rest))
                    faces.append((ref.word, ref.base))
                entries.append((_simplex_id(c, chain), m, faces))
    entries.sort(key=lambda e: e[1])
    basepoint = None
    if K.basepoint is not None:
        basepoint = _simplex_id(K.basepoint, ((),))
    S = assemble(f"|{K.name}|", entries, basepoint)
    logger.debug("triangulated %s into %s nondegenerate simplices", K.name, S.counts())
    return S
