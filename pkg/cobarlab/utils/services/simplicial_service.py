import logging

from functools import lru_cache
from itertools import combinations, product
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from model import ChainComplex, DGCoalgebra, Ring, SimplexRef, SimplicialSet, VerificationRecord
from utils import add_sum, add_term, sign
from utils.errors import InvalidStructureError

from . import linalg_service

logger = logging.getLogger(__name__)

FaceSpec = Tuple[Tuple[int, ...], str]


def assemble(name: str, entries: Iterable[Tuple[str, int, Sequence[FaceSpec]]],
             basepoint: Optional[str] = None) -> SimplicialSet:
    """Builds a SimplicialSet from (id, dim, [(word, base), ...]) entries listing faces d_0..d_n."""

    entries = list(entries)
    dims = {}
    simplices: Dict[int, List[str]] = {}
    for x, n, _ in entries:
        if x in dims:
            raise InvalidStructureError(f"simplex id '{x}' used twice in '{name}'")
        dims[x] = n
        simplices.setdefault(n, []).append(x)
    faces = {}
    for x, n, face_specs in entries:
        refs = []
        for i, (word, base) in enumerate(face_specs):
            if base not in dims:
                raise InvalidStructureError(f"face d{i} of '{x}' references unknown simplex '{base}'", name)
            ref = SimplexRef(base, tuple(word), dims[base] + len(word))
            if ref.dim != n - 1:
                raise InvalidStructureError(f"face d{i} of '{x}' has dimension {ref.dim}, expected {n - 1}", name)
            refs.append(ref)
        if len(refs) != (n + 1 if n else 0):
            raise InvalidStructureError(f"'{x}' of dimension {n} has {len(refs)} faces", name)
        faces[x] = tuple(refs)
    top = max(simplices, default=-1)
    return SimplicialSet(name, {n: tuple(simplices.get(n, ())) for n in range(top + 1)}, faces, basepoint)


def apply_operator(S: SimplicialSet, ref: SimplexRef, alpha: Tuple[int, ...]) -> SimplexRef:
    """The simplicial operator of a monotone map alpha: [m] -> [dim ref], in Eilenberg-Zilber form.

    Results are memoized on S itself, so they go away with it.
    """

    known = S.operators.get((ref, alpha))
    if known is not None:
        return known
    if any(a < 0 or a > ref.dim for a in alpha) or any(a > b for a, b in zip(alpha, alpha[1:])):
        raise InvalidStructureError(f"{list(alpha)} is not a monotone map into [{ref.dim}]")
    eta = ref.surjection()
    composite = tuple(eta[a] for a in alpha)
    image = sorted(set(composite))
    sigma = tuple(image.index(c) for c in composite)
    inner = _restrict(S, ref.base, tuple(image))
    eta_inner = inner.surjection()
    result = SimplexRef.from_surjection(inner.base, tuple(eta_inner[s] for s in sigma))
    S.operators[(ref, alpha)] = result
    return result


def _restrict(S: SimplicialSet, base: str, injection: Tuple[int, ...]) -> SimplexRef:
    k = S.dim_of(base)
    if injection == tuple(range(k + 1)):
        return S.ref(base)
    missing = next(i for i in range(k + 1) if i not in injection)
    reduced = tuple(v if v < missing else v - 1 for v in injection)
    return apply_operator(S, S.faces[base][missing], reduced)


def face(S: SimplicialSet, ref: SimplexRef, i: int) -> SimplexRef:
    return apply_operator(S, ref, tuple(v for v in range(ref.dim + 1) if v != i))


def degeneracy(S: SimplicialSet, ref: SimplexRef, j: int) -> SimplexRef:
    return apply_operator(S, ref, tuple(v if v <= j else v - 1 for v in range(ref.dim + 2)))


def front(S: SimplicialSet, ref: SimplexRef, p: int) -> SimplexRef:
    return apply_operator(S, ref, tuple(range(p + 1)))


def back(S: SimplicialSet, ref: SimplexRef, q: int) -> SimplexRef:
    return apply_operator(S, ref, tuple(range(ref.dim - q, ref.dim + 1)))


def vertices(S: SimplicialSet, ref: SimplexRef) -> Tuple[str, ...]:
    return tuple(apply_operator(S, ref, (v,)).base for v in range(ref.dim + 1))


def first_vertex(S: SimplicialSet, x: str) -> str:
    return apply_operator(S, S.ref(x), (0,)).base


def last_vertex(S: SimplicialSet, x: str) -> str:
    ref = S.ref(x)
    return apply_operator(S, ref, (ref.dim,)).base


def identity_violations(S: SimplicialSet, max_dim: Optional[int] = None) -> List[str]:
    top = S.top_dim if max_dim is None else min(max_dim, S.top_dim)
    out = []
    for n in range(2, top + 1):
        for x in S.nondegenerate(n):
            for i, j in combinations(range(n + 1), 2):
                lhs = face(S, S.faces[x][j], i)
                rhs = face(S, S.faces[x][i], j - 1)
                if lhs != rhs:
                    out.append(f"d{i}d{j}({x}) = {lhs} but d{j - 1}d{i}({x}) = {rhs}")
    return out


def validate(S: SimplicialSet, max_dim: Optional[int] = None) -> None:
    """Raises InvalidStructureError on the first broken simplicial identity up to ``max_dim``."""

    for x, refs in S.faces.items():
        n = S.dim_of(x)
        for i, ref in enumerate(refs):
            if ref.base not in S or S.dim_of(ref.base) != ref.base_dim or ref.dim != n - 1:
                raise InvalidStructureError(f"face d{i} of '{x}' is inconsistent", S.name)
    violations = identity_violations(S, max_dim)
    if violations:
        raise InvalidStructureError(violations[0], S.name)


def standard_simplex_id(vertex_list: Sequence[int]) -> str:
    return ",".join(map(str, vertex_list))


@lru_cache(maxsize=None)
def standard_simplex(n: int) -> SimplicialSet:
    if n < 0:
        raise InvalidStructureError(f"no standard simplex of dimension {n}")
    entries = []
    for k in range(n + 1):
        for subset in combinations(range(n + 1), k + 1):
            faces = [((), standard_simplex_id(subset[:i] + subset[i + 1:])) for i in range(k + 1)] if k else []
            entries.append((standard_simplex_id(subset), k, faces))
    return assemble(f"Δ{n}", entries, "0")


def standard_simplex_ref(S: SimplicialSet, vertex_list: Sequence[int]) -> SimplexRef:
    """The (possibly degenerate) simplex of a standard simplex spanned by a monotone vertex list."""

    distinct = sorted(set(vertex_list))
    surjection = tuple(distinct.index(v) for v in vertex_list)
    return SimplexRef.from_surjection(standard_simplex_id(distinct), surjection)


def face_closure(S: SimplicialSet, ids: Iterable[str]) -> set:
    todo, seen = list(ids), set()
    while todo:
        x = todo.pop()
        if x in seen:
            continue
        S.dim_of(x)
        seen.add(x)
        todo.extend(ref.base for ref in S.faces.get(x, ()))
    return seen


def subcomplex(S: SimplicialSet, ids: Iterable[str], name: Optional[str] = None) -> SimplicialSet:
    keep = face_closure(S, ids)
    entries = [(x, S.dim_of(x), [(r.word, r.base) for r in S.faces[x]]) for x in S.all_ids() if x in keep]
    basepoint = S.basepoint if S.basepoint in keep else None
    return assemble(name or f"{S.name}|sub", entries, basepoint)


def _fresh(S: SimplicialSet, wanted: str) -> str:
    while wanted in S:
        wanted += "'"
    return wanted


def quotient(S: SimplicialSet, A: Iterable[str], name: Optional[str] = None, point: str = "*") -> SimplicialSet:
    """Collapses the face-closed subcomplex A to a single vertex."""

    A = set(A)
    for x in A:
        S.dim_of(x)
        for ref in S.faces[x]:
            if ref.base not in A:
                raise InvalidStructureError(f"subcomplex is not face-closed: '{ref.base}' is a face of '{x}'", S.name)
    name = name or f"{S.name}/A"
    if len(A) == 1 and S.dim_of(next(iter(A))) == 0:
        v = next(iter(A))
        return SimplicialSet(name, S.simplices, S.faces, v)
    star = _fresh(S, point)
    entries = [(star, 0, [])]
    for x in S.all_ids():
        if x in A:
            continue
        n = S.dim_of(x)
        faces = []
        for ref in S.faces[x]:
            faces.append((tuple(range(n - 1)), star) if ref.base in A else (ref.word, ref.base))
        entries.append((x, n, faces))
    return assemble(name, entries, star)


def boundary_subcomplex(S: SimplicialSet) -> set:
    """All simplices of S except those of top dimension."""

    return {x for n in range(S.top_dim) for x in S.nondegenerate(n)}


def wedge(S: SimplicialSet, T: SimplicialSet, name: Optional[str] = None) -> SimplicialSet:
    """One-point union identifying the base vertices."""

    s0, t0 = S.base_vertex, T.base_vertex
    rename = {}
    taken = set(S.all_ids())
    for x in T.all_ids():
        if x == t0:
            rename[x] = s0
            continue
        new = x
        while new in taken:
            new += "'"
        taken.add(new)
        rename[x] = new
    entries = [(x, S.dim_of(x), [(r.word, r.base) for r in S.faces[x]]) for x in S.all_ids()]
    for x in T.all_ids():
        if x == t0:
            continue
        entries.append((rename[x], T.dim_of(x), [(r.word, rename[r.base]) for r in T.faces[x]]))
    return assemble(name or f"{S.name}∨{T.name}", entries, s0)


def nerve_id(elements: Sequence[str]) -> str:
    return elements[0] if len(elements) == 1 else "(" + ",".join(elements) + ")"


def nerve_monoid(elements: Sequence[str], table: Mapping[Tuple[str, str], str], D: int,
                 name: Optional[str] = None, point: str = "*") -> SimplicialSet:
    """Nerve of a finite monoid truncated above dimension D.

    Nondegenerate n-simplices are n-tuples of non-identity elements.
    """

    elements = list(elements)
    if D < 0:
        raise InvalidStructureError(f"negative truncation dimension {D}")
    for a, b in product(elements, repeat=2):
        if table.get((a, b)) not in elements:
            raise InvalidStructureError(f"multiplication table has no valid entry for {a}·{b}")
    units = [e for e in elements if all(table[(e, a)] == a and table[(a, e)] == a for a in elements)]
    if not units:
        raise InvalidStructureError("multiplication table has no identity element")
    for a, b, c in product(elements, repeat=3):
        if table[(table[(a, b)], c)] != table[(a, table[(b, c)])]:
            raise InvalidStructureError(f"multiplication is not associative on ({a}, {b}, {c})")
    e = units[0]
    letters = [a for a in elements if a != e]

    def canonical(t: Tuple[str, ...]) -> FaceSpec:
        word = tuple(i for i, a in enumerate(t) if a == e)
        rest = tuple(a for a in t if a != e)
        return word, nerve_id(rest) if rest else point

    entries = [(point, 0, [])]
    for n in range(1, D + 1):
        for t in product(letters, repeat=n):
            faces = [canonical(t[1:])]
            for i in range(1, n):
                faces.append(canonical(t[:i - 1] + (table[(t[i - 1], t[i])],) + t[i + 1:]))
            faces.append(canonical(t[:-1]))
            entries.append((nerve_id(t), n, faces))
    return assemble(name or f"N(M)≤{D}", entries, point)


def _boundary(S: SimplicialSet, x: str) -> Dict[str, int]:
    out: Dict[str, int] = {}
    ref = S.ref(x)
    for i in range(ref.dim + 1) if ref.dim else ():
        f = face(S, ref, i)
        if not f.is_degenerate:
            add_term(out, f.base, sign(i))
    return out


def chains(S: SimplicialSet, N: int, ring: Ring = None) -> ChainComplex:
    """Normalized chains through degree N."""

    ring = ring or Ring.integers()
    basis = {n: S.nondegenerate(n) for n in range(N + 1)}
    return linalg_service.build_complex(ring, basis, lambda x: _boundary(S, x), S.name)


def aw_coalgebra(S: SimplicialSet, N: int, ring: Ring = None) -> DGCoalgebra:
    """Normalized chains with the Alexander-Whitney coproduct, through degree N."""

    complex = chains(S, N, ring)
    coproduct = {}
    for n in range(N + 1):
        for x in S.nondegenerate(n):
            ref = S.ref(x)
            terms: Dict[Tuple[str, str], int] = {}
            for p in range(n + 1):
                a, b = front(S, ref, p), back(S, ref, n - p)
                if not a.is_degenerate and not b.is_degenerate:
                    add_term(terms, (a.base, b.base), 1)
            coproduct[x] = terms
    counit = {v: 1 for v in complex.basis.get(0, ())}
    return DGCoalgebra(complex, coproduct, counit, len(S.vertices) == 1, N)


def reduced_coproduct(C: DGCoalgebra, label: Hashable) -> Dict[Tuple[Hashable, Hashable], int]:
    """Δ' = Δ - Id⊗1 - 1⊗Id: the coproduct terms with both factors in positive degree."""

    return {(a, b): c for (a, b), c in C.coproduct[label].items() if C.degree(a) > 0 and C.degree(b) > 0}


def check_coalgebra(C: DGCoalgebra) -> List[VerificationRecord]:
    """Counit laws, coassociativity and the Leibniz rule Δ∂ = (∂⊗1 + 1⊗∂)Δ on every basis element."""

    complex = C.complex
    counit = VerificationRecord("counit")
    coassoc = VerificationRecord("coassociativity")
    leibniz = VerificationRecord("coproduct is a chain map")
    for n in range(complex.top + 1):
        for x in complex.basis[n]:
            delta = C.coproduct[x]
            left: Dict[Hashable, int] = {}
            right: Dict[Hashable, int] = {}
            for (a, b), c in delta.items():
                add_term(left, b, c * C.counit.get(a, 0))
                add_term(right, a, c * C.counit.get(b, 0))
            counit.check(left == {x: 1} and right == {x: 1}, lambda: f"{x}: {left} / {right}")

            lhs: Dict[Hashable, int] = {}
            rhs: Dict[Hashable, int] = {}
            for (a, b), c in delta.items():
                for (a1, a2), c1 in C.coproduct[a].items():
                    add_term(lhs, (a1, a2, b), c * c1)
                for (b1, b2), c2 in C.coproduct[b].items():
                    add_term(rhs, (a, b1, b2), c * c2)
            coassoc.check(lhs == rhs, lambda: f"{x}")

            d_then_delta: Dict[Hashable, int] = {}
            for y, c in complex.boundary_of(n, x).items():
                add_sum(d_then_delta, C.coproduct[y], c)
            delta_then_d: Dict[Hashable, int] = {}
            for (a, b), c in delta.items():
                da, db = C.degree(a), C.degree(b)
                for a1, c1 in complex.boundary_of(da, a).items():
                    add_term(delta_then_d, (a1, b), c * c1)
                for b1, c2 in complex.boundary_of(db, b).items():
                    add_term(delta_then_d, (a, b1), sign(da) * c * c2)
            leibniz.check(d_then_delta == delta_then_d, lambda: f"{x}: {d_then_delta} != {delta_then_d}")
    return [counit, coassoc, leibniz]
