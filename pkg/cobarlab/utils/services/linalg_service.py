import logging

from typing import Callable, Hashable, List, Mapping, Optional, Sequence, Tuple

from sympy import Matrix as SymMatrix
from sympy import Rational

from model import ChainComplex, HomologyReport, Matrix, Ring
from utils.errors import TruncationError

logger = logging.getLogger(__name__)


def _smallest_pivot(A: List[List[int]], t: int) -> Optional[Tuple[int, int]]:
    best = None
    for i in range(t, len(A)):
        for j in range(t, len(A[i])):
            if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                best = (i, j)
    return best


def _swap_rows(A: List[List[int]], U: List[List[int]], a: int, b: int) -> None:
    A[a], A[b] = A[b], A[a]
    U[a], U[b] = U[b], U[a]


def _swap_cols(A: List[List[int]], V: List[List[int]], a: int, b: int) -> None:
    for M in (A, V):
        for row in M:
            row[a], row[b] = row[b], row[a]


def _add_row(A: List[List[int]], U: List[List[int]], target: int, source: int, q: int) -> None:
    """row_target += q * row_source"""

    for M in (A, U):
        src, dst = M[source], M[target]
        for k in range(len(dst)):
            dst[k] += q * src[k]


def _add_col(A: List[List[int]], V: List[List[int]], target: int, source: int, q: int) -> None:
    for M in (A, V):
        for row in M:
            row[target] += q * row[source]


def smith_normal_form(M: Matrix) -> Tuple[Matrix, Matrix, Matrix]:
    """Smith normal form over the integers.

    Returns
    -------
    (D, U, V)
        With U·M·V = D, D diagonal with d_1 | d_2 | ... and non-negative entries, U and V unimodular.
        Pivots are the entries of smallest absolute value, ties broken by (row, col).
    """

    rows, cols = M.shape
    A = M.to_lists()
    U = Matrix.identity(rows).to_lists()
    V = Matrix.identity(cols).to_lists()

    t = 0
    while t < min(rows, cols):
        pivot = _smallest_pivot(A, t)
        if pivot is None:
            break
        while True:
            i, j = pivot
            if i != t:
                _swap_rows(A, U, i, t)
            if j != t:
                _swap_cols(A, V, j, t)
            p = A[t][t]
            for i in range(t + 1, rows):
                if A[i][t]:
                    _add_row(A, U, i, t, -(A[i][t] // p))
            for j in range(t + 1, cols):
                if A[t][j]:
                    _add_col(A, V, j, t, -(A[t][j] // p))
            if any(A[i][t] for i in range(t + 1, rows)) or any(A[t][j] for j in range(t + 1, cols)):
                pivot = _smallest_pivot(A, t)
                continue
            offender = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % p), None)
            if offender is None:
                break
            _add_row(A, U, t, offender[0], 1)
            pivot = _smallest_pivot(A, t)
        if A[t][t] < 0:
            A[t] = [-e for e in A[t]]
            U[t] = [-e for e in U[t]]
        t += 1

    return Matrix.from_rows(A, cols), Matrix.from_rows(U, rows), Matrix.from_rows(V, cols)


def invariant_factors(M: Matrix) -> List[int]:
    D, _, _ = smith_normal_form(M)
    return [D[k, k] for k in range(min(D.shape)) if D[k, k]]


def determinant(M: Matrix) -> int:
    if M.rows == 0:
        return 1
    return int(M.to_domain(Ring.integers()).det())


def build_complex(ring: Ring,
                  basis: Mapping[int, Sequence[Hashable]],
                  differential: Callable[[Hashable], Mapping[Hashable, int]],
                  name: str = "") -> ChainComplex:
    """Assembles a ChainComplex from a per-label differential.

    Raises TruncationError when a boundary term is not a basis element one degree down.
    """

    top = max(basis) if basis else -1
    labels = {n: tuple(basis.get(n, ())) for n in range(top + 1)}
    index = {n: {b: i for i, b in enumerate(ls)} for n, ls in labels.items()}
    boundary = {}
    for n in range(1, top + 1):
        entries = [[0] * len(labels[n]) for _ in labels[n - 1]]
        for j, b in enumerate(labels[n]):
            for term, coeff in differential(b).items():
                i = index[n - 1].get(term)
                if i is None:
                    TruncationError.throw(f"boundary of {b} leaves the truncation at {term}")
                entries[i][j] += coeff
        entries = [[ring.reduce(e) for e in row] for row in entries]
        boundary[n] = Matrix.from_rows(entries, len(labels[n]))
    logger.info("built complex %s over %s with basis sizes %s", name or "<anonymous>", ring,
                [len(labels[n]) for n in range(top + 1)])
    return ChainComplex(ring, labels, boundary, name)


def homology(complex: ChainComplex, max_degree: Optional[int] = None, truncated: bool = False) -> HomologyReport:
    """Betti numbers and torsion of a ChainComplex up to ``max_degree``.

    Ranks come from Gaussian elimination over the ring's fraction field; torsion from the Smith
    normal form of the incoming boundary (integers only).
    """

    top = complex.top if max_degree is None else min(max_degree, complex.top)
    ring = complex.ring
    ranks = {n: complex.differential(n).rank(ring) for n in range(1, min(top + 1, complex.top) + 1)}
    betti, torsion = [], []
    for n in range(top + 1):
        betti.append(complex.rank(n) - ranks.get(n, 0) - ranks.get(n + 1, 0))
        if ring.is_field or n + 1 not in complex.boundary or complex.boundary[n + 1].is_zero():
            torsion.append(())
        else:
            torsion.append(tuple(d for d in invariant_factors(complex.boundary[n + 1]) if d > 1))
    return HomologyReport(ring, tuple(betti), tuple(torsion), truncated, top)


def universal_coefficients(report: HomologyReport, p: int) -> Tuple[int, ...]:
    """Betti numbers over GF(p) predicted from an integral homology report."""

    out = []
    for n, b in enumerate(report.betti):
        extra = sum(1 for d in report.torsion[n] if d % p == 0)
        if n > 0:
            extra += sum(1 for d in report.torsion[n - 1] if d % p == 0)
        out.append(b + extra)
    return tuple(out)


def _sym(M: Matrix) -> SymMatrix:
    return SymMatrix(M.rows, M.cols, lambda i, j: M[i, j])


def cycle_representatives(complex: ChainComplex, n: int) -> List[List[Rational]]:
    """Cycles over the rationals whose classes form a basis of H_n."""

    if complex.rank(n) == 0:
        return []
    if n >= 1 and complex.rank(n - 1):
        kernel = _sym(complex.differential(n)).nullspace()
    else:
        kernel = [SymMatrix.eye(complex.rank(n))[:, k] for k in range(complex.rank(n))]
    span = _sym(complex.differential(n + 1)) if n + 1 in complex.boundary else SymMatrix.zeros(complex.rank(n), 0)
    current = span.rank() if span.cols else 0
    reps = []
    for z in kernel:
        candidate = span.row_join(z)
        rank = candidate.rank()
        if rank > current:
            span, current = candidate, rank
            reps.append(list(z))
    return reps


def class_coordinates(complex: ChainComplex, n: int, reps: Sequence[Sequence[Rational]],
                      vector: Sequence[int]) -> List[Rational]:
    """Coordinates of the class of a cycle in the basis given by ``reps``."""

    target = SymMatrix(len(vector), 1, list(vector))
    if not reps:
        return []
    columns = [SymMatrix(len(r), 1, list(r)) for r in reps]
    if n + 1 in complex.boundary:
        columns += _sym(complex.differential(n + 1)).columnspace()
    system = SymMatrix.hstack(*columns)
    solution, params = system.gauss_jordan_solve(target)
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return [Rational(solution[k]) for k in range(len(reps))]
