"""Truncated Hochschild chains of a presented dga and coHochschild chains of a connected dg coalgebra.

Hochschild chains are a_0 ⊗ sa_1 ⊗ ... ⊗ sa_n with every a_i (i >= 1) a nonempty word, in degree
|a_0| + Σ(|a_i| + 1), and

    b = d_A ⊗ 1 + 1 ⊗ d_bar + t_L - t_R

where t_L multiplies a_0 a_1 with sign (-1)^{|a_0|}, the bar part merges neighbours with the Koszul
sign of everything to their left, and t_R rotates a_n to the front with sign (-1)^{|sa_n|(deg - |sa_n|)}.

coHochschild chains are c ⊗ x with x a word of the cobar construction, in degree |c| + |x|, and

    δ = ∂ ⊗ 1 + (-1)^{|c|} 1 ⊗ D + θ_L - θ_R

with θ_L(c ⊗ x) = Σ (-1)^{|c'|} c' ⊗ sc''·x over c'' of positive degree and
θ_R(c ⊗ x) = Σ (-1)^{(|c'| - 1)(|c''| + |x|)} c'' ⊗ x·sc' over c' of positive degree.
"""

import logging

from typing import Dict, List, Optional, Tuple

from model import DGCoalgebra, PresentedDGA, TruncatedComplexReport, Word
from utils import add_term, sign
from utils.enums import Provenance
from utils.errors import ConnectivityError, TruncationError

from . import cobar_service, linalg_service
from .cobar_service import exact_degree

logger = logging.getLogger(__name__)

HochschildChain = Tuple[Word, ...]


def _words(A: PresentedDGA, N: int, L: Optional[int]) -> List[Word]:
    if L is None and A.has_degree_zero_generators:
        raise TruncationError(f"{A.name} has generators of degree 0, a weight cutoff L is required")
    letters = sorted(A.generators)
    out = []

    def extend(word: Word, degree: int, weight: int) -> None:
        out.append(word)
        for g in letters:
            d, w = degree + A.generators[g], weight + A.weights[g]
            if d <= N and (L is None or w <= L):
                extend(word + (g,), d, w)

    extend((), 0, 0)
    return out


def _degree(A: PresentedDGA, chain: HochschildChain) -> int:
    return A.degree(chain[0]) + sum(A.degree(a) + 1 for a in chain[1:])


def hochschild_differential(A: PresentedDGA, chain: HochschildChain) -> Dict[HochschildChain, int]:
    out: Dict[HochschildChain, int] = {}
    a0, bars = chain[0], chain[1:]
    n = len(bars)
    total = _degree(A, chain)
    for w, c in cobar_service.differential_of(A, a0).items():
        add_term(out, (w,) + bars, c)
    prefix = A.degree(a0)
    for i, a in enumerate(bars, start=1):
        for w, c in cobar_service.differential_of(A, a).items():
            if w:
                add_term(out, chain[:i] + (w,) + chain[i + 1:], -sign(prefix) * c)
        prefix += A.degree(a) + 1
        if i < n:
            add_term(out, chain[:i] + (a + chain[i + 1],) + chain[i + 2:], sign(prefix))
    if n:
        add_term(out, (a0 + bars[0],) + bars[1:], sign(A.degree(a0)))
        last = A.degree(bars[-1]) + 1
        add_term(out, (bars[-1] + a0,) + bars[:-1], -sign(last * (total - last)))
    return out


def hochschild(A: PresentedDGA, N: int, L: Optional[int] = None) -> TruncatedComplexReport:
    """Hochschild chains of A through degree N and weight L, with homology through the exact range."""

    words = _words(A, N, L)
    nonempty = [w for w in words if w]
    basis: Dict[int, List[HochschildChain]] = {n: [] for n in range(N + 1)}

    def extend(chain: HochschildChain, degree: int, weight: int) -> None:
        basis[degree].append(chain)
        for w in nonempty:
            d, wt = degree + A.degree(w) + 1, weight + A.weight(w)
            if d <= N and (L is None or wt <= L):
                extend(chain + (w,), d, wt)

    for a0 in words:
        extend((a0,), A.degree(a0), A.weight(a0))
    for chains in basis.values():
        chains.sort(key=lambda c: (len(c), c))
    complex = linalg_service.build_complex(A.ring, basis, lambda c: hochschild_differential(A, c),
                                           f"CH({A.name})")
    exact = exact_degree(A, N, L)
    truncated = A.has_degree_zero_generators
    report = linalg_service.homology(complex, max(exact, 0), truncated=truncated)
    logger.info("Hochschild chains of %s: %s", A.name, complex.ranks())
    return TruncatedComplexReport(complex, N, L, Provenance.HOCHSCHILD, report, exact, truncated)


def cohochschild_differential(C: DGCoalgebra, A: PresentedDGA, element) -> Dict[tuple, int]:
    c, x = element
    out: Dict[tuple, int] = {}
    complex = C.complex
    deg_c, deg_x = C.degree(c), A.degree(x)
    if deg_c:
        for b, k in complex.boundary_of(deg_c, c).items():
            add_term(out, (b, x), k)
    for w, k in cobar_service.differential_of(A, x).items():
        add_term(out, (c, w), sign(deg_c) * k)
    for (a, b), k in C.coproduct[c].items():
        da, db = C.degree(a), C.degree(b)
        if db > 0:
            add_term(out, (a, (cobar_service.generator(b),) + x), sign(da) * k)
        if da > 0:
            add_term(out, (b, x + (cobar_service.generator(a),)), -sign((da - 1) * (db + deg_x)) * k)
    return out


def cohochschild(C: DGCoalgebra, N: int, L: Optional[int] = None) -> TruncatedComplexReport:
    """coHochschild chains of a connected coalgebra through degree N and weight L."""

    if not C.connected:
        ConnectivityError.throw_one_vertex(C.complex.name, C.complex.rank(0))
    if C.max_degree < N + 1:
        raise TruncationError(f"coalgebra is known through degree {C.max_degree}, degree {N + 1} is needed")
    A = cobar_service.cobar(C, N, L)
    words = _words(A, N, L)
    basis: Dict[int, List[tuple]] = {n: [] for n in range(N + 1)}
    for n in range(min(N, C.complex.top) + 1):
        for c in C.complex.basis[n]:
            for x in words:
                d, wt = n + A.degree(x), n + A.weight(x)
                if d <= N and (L is None or wt <= L):
                    basis[d].append((c, x))
    for elements in basis.values():
        elements.sort(key=lambda e: (len(e[1]), C.degree(e[0]), str(e[0]), e[1]))
    complex = linalg_service.build_complex(C.complex.ring, basis, lambda e: cohochschild_differential(C, A, e),
                                           f"coCH({C.complex.name})")
    exact = exact_degree(A, N, L, base_ratio=True)
    truncated = A.has_degree_zero_generators
    report = linalg_service.homology(complex, max(exact, 0), truncated=truncated)
    logger.info("coHochschild chains of %s: %s", C.complex.name, complex.ranks())
    return TruncatedComplexReport(complex, N, L, Provenance.COHOCHSCHILD, report, exact, truncated)
