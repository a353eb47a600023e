from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, List, Mapping, Optional, Tuple

from utils.errors import BoundaryError

from .matrix import Matrix
from .ring import Ring

__all__ = ["ChainComplex", "HomologyReport"]


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """Free chain complex with labelled bases.

    ``boundary[n]`` maps degree n to degree n-1; column j is the boundary of ``basis[n][j]``.
    Degrees run from 0 to ``top``.
    """

    ring: Ring
    basis: Mapping[int, Tuple[Hashable, ...]]
    boundary: Mapping[int, Matrix]
    name: str = ""
    _index: Dict[int, Dict[Hashable, int]] = field(init=False, repr=False)
    _degrees: Dict[Hashable, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        for n, matrix in self.boundary.items():
            if n < 1 or matrix.shape != (self.rank(n - 1), self.rank(n)):
                raise ValueError(f"boundary matrix at degree {n} has shape {matrix.shape}, "
                                 f"expected {(self.rank(n - 1), self.rank(n))}")
        for n in self.boundary:
            if n - 1 in self.boundary:
                if not (self.boundary[n - 1] @ self.boundary[n]).is_zero(self.ring):
                    BoundaryError.throw_at(n, self.name)
        object.__setattr__(self, "_index", {n: {b: i for i, b in enumerate(labels)} for n, labels in self.basis.items()})
        object.__setattr__(self, "_degrees", {b: n for n, labels in self.basis.items() for b in labels})

    @property
    def top(self) -> int:
        return max(self.basis) if self.basis else -1

    def rank(self, n: int) -> int:
        return len(self.basis.get(n, ()))

    def degree_of(self, label: Hashable) -> int:
        return self._degrees[label]

    def index(self, n: int, label: Hashable) -> int:
        return self._index[n][label]

    def differential(self, n: int) -> Matrix:
        if n in self.boundary:
            return self.boundary[n]
        return Matrix.zeros(self.rank(n - 1), self.rank(n))

    def ranks(self) -> List[int]:
        return [self.rank(n) for n in range(self.top + 1)]

    def vector(self, n: int, chain: Mapping[Hashable, int]) -> List[int]:
        out = [0] * self.rank(n)
        for label, coeff in chain.items():
            out[self.index(n, label)] += coeff
        return out

    def boundary_of(self, n: int, label: Hashable) -> Dict[Hashable, int]:
        column = self.differential(n).column(self.index(n, label)) if n >= 1 else ()
        return {self.basis[n - 1][i]: c for i, c in enumerate(column) if self.ring.reduce(c)}


@dataclass(frozen=True)
class HomologyReport:
    ring: Ring
    betti: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]
    truncated: bool = False
    max_degree: Optional[int] = None

    def __post_init__(self) -> None:
        if self.ring.is_field and any(self.torsion):
            raise ValueError("torsion reported over a field")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ring": str(self.ring),
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
            "truncated": self.truncated,
        }

    def rows(self) -> List[Tuple[int, int, str]]:
        return [(n, b, ",".join(map(str, t)) or "-") for n, (b, t) in enumerate(zip(self.betti, self.torsion))]
