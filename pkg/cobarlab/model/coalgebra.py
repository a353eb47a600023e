from dataclasses import dataclass
from typing import Dict, Hashable, Mapping, Tuple

from .chain_complex import ChainComplex

__all__ = ["DGCoalgebra"]

Pair = Tuple[Hashable, Hashable]


@dataclass(frozen=True, eq=False)
class DGCoalgebra:
    complex: ChainComplex
    coproduct: Mapping[Hashable, Dict[Pair, int]]
    counit: Mapping[Hashable, int]
    connected: bool
    max_degree: int

    def degree(self, label: Hashable) -> int:
        return self.complex.degree_of(label)

    @property
    def unit(self) -> Hashable:
        """The single degree-0 basis element of a connected coalgebra."""

        return self.complex.basis[0][0]
