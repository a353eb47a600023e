from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .chain_complex import ChainComplex

__all__ = ["CobarWord", "MappingComplex"]


@dataclass(frozen=True, order=True)
class CobarWord:
    """A necklace word [σ_1|...|σ_k] of nondegenerate simplices running from ``source`` to ``target``"""

    beads: Tuple[str, ...]
    source: str
    target: str
    degree: int
    weight: int

    def __post_init__(self) -> None:
        if not self.beads and self.source != self.target:
            raise ValueError(f"the empty word needs equal endpoints, got {self.source} -> {self.target}")

    def __len__(self) -> int:
        return len(self.beads)

    @property
    def sort_key(self) -> Tuple[int, Tuple[str, ...]]:
        return len(self.beads), self.beads

    def then(self, other: "CobarWord") -> "CobarWord":
        """Path concatenation: this word followed by ``other``."""

        if self.target != other.source:
            raise ValueError(f"cannot concatenate {self} ending at {self.target} with {other} starting at {other.source}")
        return CobarWord(self.beads + other.beads, self.source, other.target,
                         self.degree + other.degree, self.weight + other.weight)

    def __str__(self) -> str:
        return "[" + "|".join(self.beads) + "]" if self.beads else "1"


@dataclass(frozen=True, eq=False)
class MappingComplex:
    name: str
    source: str
    target: str
    max_degree: int
    max_length: Optional[int]
    complex: ChainComplex
    truncated: bool = False

    def words(self, n: int) -> Tuple[CobarWord, ...]:
        return tuple(self.complex.basis.get(n, ()))

    def product_table(self) -> Dict[Tuple[CobarWord, CobarWord], CobarWord]:
        """Products u·v (u first along the loop) of basis words that stay inside the truncation."""

        if self.source != self.target:
            return {}
        words = sorted((w for ws in self.complex.basis.values() for w in ws), key=lambda w: (w.weight, w.sort_key))
        table = {}
        for u in words:
            for v in words:
                if self.max_length is not None and u.weight + v.weight > self.max_length:
                    break
                if u.degree + v.degree <= self.max_degree:
                    table[(u, v)] = u.then(v)
        return table
