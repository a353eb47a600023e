from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from utils.errors import InvalidStructureError

__all__ = ["SimplexRef", "SimplicialSet"]


@dataclass(frozen=True, order=True)
class SimplexRef:
    """A simplex in Eilenberg-Zilber form s_{j_r}...s_{j_1}(base) with j_1 < ... < j_r"""

    base: str
    word: Tuple[int, ...] = ()
    dim: int = 0

    def __post_init__(self) -> None:
        if any(a >= b for a, b in zip(self.word, self.word[1:])):
            raise InvalidStructureError(f"degeneracy word {list(self.word)} of '{self.base}' is not strictly increasing")
        if self.word and (self.word[0] < 0 or self.word[-1] >= self.dim):
            raise InvalidStructureError(f"degeneracy word {list(self.word)} out of range for dimension {self.dim}")

    @property
    def base_dim(self) -> int:
        return self.dim - len(self.word)

    @property
    def is_degenerate(self) -> bool:
        return bool(self.word)

    def surjection(self) -> Tuple[int, ...]:
        """The monotone surjection [dim] -> [base_dim] this degeneracy word encodes."""

        out, drop = [], 0
        degenerate = set(self.word)
        for i in range(self.dim + 1):
            out.append(i - drop)
            if i in degenerate:
                drop += 1
        return tuple(out)

    @classmethod
    def from_surjection(cls, base: str, surjection: Tuple[int, ...]) -> "SimplexRef":
        word = tuple(i for i in range(len(surjection) - 1) if surjection[i] == surjection[i + 1])
        return cls(base, word, len(surjection) - 1)

    def __str__(self) -> str:
        if not self.word:
            return self.base
        return "".join(f"s{j}" for j in reversed(self.word)) + f"({self.base})"


@dataclass(frozen=True, eq=False)
class SimplicialSet:
    """Finitely presented simplicial set.

    ``faces[x][i]`` is the i-th face of the nondegenerate simplex ``x``.
    """

    name: str
    simplices: Mapping[int, Tuple[str, ...]]
    faces: Mapping[str, Tuple[SimplexRef, ...]]
    basepoint: Optional[str] = None
    _dims: Dict[str, int] = field(init=False, repr=False)
    operators: Dict[Tuple["SimplexRef", Tuple[int, ...]], "SimplexRef"] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        dims = {}
        for n, ids in self.simplices.items():
            for x in ids:
                if x in dims:
                    raise InvalidStructureError(f"simplex id '{x}' used twice")
                dims[x] = n
        object.__setattr__(self, "_dims", dims)
        object.__setattr__(self, "operators", {})
        if self.basepoint is not None and dims.get(self.basepoint) != 0:
            raise InvalidStructureError(f"basepoint '{self.basepoint}' is not a vertex")

    @property
    def top_dim(self) -> int:
        return max((n for n, ids in self.simplices.items() if ids), default=-1)

    def dim_of(self, x: str) -> int:
        try:
            return self._dims[x]
        except KeyError:
            raise InvalidStructureError(f"unknown simplex '{x}' in '{self.name}'")

    def __contains__(self, x: str) -> bool:
        return x in self._dims

    def nondegenerate(self, n: int) -> Tuple[str, ...]:
        return tuple(self.simplices.get(n, ()))

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.nondegenerate(0)

    @property
    def base_vertex(self) -> str:
        return self.basepoint if self.basepoint is not None else self.vertices[0]

    def is_one_vertex(self) -> bool:
        return len(self.vertices) == 1

    def ref(self, base: str, word: Tuple[int, ...] = ()) -> SimplexRef:
        return SimplexRef(base, tuple(word), self.dim_of(base) + len(word))

    def counts(self) -> List[int]:
        return [len(self.nondegenerate(n)) for n in range(self.top_dim + 1)]

    def all_ids(self) -> List[str]:
        return [x for n in sorted(self.simplices) for x in self.simplices[n]]
