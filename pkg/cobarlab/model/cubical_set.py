import re

from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from utils.errors import InvalidStructureError

from .box import BoxMorphism

__all__ = ["CubeRef", "CubicalSetFG"]

_TOKEN = re.compile(r"^([eg])(\d+)$")


@dataclass(frozen=True, order=True)
class CubeRef:
    """A cell K(μ)(base) where μ is a composite of codegeneracies and coconnections.

    Word tokens are ``e<j>`` (degeneracy along ε_j) and ``g<j>`` (connection along γ_j), innermost first.
    """

    base: str
    word: Tuple[str, ...] = ()
    dim: int = 0

    def __post_init__(self) -> None:
        for token in self.word:
            if _TOKEN.match(token) is None:
                raise InvalidStructureError(f"unknown structural token '{token}' (expected e<j> or g<j>)")
        if self.base_dim < 0:
            raise InvalidStructureError(f"structural word {list(self.word)} too long for dimension {self.dim}")

    @property
    def base_dim(self) -> int:
        return self.dim - len(self.word)

    def structural_map(self) -> BoxMorphism:
        """μ: 1^dim -> 1^base_dim"""

        current = self.base_dim
        mu = BoxMorphism.identity(current)
        for token in self.word:
            kind, j = _TOKEN.match(token).groups()
            j = int(j)
            step = BoxMorphism.codegeneracy(current + 1, j) if kind == "e" else BoxMorphism.coconnection(current + 1, j)
            mu = mu @ step
            current += 1
        return mu

    def __str__(self) -> str:
        if not self.word:
            return self.base
        return "".join(t.upper() for t in reversed(self.word)) + f"({self.base})"


@dataclass(frozen=True, eq=False)
class CubicalSetFG:
    """Finitely generated cubical set with connections.

    ``faces[c][(j, ε)]`` is ∂^ε_j of the nondegenerate cell ``c``, for j in 1..dim.
    """

    name: str
    cells: Mapping[int, Tuple[str, ...]]
    faces: Mapping[str, Mapping[Tuple[int, int], CubeRef]]
    basepoint: Optional[str] = None
    _dims: Dict[str, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        dims = {}
        for n, ids in self.cells.items():
            for c in ids:
                if c in dims:
                    raise InvalidStructureError(f"cell id '{c}' used twice")
                dims[c] = n
        object.__setattr__(self, "_dims", dims)

    @property
    def top_dim(self) -> int:
        return max((n for n, ids in self.cells.items() if ids), default=-1)

    def dim_of(self, c: str) -> int:
        try:
            return self._dims[c]
        except KeyError:
            raise InvalidStructureError(f"unknown cell '{c}' in '{self.name}'")

    def __contains__(self, c: str) -> bool:
        return c in self._dims

    def nondegenerate(self, n: int) -> Tuple[str, ...]:
        return tuple(self.cells.get(n, ()))

    def ref(self, base: str, word: Tuple[str, ...] = ()) -> CubeRef:
        return CubeRef(base, tuple(word), self.dim_of(base) + len(word))

    def counts(self):
        return [len(self.nondegenerate(n)) for n in range(self.top_dim + 1)]
