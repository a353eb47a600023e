from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, Tuple

from utils.errors import InvalidStructureError

__all__ = ["BoxMorphism", "cube_vertices"]

Vertex = Tuple[int, ...]


def cube_vertices(m: int) -> Tuple[Vertex, ...]:
    return tuple(product((0, 1), repeat=m))


def _index(v: Vertex) -> int:
    out = 0
    for bit in v:
        out = 2 * out + bit
    return out


@dataclass(frozen=True)
class BoxMorphism:
    """A map {0,1}^m -> {0,1}^n of the box category with connections, stored as its vertex table"""

    source_dim: int
    target_dim: int
    table: Tuple[Vertex, ...]

    def __post_init__(self) -> None:
        if len(self.table) != 2 ** self.source_dim or any(len(w) != self.target_dim for w in self.table):
            raise InvalidStructureError(f"vertex table does not describe a map 1^{self.source_dim} -> 1^{self.target_dim}")
        for v in cube_vertices(self.source_dim):
            for j, bit in enumerate(v):
                if bit == 0:
                    w = v[:j] + (1,) + v[j + 1:]
                    if any(a > b for a, b in zip(self(v), self(w))):
                        raise InvalidStructureError(f"vertex table is not monotone at {v} <= {w}")

    @classmethod
    def from_function(cls, m: int, n: int, fn: Callable[[Vertex], Vertex]) -> "BoxMorphism":
        return cls(m, n, tuple(tuple(fn(v)) for v in cube_vertices(m)))

    @classmethod
    def identity(cls, n: int) -> "BoxMorphism":
        return cls.from_function(n, n, lambda s: s)

    @classmethod
    def coface(cls, n: int, j: int, epsilon: int) -> "BoxMorphism":
        """δ^ε_j: 1^n -> 1^{n+1} inserting ε at coordinate j (1-based)."""

        if not 1 <= j <= n + 1 or epsilon not in (0, 1):
            raise InvalidStructureError(f"no coface δ^{epsilon}_{j} out of 1^{n}")
        return cls.from_function(n, n + 1, lambda s: s[:j - 1] + (epsilon,) + s[j - 1:])

    @classmethod
    def codegeneracy(cls, n: int, j: int) -> "BoxMorphism":
        """ε_j: 1^n -> 1^{n-1} forgetting coordinate j."""

        if not 1 <= j <= n:
            raise InvalidStructureError(f"no codegeneracy ε_{j} out of 1^{n}")
        return cls.from_function(n, n - 1, lambda s: s[:j - 1] + s[j:])

    @classmethod
    def coconnection(cls, n: int, j: int) -> "BoxMorphism":
        """γ_j: 1^n -> 1^{n-1} replacing coordinates j, j+1 by their maximum."""

        if not 1 <= j <= n - 1:
            raise InvalidStructureError(f"no coconnection γ_{j} out of 1^{n}")
        return cls.from_function(n, n - 1, lambda s: s[:j - 1] + (max(s[j - 1], s[j]),) + s[j + 1:])

    def __call__(self, v: Vertex) -> Vertex:
        return self.table[_index(v)]

    def __matmul__(self, other: "BoxMorphism") -> "BoxMorphism":
        """self ∘ other"""

        if other.target_dim != self.source_dim:
            raise InvalidStructureError(f"cannot compose 1^{other.source_dim} -> 1^{other.target_dim} "
                                        f"with 1^{self.source_dim} -> 1^{self.target_dim}")
        return BoxMorphism(other.source_dim, self.target_dim, tuple(self(w) for w in other.table))

    @property
    def is_identity(self) -> bool:
        return self.source_dim == self.target_dim and self.table == cube_vertices(self.source_dim)

    def constant_coordinates(self) -> Dict[int, int]:
        """Target coordinates (1-based) taking a single value on the whole image."""

        out = {}
        for k in range(self.target_dim):
            values = {w[k] for w in self.table}
            if len(values) == 1:
                out[k + 1] = values.pop()
        return out

    def drop_coordinate(self, k: int) -> "BoxMorphism":
        return BoxMorphism(self.source_dim, self.target_dim - 1, tuple(w[:k - 1] + w[k:] for w in self.table))

    def to_dict(self) -> Dict[str, object]:
        return {
            "source_dim": self.source_dim,
            "target_dim": self.target_dim,
            "table": ["".join(map(str, w)) or "()" for w in self.table],
        }
