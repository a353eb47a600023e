from dataclasses import dataclass
from typing import Optional, Tuple

from utils.errors import InvalidStructureError

__all__ = ["Necklace", "NecklaceMorphism"]


@dataclass(frozen=True, order=True)
class Necklace:
    """A wedge of simplices Δ^{n_1} ∨ ... ∨ Δ^{n_k} glued last vertex to first vertex.

    Vertices are numbered 0..vertex_count-1 from left to right. The empty bead list is the point.
    """

    beads: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(n < 1 for n in self.beads):
            raise InvalidStructureError(f"necklace {list(self.beads)} is not in preferred form")

    @property
    def vertex_count(self) -> int:
        return sum(self.beads) + 1

    @property
    def last(self) -> int:
        return self.vertex_count - 1

    @property
    def joints(self) -> Tuple[int, ...]:
        out = [0]
        for n in self.beads:
            out.append(out[-1] + n)
        return tuple(out)

    @property
    def non_joints(self) -> Tuple[int, ...]:
        joints = set(self.joints)
        return tuple(v for v in range(self.vertex_count) if v not in joints)

    def bead_bounds(self, i: int) -> Tuple[int, int]:
        joints = self.joints
        return joints[i], joints[i + 1]

    def bead_containing(self, a: int, b: int) -> Optional[int]:
        """Index of a bead holding both vertices a <= b, if any."""

        for i in range(len(self.beads)):
            start, end = self.bead_bounds(i)
            if start <= a and b <= end:
                return i
        return None

    def __str__(self) -> str:
        if not self.beads:
            return "Δ0"
        return "∨".join(f"Δ{n}" for n in self.beads)


@dataclass(frozen=True, order=True)
class NecklaceMorphism:
    source: Necklace
    target: Necklace
    vertex_map: Tuple[int, ...]

    def __post_init__(self) -> None:
        f = self.vertex_map
        if len(f) != self.source.vertex_count:
            raise InvalidStructureError(f"vertex map {list(f)} has wrong length for {self.source}")
        if any(v < 0 or v > self.target.last for v in f):
            raise InvalidStructureError(f"vertex map {list(f)} leaves {self.target}")
        if any(a > b for a, b in zip(f, f[1:])):
            raise InvalidStructureError(f"vertex map {list(f)} is not monotone")
        if f[0] != 0 or f[-1] != self.target.last:
            raise InvalidStructureError(f"vertex map {list(f)} does not preserve endpoints")
        for i in range(len(self.source.beads)):
            start, end = self.source.bead_bounds(i)
            if f[start] != f[end] and self.target.bead_containing(f[start], f[end]) is None:
                raise InvalidStructureError(f"bead {i} of {self.source} does not land in a single bead of {self.target}")

    def __call__(self, v: int) -> int:
        return self.vertex_map[v]

    @property
    def is_identity(self) -> bool:
        return self.source == self.target and self.vertex_map == tuple(range(self.source.vertex_count))

    @property
    def is_injective(self) -> bool:
        return len(set(self.vertex_map)) == len(self.vertex_map)

    def __str__(self) -> str:
        return f"{self.source} -> {self.target} {list(self.vertex_map)}"
