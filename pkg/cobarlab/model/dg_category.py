from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

__all__ = ["Vector", "HomSpace", "DGCategory", "DGNerveSimplex"]

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class HomSpace:
    """hom(source, target) as a graded GF(p)-vector space; ``differential[j]`` is d of basis element j"""

    source: str
    target: str
    labels: Tuple[str, ...]
    degrees: Tuple[int, ...]
    differential: Tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.labels)

    def zero(self) -> Vector:
        return (0,) * self.rank

    def degree_slots(self, degree: int) -> Tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.degrees) if d == degree)


@dataclass(frozen=True, eq=False)
class DGCategory:
    """Finite dg category over GF(p).

    ``composition[(X, Y, Z)][(i, j)]`` is g_i ∘ f_j for g_i in hom(Y, Z) and f_j in hom(X, Y).
    """

    name: str
    prime: int
    objects: Tuple[str, ...]
    homs: Mapping[Tuple[str, str], HomSpace]
    composition: Mapping[Tuple[str, str, str], Dict[Tuple[int, int], Vector]]
    identities: Mapping[str, Vector]

    def hom(self, source: str, target: str) -> HomSpace:
        return self.homs[(source, target)]


@dataclass(frozen=True, order=True)
class DGNerveSimplex:
    """Objects X_0..X_n with a morphism f_I of degree |I|-2 for every I ⊆ [n], |I| >= 2"""

    objects: Tuple[str, ...]
    maps: Tuple[Tuple[Tuple[int, ...], Vector], ...]

    @property
    def dim(self) -> int:
        return len(self.objects) - 1

    def f(self, subset: Tuple[int, ...]) -> Vector:
        return dict(self.maps)[tuple(subset)]

    def __str__(self) -> str:
        body = ", ".join(f"f{''.join(map(str, s))}={''.join(map(str, v)) or '0'}" for s, v in self.maps)
        return f"({','.join(self.objects)}; {body})"
