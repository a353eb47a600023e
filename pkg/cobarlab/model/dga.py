from dataclasses import dataclass
from typing import Any, Dict, Mapping, Optional, Tuple

from .ring import Ring

__all__ = ["Word", "PresentedDGA", "AlgebraPresentation"]

Word = Tuple[str, ...]


@dataclass(frozen=True, eq=False)
class PresentedDGA:
    """Free graded algebra on labelled generators with a derivation differential.

    Weights are positive integers per generator; the truncation keeps words of degree at most
    ``max_degree`` and, when ``max_weight`` is set, of total weight at most ``max_weight``.
    """

    name: str
    ring: Ring
    generators: Mapping[str, int]
    differential: Mapping[str, Dict[Word, int]]
    weights: Mapping[str, int]
    max_degree: int
    max_weight: Optional[int] = None

    def degree(self, word: Word) -> int:
        return sum(self.generators[g] for g in word)

    def weight(self, word: Word) -> int:
        return sum(self.weights[g] for g in word)

    def in_truncation(self, word: Word) -> bool:
        return self.degree(word) <= self.max_degree and (self.max_weight is None or self.weight(word) <= self.max_weight)

    @property
    def has_degree_zero_generators(self) -> bool:
        return any(d == 0 for d in self.generators.values())


def _render_word(word: Word) -> str:
    if not word:
        return "1"
    parts, i = [], 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        parts.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return "·".join(parts)


def _render_side(terms) -> str:
    if not terms:
        return "0"
    out = []
    for word, coeff in terms:
        body = _render_word(word)
        out.append(body if coeff == 1 else f"{coeff}{body}" if word else str(coeff))
    return " + ".join(out)


@dataclass(frozen=True)
class AlgebraPresentation:
    """⟨generators | relations⟩ with each relation a noncommutative polynomial set equal to zero"""

    name: str
    ring: Ring
    generators: Tuple[str, ...]
    relations: Tuple[Tuple[Tuple[Word, int], ...], ...]

    def __post_init__(self) -> None:
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator labels must be distinct")
        for relation in self.relations:
            for word, _ in relation:
                if any(g not in self.generators for g in word):
                    raise ValueError(f"relation uses an unknown generator: {word}")

    def render_relation(self, relation: Tuple[Tuple[Word, int], ...]) -> str:
        p = self.ring.modulus
        if p is not None:
            relation = tuple((w, c % p - p if c % p > p // 2 else c % p) for w, c in relation)
        lhs = [(w, c) for w, c in relation if c > 0]
        rhs = [(w, -c) for w, c in relation if c < 0]
        return f"{_render_side(lhs)} = {_render_side(rhs)}"

    def __str__(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(self.render_relation(r) for r in self.relations)
        return f"⟨{gens} | {rels}⟩" if rels else f"⟨{gens} | ⟩"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "ring": str(self.ring),
            "generators": list(self.generators),
            "relations": [[{"word": list(w), "coeff": c} for w, c in r] for r in self.relations],
            "text": str(self),
        }
