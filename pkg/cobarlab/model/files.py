from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

__all__ = [
    "SIMPLICIAL_FORMAT",
    "CUBICAL_FORMAT",
    "DG_CATEGORY_FORMAT",
    "FaceEntry",
    "SimplexEntry",
    "SimplicialSetFile",
    "CubeFaceEntry",
    "CellEntry",
    "CubicalSetFile",
    "HomBasisEntry",
    "HomEntry",
    "CompositionEntry",
    "DGCategoryFile",
]

SIMPLICIAL_FORMAT = "cobarlab/simplicial-set@1"
CUBICAL_FORMAT = "cobarlab/cubical-set@1"
DG_CATEGORY_FORMAT = "cobarlab/dg-category@1"


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class FaceEntry(_Strict):
    word: List[int] = Field(default_factory=list)
    base: str

    @field_validator("word")
    @classmethod
    def strictly_increasing(cls, word: List[int]) -> List[int]:
        if any(a >= b for a, b in zip(word, word[1:])) or any(j < 0 for j in word):
            raise ValueError("degeneracy word must be a strictly increasing list of non-negative indices")
        return word


class SimplexEntry(_Strict):
    id: str = Field(min_length=1)
    dim: int = Field(ge=0)
    faces: List[FaceEntry] = Field(default_factory=list)

    @model_validator(mode="after")
    def face_count(self) -> "SimplexEntry":
        expected = 0 if self.dim == 0 else self.dim + 1
        if len(self.faces) != expected:
            raise ValueError(f"simplex '{self.id}' of dimension {self.dim} lists {len(self.faces)} faces, expected {expected}")
        return self


class SimplicialSetFile(_Strict):
    format: Literal["cobarlab/simplicial-set@1"] = SIMPLICIAL_FORMAT
    name: str = "unnamed"
    simplices: List[SimplexEntry]
    basepoint: Optional[str] = None


class CubeFaceEntry(_Strict):
    word: List[str] = Field(default_factory=list)
    base: str


class CellEntry(_Strict):
    id: str = Field(min_length=1)
    dim: int = Field(ge=0)
    faces: Dict[str, CubeFaceEntry] = Field(default_factory=dict)

    @model_validator(mode="after")
    def face_keys(self) -> "CellEntry":
        expected = {f"{j},{e}" for j in range(1, self.dim + 1) for e in (0, 1)}
        if set(self.faces) != expected:
            raise ValueError(f"cell '{self.id}' of dimension {self.dim} must list faces {sorted(expected)}")
        return self

    def face_items(self) -> List[Tuple[Tuple[int, int], CubeFaceEntry]]:
        out = []
        for key, face in self.faces.items():
            j, e = key.split(",")
            out.append(((int(j), int(e)), face))
        return sorted(out)


class CubicalSetFile(_Strict):
    format: Literal["cobarlab/cubical-set@1"] = CUBICAL_FORMAT
    name: str = "unnamed"
    cells: List[CellEntry]
    basepoint: Optional[str] = None


class HomBasisEntry(_Strict):
    label: str
    degree: int = Field(ge=0)


class HomEntry(_Strict):
    source: str
    target: str
    basis: List[HomBasisEntry] = Field(default_factory=list)
    differential: Dict[str, Dict[str, int]] = Field(default_factory=dict)


class CompositionEntry(_Strict):
    """value = outer ∘ inner, with outer = [Y, Z, label] and inner = [X, Y, label]"""

    outer: Tuple[str, str, str]
    inner: Tuple[str, str, str]
    value: Dict[str, int] = Field(default_factory=dict)


class DGCategoryFile(_Strict):
    format: Literal["cobarlab/dg-category@1"] = DG_CATEGORY_FORMAT
    name: str = "unnamed"
    prime: int = Field(ge=2)
    objects: List[str]
    homs: List[HomEntry] = Field(default_factory=list)
    composition: List[CompositionEntry] = Field(default_factory=list)
    identities: Dict[str, Dict[str, int]] = Field(default_factory=dict)
