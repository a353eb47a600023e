from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from .ring import Ring

__all__ = ["Matrix"]


@dataclass(frozen=True)
class Matrix:
    """Dense matrix with arbitrary precision integer entries"""

    rows: int
    cols: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError(f"entry count does not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "Matrix":
        rows = [tuple(int(e) for e in row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def is_zero(self, ring: Ring = None) -> bool:
        reduce = ring.reduce if ring is not None else (lambda e: e)
        return all(reduce(e) == 0 for row in self.entries for e in row)

    def to_domain(self, ring: Ring) -> DomainMatrix:
        K = ring.domain
        return DomainMatrix([[K(e) for e in row] for row in self.entries], self.shape, K)

    def rank(self, ring: Ring) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        domain_matrix = self.to_domain(ring)
        if not ring.is_field:
            domain_matrix = domain_matrix.convert_to(Ring.rationals().domain)
        return domain_matrix.rank()

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Matrix.zeros(self.rows, other.cols)
        integers = Ring.integers()
        product = (self.to_domain(integers) * other.to_domain(integers)).to_list()
        return Matrix.from_rows([[int(e) for e in row] for row in product], other.cols)
