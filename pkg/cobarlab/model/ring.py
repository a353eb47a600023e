import re

from dataclasses import dataclass
from typing import Optional

from sympy import isprime
from sympy.polys.domains import GF, QQ, ZZ

from utils.enums import RingKind
from utils.errors import InputError

__all__ = ["Ring"]

_GF = re.compile(r"^(?:GF\((\d+)\)|F(\d+))$")


@dataclass(frozen=True)
class Ring:
    kind: RingKind
    p: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == RingKind.PRIME_FIELD:
            if self.p is None or not isprime(self.p):
                InputError.throw(f"GF({self.p}) is not a prime field")
        elif self.p is not None:
            InputError.throw(f"{self.kind} takes no characteristic")

    @classmethod
    def integers(cls) -> "Ring":
        return cls(RingKind.INTEGERS)

    @classmethod
    def rationals(cls) -> "Ring":
        return cls(RingKind.RATIONALS)

    @classmethod
    def prime_field(cls, p: int) -> "Ring":
        return cls(RingKind.PRIME_FIELD, p)

    @classmethod
    def parse(cls, text: str) -> "Ring":
        """Parses Z, ZZ, Q, QQ, GF(p) or Fp."""

        value = text.strip().upper().replace(" ", "")
        if value in ("Z", "ZZ"):
            return cls.integers()
        if value in ("Q", "QQ"):
            return cls.rationals()
        match = _GF.match(value)
        if match is None:
            raise InputError(f"unknown ring '{text}', expected Z, Q or GF(p)")
        return cls.prime_field(int(match.group(1) or match.group(2)))

    @property
    def is_field(self) -> bool:
        return self.kind != RingKind.INTEGERS

    @property
    def modulus(self) -> Optional[int]:
        return self.p if self.kind == RingKind.PRIME_FIELD else None

    @property
    def domain(self):
        if self.kind == RingKind.INTEGERS:
            return ZZ
        if self.kind == RingKind.RATIONALS:
            return QQ
        return GF(self.p)

    def reduce(self, value: int) -> int:
        return value % self.p if self.kind == RingKind.PRIME_FIELD else value

    def __str__(self) -> str:
        if self.kind == RingKind.INTEGERS:
            return "Z"
        if self.kind == RingKind.RATIONALS:
            return "Q"
        return f"GF({self.p})"
