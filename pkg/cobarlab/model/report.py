from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from utils.enums import Provenance

from .chain_complex import ChainComplex, HomologyReport

__all__ = ["TruncatedComplexReport", "VerificationRecord", "RunReport"]


@dataclass(frozen=True, eq=False)
class TruncatedComplexReport:
    complex: ChainComplex
    max_degree: int
    max_length: Optional[int]
    provenance: Provenance
    homology: HomologyReport
    exact_through: int
    truncated: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "provenance": str(self.provenance),
            "max_degree": self.max_degree,
            "max_length": self.max_length,
            "basis_sizes": self.complex.ranks(),
            "homology": self.homology.to_dict(),
            "exact_through": self.exact_through,
            "truncated": self.truncated,
        }


@dataclass
class VerificationRecord:
    """Verdict of one property check; keeps the first counterexample only"""

    name: str
    passed: bool = True
    checked: int = 0
    counterexample: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def check(self, ok: bool, counterexample: Any = None) -> bool:
        self.checked += 1
        if not ok and self.passed:
            self.passed = False
            self.counterexample = str(counterexample() if callable(counterexample) else counterexample)
        return ok

    def fail(self, counterexample: Any) -> None:
        self.check(False, counterexample)

    def merge(self, other: "VerificationRecord") -> None:
        self.checked += other.checked
        if not other.passed and self.passed:
            self.passed = False
            self.counterexample = f"{other.name}: {other.counterexample}"

    def to_dict(self) -> Dict[str, Any]:
        out = {"name": self.name, "verdict": "PASS" if self.passed else "FAIL", "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.details:
            out["details"] = self.details
        return out


@dataclass
class RunReport:
    command: str
    input_digest: Optional[str] = None
    cutoffs: Dict[str, Any] = field(default_factory=dict)
    ring: str = "Z"
    results: Dict[str, Any] = field(default_factory=dict)
    verdicts: List[VerificationRecord] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        out = {
            "command": self.command,
            "input_digest": self.input_digest,
            "cutoffs": self.cutoffs,
            "ring": self.ring,
            "results": self.results,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "passed": self.passed,
        }
        if include_timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out
