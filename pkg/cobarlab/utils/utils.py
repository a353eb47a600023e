import argparse
import hashlib

from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Sequence, TypeVar

K = TypeVar("K", bound=Hashable)

FormalSum = Dict[Any, int]


class Cog:
    """A group of command line verbs sharing one application"""

    def __init__(self, app: "Any") -> None:
        self.app = app


def command(name: str, help: str) -> Callable:
    def decorator(func: Callable) -> Callable:
        func.__command_name__ = name
        func.__command_help__ = help
        if not hasattr(func, "__command_options__"):
            func.__command_options__ = []
        return func
    return decorator


def option(*flags: str, **kwargs: Any) -> Callable:
    def decorator(func: Callable) -> Callable:
        if not hasattr(func, "__command_options__"):
            func.__command_options__ = []
        # decorators apply bottom-up, keep declaration order
        func.__command_options__.insert(0, (flags, kwargs))
        return func
    return decorator


def register_options(parser: argparse.ArgumentParser, func: Callable) -> None:
    for flags, kwargs in getattr(func, "__command_options__", []):
        parser.add_argument(*flags, **kwargs)


def add_term(acc: FormalSum, key: Any, coeff: int, modulus: Optional[int] = None) -> None:
    """Adds coeff·key into a formal sum in place, dropping zero coefficients."""

    if coeff == 0:
        return
    value = acc.get(key, 0) + coeff
    if modulus is not None:
        value %= modulus
    if value == 0:
        acc.pop(key, None)
    else:
        acc[key] = value


def add_sum(acc: FormalSum, other: FormalSum, scale: int = 1, modulus: Optional[int] = None) -> None:
    for key, coeff in other.items():
        add_term(acc, key, scale * coeff, modulus)


def clean(terms: Iterable, modulus: Optional[int] = None) -> FormalSum:
    """Collects (key, coeff) pairs into a formal sum."""

    acc: FormalSum = {}
    for key, coeff in terms:
        add_term(acc, key, coeff, modulus)
    return acc


def sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def format_table(header: Sequence[str], rows: List[Sequence[Any]]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
