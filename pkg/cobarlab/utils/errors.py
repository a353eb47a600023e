from typing import Optional

from .enums import ExitCode


class CobarlabError(Exception):
    exit_code = ExitCode.FAILURE

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message

    @classmethod
    def throw(cls, message: str) -> None:
        raise cls(message)


class InputError(CobarlabError):
    """Unreadable or malformed input, or a bad command line request"""

    exit_code = ExitCode.INPUT_ERROR

    def __init__(self, message: str, location: Optional[str] = None) -> None:
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location

    @classmethod
    def throw(cls, message: str, location: Optional[str] = None) -> None:
        raise cls(message, location)


class InvalidStructureError(InputError):
    """A simplicial set, cubical set, necklace map or dg category that breaks its own identities"""


class ConnectivityError(InputError):
    @staticmethod
    def throw_one_vertex(name: str, vertex_count: int) -> None:
        raise ConnectivityError(
            f"'{name}' has {vertex_count} vertices, a one-vertex simplicial set is required. "
            "Collapse a spanning subcomplex with `quotient` first.")


class TruncationError(InputError):
    pass


class EnumerationBoundError(InputError):
    pass


class BoundaryError(CobarlabError):
    """Raised when a boundary does not square to zero"""

    @staticmethod
    def throw_at(degree: int, where: str = "") -> None:
        suffix = f" in {where}" if where else ""
        raise BoundaryError(f"boundary does not square to zero at degree {degree}{suffix}")
