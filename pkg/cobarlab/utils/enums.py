from enum import Enum, IntEnum, unique


@unique
class RingKind(IntEnum):
    """Coefficient ring kind"""

    INTEGERS = 0
    RATIONALS = 1
    PRIME_FIELD = 2

    def __str__(self) -> str:
        return {
            self.INTEGERS: "Integers",
            self.RATIONALS: "Rationals",
            self.PRIME_FIELD: "PrimeField",
        }[self]


@unique
class ExitCode(IntEnum):
    """Process exit codes of the command line"""

    PASS = 0
    FAILURE = 1
    INPUT_ERROR = 2


@unique
class Provenance(str, Enum):
    SIMPLICIAL = "simplicial"
    CUBICAL = "cubical"
    MAPPING_COMPLEX = "mapping_complex"
    COBAR = "cobar"
    HOCHSCHILD = "hochschild"
    COHOCHSCHILD = "cohochschild"

    def __str__(self) -> str:
        return self.value


@unique
class GeneratorType(str, Enum):
    """Generator classes of the necklace category"""

    INJECTIVE = "i"
    CODEGENERACY = "ii"
    COLLAPSE = "iii"

    def __str__(self) -> str:
        return self.value


@unique
class Suite(str, Enum):
    NECKLACE = "necklace"
    CUBICAL = "cubical"
    ADJUNCTION = "adjunction"
    ISO = "iso"
    HOCHSCHILD = "hochschild"
    STRUCTURAL = "structural"
    RIGIDIFY = "rigidify"
    ALL = "all"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def expand(cls, suite: "Suite") -> list["Suite"]:
        if suite == cls.ALL:
            return [s for s in cls if s != cls.ALL]
        return [suite]
