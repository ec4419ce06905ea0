"""Core enumerations for zomatch."""

from enum import Enum, IntEnum


class Side(str, Enum):
    """Part of the bipartition a vertex or point belongs to."""

    A = "A"
    B = "B"

    def __str__(self) -> str:
        return self.value

    @property
    def other(self) -> "Side":
        """The opposite part."""
        return Side.B if self is Side.A else Side.A


class StageEvent(str, Enum):
    """Points in a matcher run where the state is exposed to observers."""

    PREPROCESSED = "PREPROCESSED"
    STAGE_ONE = "STAGE_ONE"
    STAGE_TWO = "STAGE_TWO"
    TERMINATED = "TERMINATED"

    def __str__(self) -> str:
        return self.value


class Termination(str, Enum):
    """Why the stage-one check ended a run."""

    PERFECT = "PERFECT"
    UNREACHABLE = "UNREACHABLE"

    def __str__(self) -> str:
        return self.value


class RungOutcome(str, Enum):
    """Result of one geometric matcher run at a fixed distance guess."""

    PERFECT = "PERFECT"
    NOT_PERFECT = "NOT_PERFECT"

    def __str__(self) -> str:
        return self.value


class Distribution(str, Enum):
    """Point set generators."""

    UNIFORM = "uniform"
    CLUSTERED = "clustered"

    def __str__(self) -> str:
        return self.value


class ExportFormat(str, Enum):
    """Stats record serialization formats."""

    JSON = "json"
    CSV = "csv"

    def __str__(self) -> str:
        return self.value

    @property
    def suffix(self) -> str:
        """File suffix for the format."""
        suffixes = {
            ExportFormat.JSON: ".json",
            ExportFormat.CSV: ".csv",
        }
        return suffixes[self]


class ExitCode(IntEnum):
    """Process exit codes of the command line."""

    OK = 0
    USAGE = 1
    INVARIANT = 2
    IO = 3
