"""Core graph types, matching state, enums, and exceptions."""

from zomatch.core.enums import (
    Distribution,
    ExitCode,
    ExportFormat,
    RungOutcome,
    Side,
    StageEvent,
    Termination,
)
from zomatch.core.exceptions import (
    FormatError,
    InputError,
    InvariantViolation,
    SeparatorError,
    SizeMismatchError,
    UnsupportedFamilyError,
    ZomatchError,
)
from zomatch.core.graph import (
    BipartiteGraph,
    Matching,
    PieceDecomposition,
    build_graph,
    compute_pieces,
)
from zomatch.core.models import FeasibilityViolation
from zomatch.core.state import FREE, MatchState, ResidualView, check_feasibility, slack

__all__ = [
    "Distribution",
    "ExitCode",
    "ExportFormat",
    "RungOutcome",
    "Side",
    "StageEvent",
    "Termination",
    "FormatError",
    "InputError",
    "InvariantViolation",
    "SeparatorError",
    "SizeMismatchError",
    "UnsupportedFamilyError",
    "ZomatchError",
    "BipartiteGraph",
    "Matching",
    "PieceDecomposition",
    "build_graph",
    "compute_pieces",
    "FeasibilityViolation",
    "FREE",
    "MatchState",
    "ResidualView",
    "check_feasibility",
    "slack",
]
