"""Data models for matcher runs."""

from pydantic import BaseModel, Field, computed_field

from zomatch.core.enums import Termination


class PhaseStats(BaseModel):
    """One stage-1 dual adjustment followed by one stage-2 search sweep."""

    phase_index: int
    ell: int
    y_max: int
    augmenting_paths: int = 0
    affected_pieces: int = 0
    path_weights: list[int] = Field(default_factory=list)
    affected_per_path: list[int] = Field(default_factory=list)
    visited_edges: int = 0
    deleted_edges: int = 0

    @computed_field  # type: ignore[prop-decorator]
    @property
    def sum_path_weights(self) -> int:
        return sum(self.path_weights)


class LedgerEntry(BaseModel):
    """A checked bound: observed value against its limit."""

    name: str
    observed: float
    limit: float
    holds: bool
    detail: str = ""


class LedgerReport(BaseModel):
    """Bounds checked over a run."""

    entries: list[LedgerEntry] = Field(default_factory=list)
    warnings: list[str] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def violations(self) -> list[str]:
        return [
            f"{e.name}: {e.detail or f'{e.observed} > {e.limit}'}"
            for e in self.entries
            if not e.holds
        ]

    @property
    def ok(self) -> bool:
        return not self.violations


class MatchResult(BaseModel):
    """Outcome of a full matcher run."""

    n_a: int
    n_b: int
    m: int
    matching: list[tuple[int, int]] = Field(default_factory=list)
    weight: int = Field(description="Realized matching weight w")
    preprocess_size: int
    total_phases: int
    total_affected: int
    sum_path_weights: int
    termination: Termination
    duals: list[int] = Field(default_factory=list)
    phases: list[PhaseStats] = Field(default_factory=list)
    ledger: LedgerReport = Field(default_factory=LedgerReport)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def size(self) -> int:
        return len(self.matching)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def augmentations(self) -> int:
        """Augmenting paths found after preprocessing."""
        return sum(p.augmenting_paths for p in self.phases)

    @property
    def path_weights(self) -> list[int]:
        return [w for p in self.phases for w in p.path_weights]

    @property
    def affected_per_path(self) -> list[int]:
        return [k for p in self.phases for k in p.affected_per_path]
