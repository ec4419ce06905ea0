"""Data models for geometric bottleneck runs."""

from pydantic import BaseModel, Field, computed_field

from zomatch.core.enums import RungOutcome, Termination
from zomatch.matcher.models import LedgerReport, PhaseStats


class ShiftChoice(BaseModel):
    """Chosen line offsets of the coarse grid, with boundary-point counts per offset."""

    root: int = Field(description="Coarse cell width in fine cells (sqrt of r)")
    kappa_x: int
    kappa_y: int
    counts_x: list[int] = Field(default_factory=list)
    counts_y: list[int] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def boundary_bound(self) -> int:
        """Boundary points counted against the chosen vertical and horizontal lines."""
        return self.counts_x[self.kappa_x - 1] + self.counts_y[self.kappa_y - 1]

    @property
    def mean_x(self) -> float:
        return sum(self.counts_x) / len(self.counts_x)

    @property
    def mean_y(self) -> float:
        return sum(self.counts_y) / len(self.counts_y)


class GeoRunStats(BaseModel):
    """One matcher run at a fixed distance guess."""

    delta: float
    epsilon: float
    r: int
    outcome: RungOutcome
    termination: Termination | None = None
    n_a: int
    n_b: int
    matching_size: int = 0
    bottleneck: float | None = Field(default=None, description="Longest matched edge")
    edge_bound: float = Field(description="Longest edge the grid can induce, (1 + eps/3) delta")
    preprocess_size: int = 0
    total_phases: int = 0
    total_affected: int = 0
    sum_path_weights: int = 0
    realized_weight: int = 0
    boundary_points: int = 0
    active_cells: int = 0
    max_neighbors: int = 0
    compact_vertices: int = 0
    compact_edges: int = 0
    shift: ShiftChoice | None = None
    phases: list[PhaseStats] = Field(default_factory=list)
    ledger: LedgerReport = Field(default_factory=LedgerReport)
    matching: list[tuple[int, int]] = Field(default_factory=list, exclude=True)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def perfect(self) -> bool:
        return self.outcome == RungOutcome.PERFECT

    @computed_field  # type: ignore[prop-decorator]
    @property
    def weight_within_boundary(self) -> bool:
        """Every weight-1 edge has a boundary endpoint, so w never exceeds the boundary count."""
        return self.realized_weight <= self.boundary_points


class BottleneckResult(BaseModel):
    """Approximate bottleneck matching chosen across the ladder of guesses."""

    n: int
    epsilon: float
    r: int
    distance: float = Field(description="Realized bottleneck of the returned matching")
    delta: float = Field(description="Guess whose run produced the returned matching")
    matching: list[tuple[int, int]] = Field(default_factory=list)
    rungs: list[GeoRunStats] = Field(default_factory=list)
    oracle_distance: float | None = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def ratio(self) -> float | None:
        """Realized over optimal bottleneck, when the exact value is known."""
        if self.oracle_distance is None:
            return None
        if self.oracle_distance == 0:
            return 1.0 if self.distance == 0 else float("inf")
        return self.distance / self.oracle_distance

    @property
    def within_guarantee(self) -> bool:
        return self.ratio is None or self.ratio <= 1 + self.epsilon + 1e-9
