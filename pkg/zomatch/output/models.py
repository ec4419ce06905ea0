"""Self-describing stats records written by the command line."""

import math
from typing import Literal

from pydantic import BaseModel, Field, computed_field

from zomatch.geo.models import BottleneckResult, GeoRunStats
from zomatch.matcher.models import MatchResult, PhaseStats
from zomatch.separator.models import WeightAssignment

SCHEMA_VERSION = "zomatch.stats/1"


class InstanceDescriptor(BaseModel):
    """Where an instance came from and how big it is."""

    kind: Literal["graph", "points"]
    source: str | None = Field(default=None, description="Input path, or None when generated")
    n_a: int
    n_b: int
    m: int | None = None
    weights: str | None = Field(default=None, description="'file', 'separator:<r>' or None")


class StatsRecord(BaseModel):
    """One run, serialized for acceptance runs and benchmarking."""

    schema_version: Literal["zomatch.stats/1"] = SCHEMA_VERSION
    instance: InstanceDescriptor
    algorithm: Literal["zero-one", "geo-bottleneck"]
    seed: int | None = None
    matching_size: int
    weight: int | None = Field(default=None, description="Realized matching weight w")
    total_phases: int = 0
    total_affected: int = 0
    sum_path_weights: int = 0
    wall_time_seconds: float | None = None
    ledger_violations: list[str] = Field(default_factory=list)
    phases: list[PhaseStats] = Field(default_factory=list)

    # Separator-weighted graphs
    separator_r: int | None = None
    separator_constant: float | None = None

    # Bottleneck runs
    epsilon: float | None = None
    r: int | None = None
    bottleneck: float | None = None
    delta: float | None = None
    oracle_bottleneck: float | None = None
    ratio: float | None = None
    rungs: list[GeoRunStats] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def phase_bound(self) -> int | None:
        """3 * ceil(sqrt(w)), the phase-count bound for this run."""
        if self.weight is None:
            return None
        return 3 * math.ceil(math.sqrt(self.weight))

    @classmethod
    def from_match(
        cls,
        result: MatchResult,
        instance: InstanceDescriptor,
        seed: int | None = None,
        wall_time: float | None = None,
        assignment: WeightAssignment | None = None,
    ) -> "StatsRecord":
        return cls(
            instance=instance,
            algorithm="zero-one",
            seed=seed,
            matching_size=result.size,
            weight=result.weight,
            total_phases=result.total_phases,
            total_affected=result.total_affected,
            sum_path_weights=result.sum_path_weights,
            wall_time_seconds=wall_time,
            ledger_violations=result.ledger.violations,
            phases=result.phases,
            separator_r=assignment.r if assignment else None,
            separator_constant=assignment.constant if assignment else None,
        )

    @classmethod
    def from_bottleneck(
        cls,
        result: BottleneckResult,
        instance: InstanceDescriptor,
        seed: int | None = None,
        wall_time: float | None = None,
    ) -> "StatsRecord":
        # rung matchings are excluded from dumps; drop them so reloads compare equal
        rungs = [rung.model_copy(update={"matching": []}) for rung in result.rungs]
        return cls(
            instance=instance,
            algorithm="geo-bottleneck",
            seed=seed,
            matching_size=len(result.matching),
            total_phases=sum(rung.total_phases for rung in rungs),
            total_affected=sum(rung.total_affected for rung in rungs),
            sum_path_weights=sum(rung.sum_path_weights for rung in rungs),
            wall_time_seconds=wall_time,
            ledger_violations=[v for rung in rungs for v in rung.ledger.violations],
            epsilon=result.epsilon,
            r=result.r,
            bottleneck=result.distance,
            delta=result.delta,
            oracle_bottleneck=result.oracle_distance,
            ratio=result.ratio,
            rungs=rungs,
        )
