"""Data models for the verify suite and the phase-count benchmark."""

import math
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field, computed_field


class VerifyCase(BaseModel):
    """One seeded instance checked against its oracle and the invariant suite."""

    index: int
    kind: Literal["graph", "points"]
    seed: int
    n_a: int
    n_b: int
    m: int | None = None
    weight_one_probability: float | None = None
    expected: float = Field(description="Oracle matching size, or exact bottleneck for points")
    observed: float = Field(description="Matcher size, or realized bottleneck for points")
    oracle_equal: bool
    phases: int = 0
    weight: int | None = None
    violations: list[str] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.oracle_equal and not self.violations


class VerifyReport(BaseModel):
    """Outcome of a verify run."""

    seed: int
    cases: list[VerifyCase] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def total(self) -> int:
        return len(self.cases)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def oracle_equal(self) -> int:
        return sum(1 for case in self.cases if case.oracle_equal)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def violation_count(self) -> int:
        return sum(len(case.violations) for case in self.cases)

    @property
    def ok(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> list[VerifyCase]:
        return [case for case in self.cases if not case.passed]

    def summary(self) -> str:
        return f"{self.oracle_equal}/{self.total} oracle-equal"


class BenchRow(BaseModel):
    """Phase counts of several seeded runs at one size."""

    n: int
    m: int
    trials: int
    phases: list[int] = Field(default_factory=list)
    weights: list[int] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def median_phases(self) -> float:
        return float(np.median(self.phases)) if self.phases else 0.0

    @computed_field  # type: ignore[prop-decorator]
    @property
    def median_weight(self) -> float:
        return float(np.median(self.weights)) if self.weights else 0.0

    @computed_field  # type: ignore[prop-decorator]
    @property
    def phases_per_sqrt_weight(self) -> float:
        return self.median_phases / math.sqrt(max(self.median_weight, 1.0))

    @computed_field  # type: ignore[prop-decorator]
    @property
    def within_bound(self) -> bool:
        """Every trial kept its phase count within 3 * ceil(sqrt(w))."""
        return all(
            lam <= 3 * math.ceil(math.sqrt(w))
            for lam, w in zip(self.phases, self.weights, strict=True)
        )


class BenchReport(BaseModel):
    """A size sweep with its growth-trend check."""

    seed: int
    weight_one_probability: float
    tolerance: float = 2.0
    rows: list[BenchRow] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def trend_ok(self) -> bool:
        """Median phases over sqrt(w) never exceeds tolerance times the smallest size's."""
        if not self.rows:
            return True
        first = self.rows[0]
        # a single phase at the smallest size is the floor
        base = max(first.phases_per_sqrt_weight, 1.0 / math.sqrt(max(first.median_weight, 1.0)))
        return all(row.phases_per_sqrt_weight <= self.tolerance * base for row in self.rows)

    @property
    def ok(self) -> bool:
        return self.trend_ok and all(row.within_bound for row in self.rows)
