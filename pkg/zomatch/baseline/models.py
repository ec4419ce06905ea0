"""Data models for the baseline oracles."""

from pydantic import BaseModel, Field, computed_field, model_validator


class OracleResult(BaseModel):
    """Exact maximum matching with an optional König vertex cover."""

    matching: list[tuple[int, int]] = Field(default_factory=list)
    certificate: list[int] | None = Field(
        default=None,
        description="Vertex cover in unified ids (B-vertex j is n_a + j)",
    )
    n_a: int = Field(default=0, ge=0, description="A-side size, for unified B ids")
    edges: list[tuple[int, int]] = Field(
        default_factory=list,
        exclude=True,
        description="(A-index, B-index) pairs the certificate must cover",
    )

    @computed_field  # type: ignore[prop-decorator]
    @property
    def matching_size(self) -> int:
        return len(self.matching)

    @model_validator(mode="after")
    def validate_matching(self) -> "OracleResult":
        a_side = [a for a, _ in self.matching]
        b_side = [b for _, b in self.matching]
        if len(set(a_side)) != len(a_side) or len(set(b_side)) != len(b_side):
            raise ValueError("Matching is not vertex-disjoint")
        if self.certificate is not None and len(self.certificate) != len(self.matching):
            raise ValueError(
                f"Cover of size {len(self.certificate)} does not certify "
                f"a matching of size {len(self.matching)}"
            )
        if self.certificate is not None:
            cover = set(self.certificate)
            uncovered = [
                (a, b) for a, b in self.edges if a not in cover and self.n_a + b not in cover
            ]
            if uncovered:
                raise ValueError(f"Cover misses {len(uncovered)} edges, first {uncovered[0]}")
        return self


class BottleneckOracleResult(BaseModel):
    """Exact bottleneck distance with a witness perfect matching."""

    distance: float
    squared_distance: float
    matching: list[tuple[int, int]] = Field(default_factory=list)
