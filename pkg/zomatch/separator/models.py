"""Data models for separator-based weight assignment."""

from pydantic import BaseModel, Field, computed_field

from zomatch.core.graph import BipartiteGraph


class SeparatorStep(BaseModel):
    """One split of a vertex subset into two sides and the separator between them."""

    depth: int = 0
    vertices: list[int] = Field(default_factory=list)
    separator: list[int] = Field(default_factory=list)
    side_x: list[int] = Field(default_factory=list)
    side_y: list[int] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def balance(self) -> float:
        """Share of the subset taken by the larger side."""
        if not self.vertices:
            return 0.0
        return max(len(self.side_x), len(self.side_y)) / len(self.vertices)


class WeightAssignment(BaseModel):
    """Per-edge 0/1 weights produced by recursive separation, with the trace behind them."""

    r: int
    weights: list[int] = Field(default_factory=list)
    steps: list[SeparatorStep] = Field(default_factory=list)
    vertex_bound: float = Field(description="Largest piece vertex count allowed")
    edge_bound: float = Field(description="Largest piece edge count allowed")
    piece_count: int = 0
    max_piece_vertices: int = 0
    max_piece_edges: int = 0

    # Filled in by measure_weight
    realized_weight: int | None = None
    matching_size: int | None = None
    constant: float | None = Field(default=None, description="Measured c in w <= c * n / sqrt(r)")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def separator_vertices(self) -> int:
        return sum(len(step.separator) for step in self.steps)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def weight_one_edges(self) -> int:
        return sum(self.weights)

    @property
    def within_bounds(self) -> bool:
        return (
            self.max_piece_vertices <= self.vertex_bound
            and self.max_piece_edges <= self.edge_bound
        )

    def apply(self, graph: BipartiteGraph) -> BipartiteGraph:
        """The graph with this assignment's weights."""
        return graph.reweighted(self.weights)
