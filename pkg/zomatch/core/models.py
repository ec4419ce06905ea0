"""Core diagnostic records."""

from pydantic import BaseModel, Field


class FeasibilityViolation(BaseModel):
    """An edge whose duals break the feasibility conditions."""

    edge: int
    a: int
    b: int
    weight: int
    matched: bool
    dual_a: int
    dual_b: int
    condition: str = Field(description="Human-readable statement of the violated condition")

    def __str__(self) -> str:
        return (
            f"edge {self.edge} (a={self.a}, b={self.b}, c={self.weight}): {self.condition} "
            f"[y(a)={self.dual_a}, y(b)={self.dual_b}]"
        )
