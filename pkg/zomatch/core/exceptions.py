"""Custom exceptions for zomatch."""

from typing import Any


class ZomatchError(Exception):
    """Base exception for all zomatch errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.details:
            return f"{self.message} | Details: {self.details}"
        return self.message


class InputError(ZomatchError):
    """Raised when a graph, point set or parameter is rejected at ingestion."""

    def __init__(
        self,
        message: str,
        edge: tuple[int, ...] | None = None,
        reason: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        self.edge = edge
        self.reason = reason
        super().__init__(
            message,
            details={
                **(details or {}),
                "edge": edge,
                "reason": reason,
            },
        )


class FormatError(InputError):
    """Raised when an instance file cannot be parsed."""

    def __init__(
        self,
        message: str,
        path: str | None = None,
        line_number: int | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        self.path = path
        self.line_number = line_number
        super().__init__(
            message,
            details={
                **(details or {}),
                "path": path,
                "line": line_number,
            },
        )


class SizeMismatchError(InputError):
    """Raised when a bottleneck instance has |A| != |B|."""

    def __init__(
        self,
        n_a: int,
        n_b: int,
        details: dict[str, Any] | None = None,
    ) -> None:
        self.n_a = n_a
        self.n_b = n_b
        super().__init__(
            f"Bottleneck matching needs |A| = |B|, got {n_a} and {n_b}",
            reason="size mismatch",
            details={**(details or {}), "n_a": n_a, "n_b": n_b},
        )


class InvariantViolation(ZomatchError):
    """Raised when an internal invariant of a matcher run fails."""

    def __init__(
        self,
        message: str,
        invariant: str | None = None,
        context: dict[str, Any] | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        self.invariant = invariant
        self.context = context or {}
        super().__init__(
            message,
            details={
                **(details or {}),
                "invariant": invariant,
                **self.context,
            },
        )


class SeparatorError(InvariantViolation):
    """Raised when a separator step is not a balanced separation."""

    pass


class UnsupportedFamilyError(ZomatchError):
    """Raised when a graph lacks the structure a separator needs."""

    pass
