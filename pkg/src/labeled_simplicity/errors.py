from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .graph import ValidationReport


class GraphError(ValueError):
    """Base class for graph input and scope failures."""


class GraphParseError(GraphError):
    def __init__(self, message: str, line_no: int | None = None) -> None:
        self.line_no = line_no
        self.message = message
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{prefix}{message}")


class OutsideTheoremScopeError(GraphError):
    def __init__(self, report: ValidationReport) -> None:
        self.report = report
        super().__init__(f"outside theorem scope ({report.scope_message()})")


class CapExceededError(ValueError):
    def __init__(self, cap_name: str, limit: int, observed: int | None = None) -> None:
        self.cap_name = cap_name
        self.limit = limit
        self.observed = observed
        detail = f" (observed {observed})" if observed is not None else ""
        super().__init__(f"{cap_name} exceeded: limit={limit}{detail}")
