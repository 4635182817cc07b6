"""Exception types and the small report record shared by the verification checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class GuardExceeded(RuntimeError):
    """A computation would exceed a configured desk-scale bound."""


class ConsistencyError(ArithmeticError):
    """An exact identity that must hold did not (an implementation bug signal)."""


class FitError(RuntimeError):
    """No quasipolynomial with period <= max_period reproduced the samples."""


@dataclass
class Report:
    """Outcome of one verification check.

    ``details`` carries the numbers the check compared; ``witness`` holds the
    first failing input when ``passed`` is false.
    """

    name: str
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)
    witness: Any = None

    def __bool__(self) -> bool:
        return self.passed

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  witness={self.witness}" if self.witness is not None else ""
        return f"[{status}] {self.name}{extra}"
