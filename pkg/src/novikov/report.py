"""Verdict objects returned by every checker."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple


class Violation(NamedTuple):
    """One failing instance of an identity.

    ``i, j, k`` are basis indices (for module axioms ``k`` is the equation
    number); ``residual`` is the nonzero left-minus-right value.
    """

    i: Any
    j: Any
    k: Any
    residual: Any
    law: str = ""


@dataclass
class LawReport:
    law: str
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    checked: int = 0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed

    def merge(self, *others: "LawReport", law: str | None = None) -> "LawReport":
        out = LawReport(
            law or self.law, list(self.violations), list(self.notes), self.checked, dict(self.details)
        )
        for other in others:
            out.violations.extend(other.violations)
            out.notes.extend(other.notes)
            out.checked += other.checked
            out.details.update(other.details)
        return out

    def summary(self) -> str:
        verdict = "PASS" if self.passed else f"FAIL ({len(self.violations)} violations)"
        return f"{self.law}: {verdict}"
