"""Structured residual records shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field, asdict

__all__ = ["Check", "Report"]


@dataclass
class Check:
    name: str
    residual: float
    threshold: float | None = None
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.threshold is None or self.residual < self.threshold


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)

    def add(self, check: Check) -> None:
        self.checks.append(check)

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)

    def worst(self) -> Check | None:
        return max(self.checks, key=lambda c: c.residual, default=None)

    def all_below(self, tol: float) -> bool:
        return all(c.residual < tol for c in self.checks)

    def records(self) -> list[dict]:
        return [asdict(c) | {"suite": self.suite, "pass": c.passed} for c in self.checks]

    def __len__(self) -> int:
        return len(self.checks)
