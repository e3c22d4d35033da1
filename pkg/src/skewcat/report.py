"""Violation reports shared by every validator."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    detail: str = ""

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "witness": [str(w) for w in self.witness], "detail": self.detail}

    def __str__(self):
        w = ", ".join(str(x) for x in self.witness)
        s = f"{self.axiom} [{w}]"
        return f"{s}: {self.detail}" if self.detail else s


@dataclass
class Report:
    subject: str
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom: str, *witness, detail: str = "") -> None:
        self.violations.append(Violation(axiom, tuple(witness), detail))

    def extend(self, other: "Report", prefix: str = "") -> None:
        for v in other.violations:
            self.violations.append(Violation(prefix + v.axiom, v.witness, v.detail))

    def axioms(self) -> set:
        return {v.axiom for v in self.violations}

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "status": "ok" if self.ok else "violations",
            "violations": [v.to_json() for v in self.violations],
        }

    def __str__(self):
        if self.ok:
            return f"{self.subject}: ok"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines += [f"  - {v}" for v in self.violations]
        return "\n".join(lines)


class ValidationError(ValueError):
    """Raised when a construction is refused because its input failed validation."""

    def __init__(self, report: Report):
        super().__init__(str(report))
        self.report = report
