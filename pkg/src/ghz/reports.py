"""Small verdict/witness containers shared by the checking modules."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """A verdict with human-readable violations and informational notes."""

    subject: str
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    trust_markers: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, message: str):
        self.violations.append(message)

    def note(self, message: str):
        self.notes.append(message)

    def trust(self, message: str):
        if message not in self.trust_markers:
            self.trust_markers.append(message)

    def merge(self, other: "Report"):
        self.violations.extend(other.violations)
        self.notes.extend(other.notes)
        for t in other.trust_markers:
            self.trust(t)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "violations": list(self.violations),
            "notes": list(self.notes),
            "trust_markers": list(self.trust_markers),
        }

    def summary(self) -> str:
        lines = [f"{self.subject}: {'ok' if self.ok else 'FAILED'}"]
        lines.extend(f"  violation: {v}" for v in self.violations)
        lines.extend(f"  note: {n}" for n in self.notes)
        lines.extend(f"  trusted: {t}" for t in self.trust_markers)
        return "\n".join(lines)
