"""Three-valued certification results."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Status(str, Enum):
    CERTIFIED = "certified"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a bounded check.

    ``level`` is the homotopy level the statement is made up to; evidence
    is a JSON-ready dict describing the certificate, witness or exhausted
    budget.
    """

    status: Status
    level: int
    evidence: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def certified(cls, level: int, **evidence) -> "Verdict":
        return cls(Status.CERTIFIED, level, evidence)

    @classmethod
    def refuted(cls, level: int, **evidence) -> "Verdict":
        return cls(Status.REFUTED, level, evidence)

    @classmethod
    def inconclusive(cls, level: int, **evidence) -> "Verdict":
        return cls(Status.INCONCLUSIVE, level, evidence)

    @property
    def is_certified(self) -> bool:
        return self.status is Status.CERTIFIED

    @property
    def is_refuted(self) -> bool:
        return self.status is Status.REFUTED

    @property
    def is_inconclusive(self) -> bool:
        return self.status is Status.INCONCLUSIVE

    def to_dict(self) -> dict[str, Any]:
        return {"status": self.status.value, "level": self.level, "evidence": self.evidence}


def aggregate(verdicts, level: int, **evidence) -> Verdict:
    """Refuted dominates, then inconclusive; otherwise certified."""
    verdicts = list(verdicts)
    for status in (Status.REFUTED, Status.INCONCLUSIVE):
        if any(v.status is status for v in verdicts):
            return Verdict(status, level, evidence)
    return Verdict(Status.CERTIFIED, level, evidence)
