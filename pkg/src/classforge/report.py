"""Pass/fail reports shared by the verification entry points and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from numbers import Integral
from typing import Any


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class Verdict:
    claim: str
    status: Status
    detail: str = ""

    @classmethod
    def check(cls, claim: str, ok: bool, detail: str = "") -> "Verdict":
        return cls(claim, Status.PASS if ok else Status.FAIL, detail)

    def to_dict(self) -> dict[str, str]:
        return {"claim": self.claim, "status": self.status.value, "detail": self.detail}


@dataclass
class Report:
    subject: str
    verdicts: list[Verdict] = field(default_factory=list)
    conclusion: str | None = None
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v.status is not Status.FAIL for v in self.verdicts)

    def status_of(self, claim: str) -> Status:
        for v in self.verdicts:
            if v.claim == claim:
                return v.status
        raise KeyError(claim)

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "conclusion": self.conclusion,
            "data": jsonable(self.data),
        }


def jsonable(value: Any) -> Any:
    """Integers become decimal strings; containers are converted recursively."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Integral):
        return str(int(value))
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return value
