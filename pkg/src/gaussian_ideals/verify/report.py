from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from gaussian_ideals import __version__

SCHEMA_VERSION = "1"


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    BUDGET_EXCEEDED = "budget-exceeded"


VERDICTS = [v.value for v in Verdict]


def _combine(verdicts: list[Verdict]) -> Verdict:
    if any(v is Verdict.FAIL for v in verdicts):
        return Verdict.FAIL
    if any(v is Verdict.BUDGET_EXCEEDED for v in verdicts):
        return Verdict.BUDGET_EXCEEDED
    return Verdict.PASS


@dataclass(frozen=True)
class Claim:
    name: str
    statement: str
    verdict: Verdict
    detail: dict[str, Any] = field(default_factory=dict)
    exploratory: bool = False

    @classmethod
    def check(
        cls, name: str, statement: str, ok: bool, exploratory: bool = False, **detail: Any
    ) -> Claim:
        return cls(name, statement, Verdict.PASS if ok else Verdict.FAIL, detail, exploratory)

    @classmethod
    def budget_exceeded(cls, name: str, statement: str, reason: str, exploratory: bool = False) -> Claim:
        return cls(name, statement, Verdict.BUDGET_EXCEEDED, {"reason": reason}, exploratory)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "statement": self.statement,
            "verdict": self.verdict.value,
            "exploratory": self.exploratory,
            "detail": self.detail,
        }


@dataclass
class Scenario:
    name: str
    parameters: dict[str, Any]
    claims: list[Claim] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def status(self) -> Verdict:
        """Exploratory claims are reported but never decide the status."""
        return _combine([c.verdict for c in self.claims if not c.exploratory])

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "parameters": self.parameters,
            "status": self.status.value,
            "claims": [c.to_dict() for c in self.claims],
            "timings": {step: round(seconds, 6) for step, seconds in self.timings.items()},
        }


@dataclass
class Report:
    scenarios: list[Scenario] = field(default_factory=list)
    version: str = __version__

    @property
    def verdict(self) -> Verdict:
        return _combine([s.status for s in self.scenarios])

    def exit_code(self) -> int:
        return {Verdict.PASS: 0, Verdict.FAIL: 1, Verdict.BUDGET_EXCEEDED: 3}[self.verdict]

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "tool_version": self.version,
            "verdict": self.verdict.value,
            "scenarios": [s.to_dict() for s in self.scenarios],
        }


def report_schema() -> dict:
    claim = {
        "type": "object",
        "additionalProperties": False,
        "properties": {
            "name": {"type": "string"},
            "statement": {"type": "string"},
            "verdict": {"type": "string", "enum": VERDICTS},
            "exploratory": {"type": "boolean"},
            "detail": {"type": "object"},
        },
        "required": ["name", "statement", "verdict", "exploratory", "detail"],
    }
    scenario = {
        "type": "object",
        "additionalProperties": False,
        "properties": {
            "name": {"type": "string"},
            "parameters": {"type": "object"},
            "status": {"type": "string", "enum": VERDICTS},
            "claims": {"type": "array", "items": claim},
            "timings": {
                "type": "object",
                "additionalProperties": {"type": "number", "minimum": 0},
            },
        },
        "required": ["name", "parameters", "status", "claims", "timings"],
    }
    return {
        "name": "verification_report",
        "schema_version": SCHEMA_VERSION,
        "schema": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "schema_version": {"type": "string", "const": SCHEMA_VERSION},
                "tool_version": {"type": "string"},
                "verdict": {"type": "string", "enum": VERDICTS},
                "scenarios": {"type": "array", "items": scenario},
            },
            "required": ["schema_version", "tool_version", "verdict", "scenarios"],
        },
    }
