"""Machine-readable outcomes of lemma/theorem checks.

A failing report always carries a counterexample payload; sweeps count
hypothesis-met and vacuous instances separately so that a suite that never
fires a hypothesis is flagged rather than silently green.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    check: str
    passed: bool
    hypothesis_met: int = 0
    vacuous: int = 0
    details: dict = field(default_factory=dict)
    counterexample: dict | None = None

    def __post_init__(self) -> None:
        if not self.passed and not self.counterexample:
            raise ValueError("failing report requires a counterexample payload")

    @property
    def fired(self) -> bool:
        return self.hypothesis_met > 0

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Combine two partial results of the same check (associative;
        the first counterexample encountered is kept)."""
        if other.check != self.check:
            raise ValueError(f"cannot merge {self.check} with {other.check}")
        details = dict(self.details)
        for key, value in other.details.items():
            if isinstance(value, (int, float)) and isinstance(
                details.get(key, 0), (int, float)
            ):
                details[key] = details.get(key, 0) + value
            else:
                details.setdefault(key, value)
        return VerificationReport(
            check=self.check,
            passed=self.passed and other.passed,
            hypothesis_met=self.hypothesis_met + other.hypothesis_met,
            vacuous=self.vacuous + other.vacuous,
            details=details,
            counterexample=self.counterexample or other.counterexample,
        )

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "passed": self.passed,
            "hypothesis_met": self.hypothesis_met,
            "vacuous": self.vacuous,
            "details": self.details,
            "counterexample": self.counterexample,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        note = "" if self.fired else " (vacuous)"
        return (
            f"{status:4} {self.check}: met={self.hypothesis_met} "
            f"vacuous={self.vacuous}{note}"
        )


def merge_reports(reports: list[VerificationReport]) -> VerificationReport:
    if not reports:
        raise ValueError("nothing to merge")
    out = reports[0]
    for rep in reports[1:]:
        out = out.merge(rep)
    return out


def passing(check: str, met: int = 1, **details) -> VerificationReport:
    return VerificationReport(check, True, hypothesis_met=met, details=details)


def vacuous(check: str, **details) -> VerificationReport:
    return VerificationReport(check, True, vacuous=1, details=details)


def failing(check: str, counterexample: dict, met: int = 1, **details) -> VerificationReport:
    return VerificationReport(
        check, False, hypothesis_met=met, details=details, counterexample=counterexample
    )
