"""Shared verdict/report records used by the norm-chain and theorem checkers."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Verdict(str, enum.Enum):
    HOLDS = "Holds"
    VIOLATED = "Violated"
    NOT_APPLICABLE = "NotApplicable"
    REPORT_ONLY = "ReportOnly"


@dataclass(frozen=True)
class BoundEntry:
    theorem_id: str
    applicable: bool
    lhs: float | None
    rhs: float | None
    margin: float | None
    verdict: Verdict
    note: str = ""


@dataclass
class BoundReport:
    polynomial_id: str
    entries: list[BoundEntry] = field(default_factory=list)

    def extend(self, entries):
        self.entries.extend(entries)

    def violated(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.verdict is Verdict.VIOLATED]


def entry_from_inequality(theorem_id, lhs, rhs, slack=0.0, note="") -> BoundEntry:
    """Holds iff lhs <= rhs + slack; margin is rhs - lhs."""
    verdict = Verdict.HOLDS if lhs <= rhs + slack else Verdict.VIOLATED
    return BoundEntry(theorem_id, True, float(lhs), float(rhs), float(rhs - lhs), verdict, note)


def entry_not_applicable(theorem_id, note="") -> BoundEntry:
    return BoundEntry(theorem_id, False, None, None, None, Verdict.NOT_APPLICABLE, note)


def entry_report_only(theorem_id, lhs, rhs, note="") -> BoundEntry:
    lhs_f = None if lhs is None else float(lhs)
    rhs_f = None if rhs is None else float(rhs)
    margin = None if (lhs_f is None or rhs_f is None) else rhs_f - lhs_f
    return BoundEntry(theorem_id, True, lhs_f, rhs_f, margin, Verdict.REPORT_ONLY, note)
