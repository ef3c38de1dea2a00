"""Sweep reports and their JSON-lines form."""

from __future__ import annotations

__all__ = ("SweepReport", "SweepStatus", "merge_reports", "to_json_lines")

import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

MAX_RECORDED_FAILURES = 20
"""Failures kept per report; the count is always exact."""


class SweepStatus(str, Enum):
    VERIFIED = "verified"
    FAILED = "failed"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class SweepReport:
    """Outcome of checking one inequality over a set of integers."""

    case_id: str
    """Stable identifier, for example ``"m5-i"``."""

    inequality: tuple[str, str]
    """Left- and right-hand sides, printed at the first tested point."""

    threshold: int | None
    """Claimed threshold ``N0``; `None` for checks without one."""

    verified_range: tuple[int, int] | None
    """Smallest and largest integer tested."""

    points: int = 0
    """Number of integers tested."""

    failures: tuple[int, ...] = ()
    """The first failing integers, in testing order."""

    failure_count: int = 0

    first_failure_below: int | None = None
    """Largest failing integer below the threshold, when scanned."""

    status: SweepStatus = SweepStatus.VERIFIED
    note: str = ""

    details: Mapping[str, Any] = field(default_factory=dict)
    """Check-specific values, for example per-``m`` results."""

    @classmethod
    def from_failures(
        cls,
        case_id: str,
        inequality: tuple[str, str],
        threshold: int | None,
        tested: Iterable[int],
        failures: Iterable[int],
        **kwargs: Any,
    ) -> SweepReport:
        """Build a report whose status follows from the failures."""
        tested = list(tested)
        failures = list(failures)
        return cls(
            case_id=case_id,
            inequality=inequality,
            threshold=threshold,
            verified_range=(min(tested), max(tested)) if tested else None,
            points=len(tested),
            failures=tuple(failures[:MAX_RECORDED_FAILURES]),
            failure_count=len(failures),
            status=SweepStatus.FAILED if failures else SweepStatus.VERIFIED,
            **kwargs,
        )

    @classmethod
    def skipped(cls, case_id: str, note: str, threshold: int | None = None) -> SweepReport:
        return cls(
            case_id=case_id,
            inequality=("", ""),
            threshold=threshold,
            verified_range=None,
            status=SweepStatus.SKIPPED,
            note=note,
        )

    @property
    def verified(self) -> bool:
        return self.status is SweepStatus.VERIFIED

    def to_dict(self) -> dict[str, Any]:
        return {
            "case_id": self.case_id,
            "lhs": self.inequality[0],
            "rhs": self.inequality[1],
            "threshold": self.threshold,
            "verified_range": list(self.verified_range) if self.verified_range else None,
            "points": self.points,
            "failures": list(self.failures),
            "failure_count": self.failure_count,
            "first_failure_below": self.first_failure_below,
            "status": self.status.value,
            "note": self.note,
            "details": dict(self.details),
        }


def merge_reports(reports: Iterable[SweepReport]) -> list[SweepReport]:
    """Reports in case-id order; equal ids keep their order."""
    return sorted(reports, key=lambda report: report.case_id)


def to_json_lines(reports: Iterable[SweepReport]) -> str:
    """One canonical JSON document per line."""
    return "".join(
        json.dumps(report.to_dict(), sort_keys=True, separators=(",", ":"), default=str) + "\n"
        for report in reports
    )
