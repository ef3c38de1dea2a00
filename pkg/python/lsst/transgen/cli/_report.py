"""Tabular reports and their text, JSON and CSV encodings."""

from __future__ import annotations

__all__ = (
    "SCHEMA",
    "Report",
    "certificate_report",
    "emit_report",
    "exceptional_table_report",
    "mersenne_table_report",
    "smooth_table_report",
    "sweep_report",
    "values_report",
)

import csv
import io
import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

from ..config import OutputFormat
from ..engine import Certificate, DegreeRecord
from ..mersenne import MersenneTriple
from ..sweeps import SweepReport
from ..tables import degree_expr

SCHEMA = "transgen/1"
"""Version tag carried by every JSON document."""


@dataclass(frozen=True)
class Report:
    """Rows with a fixed column order, plus document-level fields."""

    kind: str
    columns: tuple[str, ...]
    rows: Sequence[Mapping[str, Any]]
    meta: Mapping[str, Any] = field(default_factory=dict)

    json_lines: bool = False
    """Encode JSON as one document per row."""


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(item) for item in value)
    return str(value)


def _text(report: Report) -> str:
    lines = [f"{key}: {_cell(value)}" for key, value in report.meta.items()]
    if report.rows:
        cells = [[_cell(row.get(column)) for column in report.columns] for row in report.rows]
        widths = [
            max(len(column), *(len(row[i]) for row in cells)) for i, column in enumerate(report.columns)
        ]

        def join(items: Iterable[str]) -> str:
            return "  ".join(item.ljust(width) for item, width in zip(items, widths)).rstrip()

        if lines:
            lines.append("")
        lines.append(join(report.columns))
        lines.append(join("-" * width for width in widths))
        lines.extend(join(row) for row in cells)
    return "\n".join(lines) + "\n"


def _csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow([_cell(row.get(column)) for column in report.columns])
    return buffer.getvalue()


def _json(report: Report) -> str:
    if report.json_lines:
        return "".join(
            json.dumps({"schema": SCHEMA, "kind": report.kind, **row}, sort_keys=True, default=str) + "\n"
            for row in report.rows
        )
    document = {"schema": SCHEMA, "kind": report.kind, **report.meta, "rows": list(report.rows)}
    return json.dumps(document, indent=2, default=str) + "\n"


def emit_report(report: Report, output_format: OutputFormat | str) -> bytes:
    """Encode a report.

    Raises
    ------
    ValueError
        Raised for an unknown format.
    """
    match OutputFormat(output_format):
        case OutputFormat.TEXT:
            text = _text(report)
        case OutputFormat.JSON:
            text = _json(report)
        case OutputFormat.CSV:
            text = _csv(report)
    return text.encode("utf-8")


def smooth_table_report(records: Iterable[DegreeRecord]) -> Report:
    rows = [
        {
            "d_expr": record.d_expr,
            "d": record.d,
            "bound": record.bound,
            "paper_bound": record.printed,
            "delta": record.delta,
        }
        for record in records
    ]
    return Report("smooth-table", ("d_expr", "d", "bound", "paper_bound", "delta"), rows)


def exceptional_table_report(records: Iterable[DegreeRecord]) -> Report:
    rows = [
        {
            "d_expr": record.d_expr,
            "d": record.d,
            "f": record.f,
            "bound": record.bound,
            "paper_f": record.printed_f,
            "paper_bound": record.printed,
            "delta": record.delta,
        }
        for record in records
    ]
    return Report(
        "exceptional-table", ("d_expr", "d", "f", "bound", "paper_f", "paper_bound", "delta"), rows
    )


def mersenne_table_report(
    regenerated: Mapping[int, Sequence[MersenneTriple]], printed: Mapping[int, Sequence[MersenneTriple]]
) -> Report:
    rows = [
        {
            "n": n,
            "d_expr": degree_expr(n),
            "triples": [str(triple) for triple in triples],
            "matches": tuple(triples) == tuple(printed.get(n, ())),
        }
        for n, triples in sorted(regenerated.items())
    ]
    return Report("mersenne-table", ("n", "d_expr", "triples", "matches"), rows)


def certificate_report(certificate: Certificate) -> Report:
    worst = {id(case) for case in certificate.worst}
    rows = [
        {
            "case": case.case_id,
            "parameters": " ".join(f"{key}={value}" for key, value in case.parameters.items()),
            "value": case.value,
            "target": case.target,
            "status": case.status.value,
            "worst": id(case) in worst,
            "attaining": list(case.attaining),
            "note": case.note,
        }
        for case in certificate.cases
    ]
    meta = {
        "d": certificate.d,
        "d_expr": certificate.d_expr,
        "class": certificate.degree_class.value,
        "target": certificate.target,
        "f": certificate.f,
        "verdict": certificate.verdict.value,
        "worst_value": certificate.worst_value,
    }
    return Report(
        "certificate",
        ("case", "parameters", "value", "target", "status", "worst", "attaining", "note"),
        rows,
        meta,
    )


def sweep_report(reports: Iterable[SweepReport]) -> Report:
    rows = [report.to_dict() for report in reports]
    return Report(
        "sweep",
        (
            "case_id",
            "status",
            "threshold",
            "verified_range",
            "points",
            "failure_count",
            "first_failure_below",
            "note",
        ),
        rows,
        json_lines=True,
    )


def values_report(kind: str, values: Mapping[str, Any]) -> Report:
    """A single-record report of named values."""
    return Report(kind, tuple(values), [dict(values)])
