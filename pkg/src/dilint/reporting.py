"""Report rendering: finding lists plus the per-project occurrence table.

All renderers are pure functions returning bytes; repeated rendering of
the same inputs is byte-identical.  The occurrence table always carries
all twelve rule keys, zero rows included.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .detectors import RULE_ORDER, Finding

__all__ = ["CorpusStats", "OccurrenceTable", "aggregate", "render", "parse_report_json", "FORMATS"]

FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class CorpusStats:
    total_files: int = 0
    total_classes: int = 0


@dataclass
class OccurrenceTable:
    project_label: str
    counts: dict[str, int] = field(default_factory=dict)
    total_files: int = 0
    total_classes: int = 0

    @property
    def total_findings(self) -> int:
        return sum(self.counts.values())


def aggregate(
    findings: list[Finding], project_label: str, corpus_stats: CorpusStats = CorpusStats()
) -> OccurrenceTable:
    """Per-rule occurrence counts for one run; every rule key is present."""
    counts = {rule_id: 0 for rule_id in RULE_ORDER}
    for finding in findings:
        counts[finding.rule_id] += 1
    return OccurrenceTable(
        project_label=project_label,
        counts=counts,
        total_files=corpus_stats.total_files,
        total_classes=corpus_stats.total_classes,
    )


def render(findings: list[Finding], table: OccurrenceTable, format: str) -> bytes:
    """Render the report as UTF-8 bytes in one of text, json, or csv."""
    if format == "text":
        return _render_text(findings, table)
    if format == "json":
        return _render_json(findings, table)
    if format == "csv":
        return _render_csv(findings)
    raise ValueError(f"unknown report format {format!r} (expected one of {', '.join(FORMATS)})")


def _render_text(findings: list[Finding], table: OccurrenceTable) -> bytes:
    lines = []
    for f in findings:
        lines.append(
            f"{f.rule_id} {f.file_path}:{f.source_line} {f.class_name} {f.element_name} "
            f"— {f.message}"
        )
    if lines:
        lines.append("")
    lines.append(
        f"project {table.project_label}: {table.total_findings} finding(s) in "
        f"{table.total_files} file(s), {table.total_classes} class(es)"
    )
    for rule_id in RULE_ORDER:
        lines.append(f"  {rule_id}  {table.counts.get(rule_id, 0)}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _finding_dict(f: Finding) -> dict:
    return {
        "rule": f.rule_id,
        "file": f.file_path,
        "line": f.source_line,
        "class": f.class_name,
        "element": f.element_name,
        "message": f.message,
    }


def _render_json(findings: list[Finding], table: OccurrenceTable) -> bytes:
    payload = {
        "schema_version": "1",
        "project": table.project_label,
        "total_files": table.total_files,
        "total_classes": table.total_classes,
        "counts": {rule_id: table.counts.get(rule_id, 0) for rule_id in RULE_ORDER},
        "findings": [_finding_dict(f) for f in findings],
    }
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def _render_csv(findings: list[Finding]) -> bytes:
    out = io.StringIO()
    writer = csv.writer(out, quoting=csv.QUOTE_MINIMAL)
    writer.writerow(["rule", "file", "line", "class", "element", "message"])
    for f in findings:
        writer.writerow(
            [f.rule_id, f.file_path, f.source_line, f.class_name, f.element_name, f.message]
        )
    return out.getvalue().encode("utf-8")


def parse_report_json(data: bytes) -> tuple[list[Finding], OccurrenceTable]:
    """Inverse of the json renderer; recovers every finding field."""
    payload = json.loads(data.decode("utf-8"))
    findings = [
        Finding(
            rule_id=item["rule"],
            file_path=item["file"],
            class_name=item["class"],
            element_name=item["element"],
            source_line=item["line"],
            message=item["message"],
        )
        for item in payload["findings"]
    ]
    table = OccurrenceTable(
        project_label=payload["project"],
        counts=dict(payload["counts"]),
        total_files=payload.get("total_files", 0),
        total_classes=payload.get("total_classes", 0),
    )
    return findings, table
