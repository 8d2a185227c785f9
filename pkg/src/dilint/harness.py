"""Source-tree walking plus precision/recall evaluation against a
hand-built oracle of known anti-pattern instances."""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .detectors import RULE_ORDER, Finding
from .source_model import SourceUnit, parse_unit

__all__ = [
    "DEFAULT_EXCLUDES",
    "OracleEntry",
    "OracleFormatError",
    "EvalResult",
    "collect_sources",
    "read_source",
    "parse_tree",
    "load_oracle",
    "evaluate",
]

DEFAULT_EXCLUDES = ("**/test/**", "**/generated/**")


@dataclass(frozen=True)
class OracleEntry:
    file_path: str
    class_name: str
    element_name: str
    rule_id: str


class OracleFormatError(ValueError):
    """Raised for malformed oracle files, naming the offending line."""


@dataclass
class EvalResult:
    """Per-rule true/false positives against the oracle, overall relative
    recall, and the average precision over rules that reported anything."""

    per_rule: dict[str, tuple[int, int, int]] = field(default_factory=dict)
    relative_recall: float = 1.0
    average_precision: float = 1.0
    matched: int = 0
    oracle_total: int = 0

    def to_dict(self) -> dict:
        return {
            "relative_recall": round(self.relative_recall, 6),
            "average_precision": round(self.average_precision, 6),
            "matched": self.matched,
            "oracle_total": self.oracle_total,
            "per_rule": {
                rule_id: {
                    "true_positives": tp,
                    "false_positives": fp,
                    "oracle_total": total,
                }
                for rule_id, (tp, fp, total) in self.per_rule.items()
            },
        }


def _glob_to_regex(pattern: str) -> re.Pattern:
    """Translate a glob with '**' recursive-wildcard semantics to a regex
    over '/'-separated relative paths."""
    out = []
    i = 0
    n = len(pattern)
    while i < n:
        ch = pattern[i]
        if ch == "*":
            if pattern.startswith("**/", i):
                out.append(r"(?:.*/)?")
                i += 3
                continue
            if pattern.startswith("**", i):
                out.append(r".*")
                i += 2
                continue
            out.append(r"[^/]*")
            i += 1
            continue
        if ch == "?":
            out.append(r"[^/]")
            i += 1
            continue
        if ch == "/" and pattern.startswith("/**", i) and i + 3 >= n:
            out.append(r"(?:/.*)?")
            i += 3
            continue
        out.append(re.escape(ch))
        i += 1
    return re.compile("^" + "".join(out) + "$")


def collect_sources(
    root: str | Path, exclude_globs: Iterable[str] = DEFAULT_EXCLUDES
) -> list[str]:
    """All .java files under root as sorted '/'-separated relative paths,
    minus the excluded globs."""
    root = Path(root)
    if not root.is_dir():
        raise OSError(f"source root is not a readable directory: {root}")
    patterns = [_glob_to_regex(glob) for glob in exclude_globs]
    found = []
    for path in root.rglob("*.java"):
        if not path.is_file():
            continue
        rel = path.relative_to(root).as_posix()
        if any(p.match(rel) for p in patterns):
            continue
        found.append(rel)
    return sorted(found)


def read_source(path: str | Path) -> str:
    """Read a source file as UTF-8, skipping a BOM; undecodable bytes are
    replaced rather than failing the run."""
    data = Path(path).read_bytes()
    return data.decode("utf-8-sig", errors="replace")


def parse_tree(
    root: str | Path, exclude_globs: Iterable[str] = DEFAULT_EXCLUDES
) -> list[SourceUnit]:
    """Collect and parse a source tree; unit paths are root-relative."""
    root = Path(root)
    return [
        parse_unit(read_source(root / rel), rel) for rel in collect_sources(root, exclude_globs)
    ]


def load_oracle(path: str | Path) -> list[OracleEntry]:
    """Parse a `file,class,element,rule` oracle CSV."""
    entries: list[OracleEntry] = []
    try:
        text = Path(path).read_text(encoding="utf-8-sig")
    except OSError as err:
        raise OracleFormatError(f"cannot read oracle file {path}: {err.strerror}") from err
    reader = csv.reader(text.splitlines())
    for lineno, row in enumerate(reader, start=1):
        if lineno == 1:
            if [cell.strip() for cell in row] != ["file", "class", "element", "rule"]:
                raise OracleFormatError(
                    f"line 1: expected header 'file,class,element,rule', got {','.join(row)!r}"
                )
            continue
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 4:
            raise OracleFormatError(f"line {lineno}: expected 4 columns, got {len(row)}")
        file_path, class_name, element, rule_id = (cell.strip() for cell in row)
        if rule_id not in RULE_ORDER:
            raise OracleFormatError(f"line {lineno}: unknown rule {rule_id!r}")
        entries.append(OracleEntry(file_path, class_name, element, rule_id))
    seen = set()
    unique = []
    for entry in entries:
        if entry not in seen:
            seen.add(entry)
            unique.append(entry)
    return unique


def evaluate(findings: list[Finding], oracle: list[OracleEntry]) -> EvalResult:
    """Match findings to oracle entries on (file, class, element, rule).

    Lines are ignored: the oracle has class/element granularity.  Each
    oracle entry matches at most one finding and vice versa.  Precision is
    scoped to classes the oracle mentions; findings in classes outside the
    oracle do not count against it.  An empty oracle yields recall 1.0 by
    convention.
    """
    oracle_keys: dict[tuple, int] = {}
    for entry in oracle:
        key = (entry.file_path, entry.class_name, entry.element_name, entry.rule_id)
        oracle_keys[key] = oracle_keys.get(key, 0) + 1
    covered_classes = {(entry.file_path, entry.class_name) for entry in oracle}

    per_rule: dict[str, list[int]] = {rule_id: [0, 0, 0] for rule_id in RULE_ORDER}
    for entry in oracle:
        per_rule[entry.rule_id][2] += 1

    matched = 0
    for finding in findings:
        key = (finding.file_path, finding.class_name, finding.element_name, finding.rule_id)
        if oracle_keys.get(key, 0) > 0:
            oracle_keys[key] -= 1
            per_rule[finding.rule_id][0] += 1
            matched += 1
        elif (finding.file_path, finding.class_name) in covered_classes:
            per_rule[finding.rule_id][1] += 1

    oracle_total = len(oracle)
    recall = matched / oracle_total if oracle_total else 1.0
    precisions = [
        tp / (tp + fp) for tp, fp, _ in per_rule.values() if (tp + fp) > 0
    ]
    average_precision = sum(precisions) / len(precisions) if precisions else 1.0
    return EvalResult(
        per_rule={rule_id: tuple(vals) for rule_id, vals in per_rule.items()},
        relative_recall=recall,
        average_precision=average_precision,
        matched=matched,
        oracle_total=oracle_total,
    )
