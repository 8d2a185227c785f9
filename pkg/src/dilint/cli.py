"""Command-line entry point.

Subcommands: ``analyze`` runs the detectors over a source tree (or a
repository URL, cloned via git) and writes a report; ``evaluate`` scores
the detectors against an oracle CSV; ``rules`` lists the rule catalog.

Exit codes: 0 clean, 1 findings present (analyze only), 2 usage or I/O
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path
from typing import Optional

from .detectors import RULE_ORDER, RULE_TITLES, ConfigError, RuleConfig, run_all
from .harness import (
    DEFAULT_EXCLUDES,
    OracleFormatError,
    evaluate,
    load_oracle,
    parse_tree,
)
from .reporting import FORMATS, CorpusStats, aggregate, render

__all__ = ["main", "run"]

CONFIG_ENV_VAR = "DILINT_CONFIG"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dilint",
        description="Detect dependency-injection anti-patterns in Java source trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze a source tree or repository URL")
    analyze.add_argument("root", help="directory of Java sources, or a git URL to clone")
    analyze.add_argument("--format", choices=FORMATS, default="text", help="report format")
    analyze.add_argument("--config", help="rule configuration file (key = value lines)")
    analyze.add_argument(
        "--rules", help="comma-separated rule ids to run (default: all twelve)"
    )
    analyze.add_argument(
        "--exclude",
        action="append",
        metavar="GLOB",
        help="path glob to skip; replaces the default excludes "
        f"({', '.join(DEFAULT_EXCLUDES)}); repeatable",
    )
    analyze.add_argument("--out", help="write the report to this file instead of stdout")
    analyze.add_argument("--label", help="project label for the occurrence table")
    analyze.add_argument(
        "--figure", help="also render the occurrence table as a chart to this image file"
    )

    evaluate_cmd = sub.add_parser("evaluate", help="score findings against an oracle CSV")
    evaluate_cmd.add_argument("root", help="directory of Java sources")
    evaluate_cmd.add_argument("--oracle", required=True, help="oracle CSV (file,class,element,rule)")
    evaluate_cmd.add_argument("--config", help="rule configuration file")

    sub.add_parser("rules", help="list the twelve rule ids")
    return parser


def _load_config(path_arg: Optional[str]) -> RuleConfig:
    path = path_arg or os.environ.get(CONFIG_ENV_VAR)
    if path:
        return RuleConfig.from_file(path)
    return RuleConfig()


def _looks_like_repo_url(root: str) -> bool:
    return root.startswith(("http://", "https://", "git://", "ssh://", "git@")) or root.endswith(
        ".git"
    )


def _clone_repository(url: str) -> Path:
    target = Path(tempfile.mkdtemp(prefix="dilint-clone-"))
    result = subprocess.run(
        ["git", "clone", "--depth", "1", url, str(target)],
        capture_output=True,
        text=True,
    )
    if result.returncode != 0:
        raise OSError(f"git clone failed for {url}: {result.stderr.strip()}")
    return target


def _cmd_analyze(args: argparse.Namespace) -> int:
    cfg = _load_config(args.config)
    if args.rules:
        requested = [r.strip().upper() for r in args.rules.split(",") if r.strip()]
        cfg = cfg.with_rules(requested)

    root = args.root
    if _looks_like_repo_url(root):
        root = _clone_repository(root)
    root = Path(root)

    excludes = tuple(args.exclude) if args.exclude else DEFAULT_EXCLUDES
    units = parse_tree(root, excludes)
    findings = run_all(units, cfg)
    stats = CorpusStats(
        total_files=len(units), total_classes=sum(len(u.type_decls) for u in units)
    )
    label = args.label or root.name or "project"
    table = aggregate(findings, label, stats)
    payload = render(findings, table, args.format)

    if args.out:
        Path(args.out).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()

    if args.figure:
        from .figures import render_occurrence_chart

        render_occurrence_chart(table, args.figure)

    return 1 if findings else 0


def _cmd_evaluate(args: argparse.Namespace) -> int:
    cfg = _load_config(args.config)
    oracle = load_oracle(args.oracle)
    units = parse_tree(Path(args.root))
    findings = run_all(units, cfg)
    result = evaluate(findings, oracle)
    print(json.dumps(result.to_dict(), indent=2))
    return 0


def _cmd_rules() -> int:
    for rule_id in RULE_ORDER:
        print(f"{rule_id} — {RULE_TITLES[rule_id]}")
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0

    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "evaluate":
            return _cmd_evaluate(args)
        return _cmd_rules()
    except (ConfigError, OracleFormatError, OSError, ValueError) as err:
        print(f"dilint: error: {err}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main(sys.argv[1:]))
