"""dilint: static detection of dependency-injection anti-patterns in Java."""

from .detectors import RULE_ORDER, RULE_TITLES, Finding, RuleConfig, run_all
from .harness import EvalResult, OracleEntry, collect_sources, evaluate, load_oracle, parse_tree
from .injection import (
    ContainerCall,
    InjectionForm,
    InjectionPoint,
    ProducerMethod,
    ReferenceSet,
    analyze_references,
    find_container_calls,
    find_injection_points,
    find_producer_methods,
)
from .metrics import class_complexity_sum, cyclomatic_complexity
from .reporting import CorpusStats, OccurrenceTable, aggregate, render
from .source_model import (
    ClassModel,
    ResolvedKind,
    SourceUnit,
    TypeIndex,
    index_corpus,
    parse_unit,
    resolve_type_kind,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "RULE_ORDER",
    "RULE_TITLES",
    "Finding",
    "RuleConfig",
    "run_all",
    "EvalResult",
    "OracleEntry",
    "collect_sources",
    "evaluate",
    "load_oracle",
    "parse_tree",
    "ContainerCall",
    "InjectionForm",
    "InjectionPoint",
    "ProducerMethod",
    "ReferenceSet",
    "analyze_references",
    "find_container_calls",
    "find_injection_points",
    "find_producer_methods",
    "class_complexity_sum",
    "cyclomatic_complexity",
    "CorpusStats",
    "OccurrenceTable",
    "aggregate",
    "render",
    "ClassModel",
    "ResolvedKind",
    "SourceUnit",
    "TypeIndex",
    "index_corpus",
    "parse_unit",
    "resolve_type_kind",
]
