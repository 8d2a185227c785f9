"""McCabe cyclomatic complexity over the statement tree.

A method's complexity is 1 plus its decision points: if, for, for-each,
while, do, each case label (default excluded), each catch clause, each
ternary, and each short-circuit && / || operator.  Switch default and
finally blocks do not count.  Lambda bodies contribute their decision
points to the enclosing method.
"""

from __future__ import annotations

from dataclasses import dataclass

from .source_model import (
    Binary,
    CaseLabel,
    Catch,
    ClassModel,
    DoWhile,
    ForEach,
    ForLoop,
    If,
    MethodModel,
    Ternary,
    While,
    iter_tree,
)

__all__ = ["ComplexityRecord", "cyclomatic_complexity", "class_complexity_sum", "complexity_records"]


@dataclass
class ComplexityRecord:
    owner_class: str
    method_name: str
    cc: int


_DECISION_NODES = (If, ForLoop, ForEach, While, DoWhile, CaseLabel, Catch, Ternary)


def cyclomatic_complexity(method: MethodModel) -> int:
    """Complexity of one method with a body (1 for an empty body)."""
    if method.body_statements is None:
        raise ValueError(f"method {method.name} has no body")
    count = 1
    for node in iter_tree(method.body_statements):
        if isinstance(node, _DECISION_NODES):
            count += 1
        elif isinstance(node, Binary) and node.op in ("&&", "||"):
            count += 1
    return count


def class_complexity_sum(cls: ClassModel, include_constructors: bool = True) -> int:
    """Sum of cyclomatic complexity over all methods with bodies.

    Constructors are included by default; interfaces without default
    bodies sum to 0.
    """
    members = list(cls.methods) + (list(cls.constructors) if include_constructors else [])
    return sum(cyclomatic_complexity(m) for m in members if m.has_body)


def complexity_records(cls: ClassModel, include_constructors: bool = True) -> list[ComplexityRecord]:
    """Per-method complexity records; body-less methods have none."""
    members = list(cls.methods) + (list(cls.constructors) if include_constructors else [])
    return [
        ComplexityRecord(owner_class=cls.qualified_name, method_name=m.name, cc=cyclomatic_complexity(m))
        for m in members
        if m.has_body
    ]
