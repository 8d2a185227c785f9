"""Injection facts shared by the detection rules.

From a parsed class this module extracts the developer-declared injection
points, producer methods, container calls, and how each attribute is
referenced (read, passed along, returned, reassigned).  Identifier matching
respects shadowing: a parameter or local variable hides the same-named
field within its scope.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from .source_model import (
    ArrayAccess,
    ArrayCreation,
    ArrayInit,
    Assert,
    Assign,
    Binary,
    Block,
    BreakStatement,
    Cast,
    ClassModel,
    ContinueStatement,
    DoWhile,
    EmptyStatement,
    ExprStatement,
    FieldAccess,
    ForEach,
    ForLoop,
    Identifier,
    If,
    InstanceOf,
    Invocation,
    Labeled,
    Lambda,
    LocalTypeDecl,
    LocalVarDecl,
    MethodModel,
    MethodRef,
    Node,
    ObjectCreation,
    Return,
    SuperRef,
    Switch,
    Synchronized,
    Ternary,
    This,
    Throw,
    Try,
    Unary,
    Visibility,
    While,
    Yield,
    simple_type_name,
)

__all__ = [
    "InjectionForm",
    "InjectionAnnotation",
    "InjectionPoint",
    "ProducerMethod",
    "ReferenceSet",
    "ContainerCallKind",
    "ContainerCall",
    "CallSite",
    "ClassFacts",
    "find_injection_points",
    "find_producer_methods",
    "analyze_references",
    "find_container_calls",
    "gather_facts",
    "PRODUCER_ANNOTATIONS",
    "DEFAULT_CONTEXT_TYPE_NAMES",
]


PRODUCER_ANNOTATIONS = ("Produces", "Bean", "Provides")
DEFAULT_CONTEXT_TYPE_NAMES = ("ApplicationContext",)
_INJECT_ANNOTATIONS = ("Inject", "Autowired")


class InjectionForm(Enum):
    FIELD = "field"
    CONSTRUCTOR = "constructor"
    SETTER = "setter"


class InjectionAnnotation(Enum):
    JSR330_INJECT = "jsr330_inject"
    SPRING_AUTOWIRED = "spring_autowired"
    GUICE_INJECT_ALIAS = "guice_inject_alias"


@dataclass
class InjectionPoint:
    """One declared injection.  ``attribute_name`` is the field that ends up
    holding the instance; for constructor and setter forms it is the field
    assigned inside the annotated member.  ``declaring_member_name`` is the
    field, method, or constructor carrying the annotation."""

    owner: ClassModel
    attribute_name: str
    declared_type_name: str
    form: InjectionForm
    annotation: InjectionAnnotation
    annotation_name: str
    source_line: int
    declaring_member_name: str = ""


@dataclass
class ProducerMethod:
    owner: ClassModel
    method: MethodModel
    annotation_name: str


@dataclass
class ReferenceSet:
    """Everywhere one attribute is referenced within its class.

    Trivial one-statement getters and setters whose sites are recorded in
    ``returned_by_getter_sites`` / ``setter_assignment_sites`` do not count
    as reading methods; any method doing more than that does.
    """

    attribute_name: str
    reading_methods: set[str] = field(default_factory=set)
    passed_as_argument_sites: list[tuple[str, int]] = field(default_factory=list)
    returned_by_getter_sites: list[tuple[str, int]] = field(default_factory=list)
    setter_assignment_sites: list[tuple[str, int]] = field(default_factory=list)
    aliased_targets: set[str] = field(default_factory=set)
    externally_visible: bool = False
    # passes where the receiver is this/implicit this; kept separate so the
    # open-window rule can optionally include them
    same_class_pass_sites: list[tuple[str, int]] = field(default_factory=list)

    def is_empty(self) -> bool:
        return not (
            self.reading_methods
            or self.passed_as_argument_sites
            or self.returned_by_getter_sites
            or self.setter_assignment_sites
            or self.aliased_targets
            or self.same_class_pass_sites
        )


class ContainerCallKind(Enum):
    SPRING_GET_BEAN = "spring_get_bean"
    GUICE_GET_INSTANCE = "guice_get_instance"


@dataclass
class ContainerCall:
    owner: ClassModel
    method: str
    receiver_type_name: str
    call_kind: ContainerCallKind
    source_line: int
    enclosing_method: str = ""


@dataclass
class CallSite:
    """One method invocation with the receiver's declared type resolved.

    When the receiver identifier is not a known variable or field it is
    taken to be a type name (static call), recorded as the receiver type.
    ``result_used`` is true when the call's value is assigned to a variable
    or field or returned, directly or through a receiver chain.
    """

    enclosing_method: str
    invoked_name: str
    receiver_type_name: Optional[str]
    receiver_is_same_instance: bool
    line: int
    result_used: bool


# ---------------------------------------------------------------------------
# Per-method summaries
# ---------------------------------------------------------------------------


@dataclass
class _AssignEvent:
    target_name: str
    target_is_field_like: bool
    source_param: Optional[str]
    source_field_name: Optional[str]
    op: str
    line: int


@dataclass
class _MethodSummary:
    method: MethodModel
    reads: set[str] = field(default_factory=set)
    arg_passes: list[tuple[str, int, bool]] = field(default_factory=list)
    returns: list[tuple[str, int]] = field(default_factory=list)
    assigns: list[_AssignEvent] = field(default_factory=list)
    call_sites: list[CallSite] = field(default_factory=list)

    def single_statement(self) -> Optional[Node]:
        body = self.method.body_statements
        if body is not None and len(body.statements) == 1:
            return body.statements[0]
        return None


class _MethodWalker:
    def __init__(self, cls: ClassModel, method: MethodModel):
        self.cls = cls
        self.method = method
        self.summary = _MethodSummary(method=method)
        self.param_names = {p.name for p in method.parameters}
        self.scopes: list[dict[str, str]] = [
            {p.name: p.declared_type_name for p in method.parameters}
        ]

    # -- scope helpers --

    def _push(self) -> None:
        self.scopes.append({})

    def _pop(self) -> None:
        self.scopes.pop()

    def _declare(self, name: str, type_text: str) -> None:
        self.scopes[-1][name] = type_text

    def _lookup(self, name: str) -> Optional[tuple[int, str]]:
        for depth in range(len(self.scopes) - 1, -1, -1):
            if name in self.scopes[depth]:
                return depth, self.scopes[depth][name]
        return None

    def _is_shadowed(self, name: str) -> bool:
        return self._lookup(name) is not None

    def _resolves_to_param(self, name: str) -> bool:
        hit = self._lookup(name)
        return hit is not None and hit[0] == 0 and name in self.param_names

    # -- entry --

    def walk(self) -> _MethodSummary:
        body = self.method.body_statements
        if body is not None:
            self._visit_stmt(body)
        return self.summary

    # -- statements --

    def _visit_stmt(self, node: Node) -> None:
        if isinstance(node, Block):
            self._push()
            for stmt in node.statements:
                if isinstance(stmt, LocalVarDecl):
                    # whole-block shadowing: a simplification that can only
                    # hide reads, never invent them
                    for decl in stmt.declarators:
                        self._declare(decl.name, stmt.declared_type_name)
            for stmt in node.statements:
                self._visit_stmt(stmt)
            self._pop()
        elif isinstance(node, LocalVarDecl):
            for decl in stmt_declarators(node):
                self._declare(decl.name, node.declared_type_name)
                if decl.initializer is not None:
                    self._visit_expr(decl.initializer, used=True)
        elif isinstance(node, ExprStatement):
            self._visit_expr(node.expr, used=False)
        elif isinstance(node, If):
            self._visit_expr(node.condition, used=False)
            self._visit_stmt(node.then_branch)
            if node.else_branch is not None:
                self._visit_stmt(node.else_branch)
        elif isinstance(node, ForLoop):
            self._push()
            for init in node.init:
                if isinstance(init, LocalVarDecl):
                    self._visit_stmt(init)
                else:
                    self._visit_expr(init, used=False)
            if node.condition is not None:
                self._visit_expr(node.condition, used=False)
            for upd in node.update:
                self._visit_expr(upd, used=False)
            self._visit_stmt(node.body)
            self._pop()
        elif isinstance(node, ForEach):
            self._visit_expr(node.iterable, used=False)
            self._push()
            self._declare(node.var_name, node.var_type)
            self._visit_stmt(node.body)
            self._pop()
        elif isinstance(node, While):
            self._visit_expr(node.condition, used=False)
            self._visit_stmt(node.body)
        elif isinstance(node, DoWhile):
            self._visit_stmt(node.body)
            self._visit_expr(node.condition, used=False)
        elif isinstance(node, Switch):
            self._visit_expr(node.selector, used=False)
            for section in node.sections:
                for label in section.labels:
                    if label.expr is not None:
                        self._visit_expr(label.expr, used=False)
                for stmt in section.body:
                    self._visit_stmt(stmt)
        elif isinstance(node, Try):
            self._push()
            for res in node.resources:
                if isinstance(res, LocalVarDecl):
                    self._visit_stmt(res)
                else:
                    self._visit_expr(res, used=False)
            self._visit_stmt(node.body)
            for catch in node.catches:
                self._push()
                self._declare(catch.param_name, catch.param_type)
                self._visit_stmt(catch.body)
                self._pop()
            if node.finally_body is not None:
                self._visit_stmt(node.finally_body)
            self._pop()
        elif isinstance(node, Return):
            if node.value is not None:
                name = _plain_name(node.value)
                if name is not None and self._names_field(node.value, name):
                    self.summary.returns.append((name, node.line))
                self._visit_expr(node.value, used=True)
        elif isinstance(node, Throw):
            self._visit_expr(node.value, used=False)
        elif isinstance(node, Yield):
            self._visit_expr(node.value, used=True)
        elif isinstance(node, Labeled):
            self._visit_stmt(node.statement)
        elif isinstance(node, Synchronized):
            if node.monitor is not None:
                self._visit_expr(node.monitor, used=False)
            self._visit_stmt(node.body)
        elif isinstance(node, Assert):
            self._visit_expr(node.condition, used=False)
            if node.message is not None:
                self._visit_expr(node.message, used=False)
        elif isinstance(node, (BreakStatement, ContinueStatement, EmptyStatement, LocalTypeDecl)):
            pass
        elif isinstance(node, Node):
            # statement-position expression node from recovery
            self._visit_expr(node, used=False)

    # -- expressions --

    def _visit_expr(self, node: Optional[Node], used: bool) -> None:
        if node is None:
            return
        if isinstance(node, Identifier):
            if not self._is_shadowed(node.name):
                self.summary.reads.add(node.name)
            return
        if isinstance(node, FieldAccess):
            if isinstance(node.receiver, This):
                self.summary.reads.add(node.name)
                return
            self._visit_expr(node.receiver, used=used)
            return
        if isinstance(node, Invocation):
            self._record_call(node, used)
            return
        if isinstance(node, Assign):
            self._record_assign(node)
            return
        if isinstance(node, Cast):
            self._visit_expr(node.expr, used=used)
            return
        if isinstance(node, Ternary):
            self._visit_expr(node.condition, used=False)
            self._visit_expr(node.if_true, used=used)
            self._visit_expr(node.if_false, used=used)
            return
        if isinstance(node, Lambda):
            self._push()
            for param in node.params:
                self._declare(param, "")
            if isinstance(node.body, Block):
                self._visit_stmt(node.body)
            else:
                self._visit_expr(node.body, used=False)
            self._pop()
            return
        if isinstance(node, ObjectCreation):
            for arg in node.arguments:
                self._record_arg_pass(arg, node.line, same_instance=False)
                self._visit_expr(arg, used=False)
            return
        if isinstance(node, MethodRef):
            if node.target is not None:
                self._visit_expr(node.target, used=False)
            return
        if isinstance(node, (Binary, InstanceOf, Unary, ArrayAccess, ArrayCreation, ArrayInit, Switch)):
            if isinstance(node, Switch):
                self._visit_stmt(node)
                return
            for child in node.children():
                self._visit_expr(child, used=False)
            return
        if isinstance(node, (This, SuperRef)):
            return
        # literals, class literals and anything else carry no references
        for child in node.children():
            self._visit_expr(child, used=False)

    def _record_call(self, node: Invocation, used: bool) -> None:
        receiver_type, same_instance = self._receiver_info(node.receiver)
        self.summary.call_sites.append(
            CallSite(
                enclosing_method=self.method.name,
                invoked_name=node.name,
                receiver_type_name=receiver_type,
                receiver_is_same_instance=same_instance,
                line=node.line,
                result_used=used,
            )
        )
        if node.receiver is not None:
            self._visit_expr(node.receiver, used=used)
        for arg in node.arguments:
            self._record_arg_pass(arg, node.line, same_instance)
            self._visit_expr(arg, used=False)

    def _record_arg_pass(self, arg: Node, line: int, same_instance: bool) -> None:
        name = _plain_name(arg)
        if name is not None and self._names_field(arg, name):
            self.summary.arg_passes.append((name, line, same_instance))

    def _names_field(self, expr: Node, name: str) -> bool:
        """True when a plain-name expression refers to a field, i.e. it is a
        this-access or an unshadowed bare identifier."""
        top = _unwrap(expr)
        if isinstance(top, FieldAccess):
            return True  # _plain_name only accepts this.name accesses
        return not self._is_shadowed(name)

    def _record_assign(self, node: Assign) -> None:
        target = _unwrap(node.target)
        target_name = None
        target_field_like = False
        if isinstance(target, Identifier):
            target_name = target.name
            target_field_like = not self._is_shadowed(target.name)
        elif isinstance(target, FieldAccess) and isinstance(target.receiver, This):
            target_name = target.name
            target_field_like = True
        else:
            # complex target (array element, other object's field): the
            # subexpressions are ordinary reads
            self._visit_expr(target, used=False)

        if target_name is not None and node.op != "=":
            # compound assignment reads the target too
            if target_field_like:
                self.summary.reads.add(target_name)

        source = _unwrap(node.value)
        source_param = None
        source_field = None
        if isinstance(source, Identifier):
            if self._resolves_to_param(source.name):
                source_param = source.name
            elif not self._is_shadowed(source.name):
                source_field = source.name
        elif isinstance(source, FieldAccess) and isinstance(source.receiver, This):
            source_field = source.name

        if target_name is not None:
            self.summary.assigns.append(
                _AssignEvent(
                    target_name=target_name,
                    target_is_field_like=target_field_like,
                    source_param=source_param,
                    source_field_name=source_field,
                    op=node.op,
                    line=node.line,
                )
            )
        self._visit_expr(node.value, used=True)

    def _receiver_info(self, receiver: Optional[Node]) -> tuple[Optional[str], bool]:
        if receiver is None or isinstance(receiver, This):
            return self.cls.simple_name, True
        if isinstance(receiver, SuperRef):
            sup = self.cls.superclass_name
            return (simple_type_name(sup) if sup else None), True
        if isinstance(receiver, Cast):
            return simple_type_name(receiver.type_name) or None, False
        if isinstance(receiver, Identifier):
            hit = self._lookup(receiver.name)
            if hit is not None:
                declared = simple_type_name(hit[1])
                return declared or None, False
            fld = self.cls.field_named(receiver.name)
            if fld is not None:
                return simple_type_name(fld.declared_type_name) or None, False
            # not a known variable: treat the bare name as a type name
            return receiver.name, False
        if isinstance(receiver, FieldAccess) and isinstance(receiver.receiver, This):
            fld = self.cls.field_named(receiver.name)
            if fld is not None:
                return simple_type_name(fld.declared_type_name) or None, False
            return None, False
        if isinstance(receiver, ObjectCreation):
            return simple_type_name(receiver.type_name) or None, False
        return None, False


def stmt_declarators(node: LocalVarDecl):
    return node.declarators


def _unwrap(expr: Node) -> Node:
    while isinstance(expr, Cast):
        expr = expr.expr
    return expr


def _plain_name(expr: Node) -> Optional[str]:
    """Name of a (possibly cast) bare identifier or ``this.name`` access."""
    top = _unwrap(expr)
    if isinstance(top, Identifier):
        return top.name
    if isinstance(top, FieldAccess) and isinstance(top.receiver, This):
        return top.name
    return None


def summarize_class(cls: ClassModel) -> list[_MethodSummary]:
    """One summary per method or constructor with a body."""
    return [_MethodWalker(cls, m).walk() for m in cls.body_methods()]


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def _classify_annotation(ann) -> InjectionAnnotation:
    if ann.simple_name == "Autowired":
        return InjectionAnnotation.SPRING_AUTOWIRED
    qualifier = ann.arguments.get("__qualifier", "").lower()
    if "guice" in qualifier or "google" in qualifier:
        return InjectionAnnotation.GUICE_INJECT_ALIAS
    return InjectionAnnotation.JSR330_INJECT


def _first_recognized(annotations, recognized: Sequence[str]):
    for ann in annotations:
        if ann.simple_name in recognized:
            return ann
    return None


def _fields_assigned_from_param(
    summary: _MethodSummary, param_name: str
) -> list[str]:
    seen: list[str] = []
    for ev in summary.assigns:
        if ev.target_is_field_like and ev.source_param == param_name and ev.target_name not in seen:
            seen.append(ev.target_name)
    return seen


def _pick_setter_attribute(cls: ClassModel, param_name: str, assigned: list[str]) -> str:
    declared = [name for name in assigned if cls.field_named(name) is not None]
    pool = declared or assigned
    for name in pool:
        if name == param_name:
            return name
    return pool[0]


def find_injection_points(
    cls: ClassModel,
    *,
    recognize_resource: bool = False,
    summaries: Optional[list[_MethodSummary]] = None,
) -> list[InjectionPoint]:
    """All declared injections of a class, one per (attribute, form) pair.

    An attribute injected both through a field annotation and an annotated
    setter yields two entries.
    """
    recognized = list(_INJECT_ANNOTATIONS) + (["Resource"] if recognize_resource else [])
    if summaries is None:
        summaries = summarize_class(cls)
    by_method = {s.method.name: s for s in summaries}

    points: list[InjectionPoint] = []
    seen: set[tuple[str, InjectionForm]] = set()

    def add(attr: str, type_name: str, form: InjectionForm, ann, line: int, member: str) -> None:
        key = (attr, form)
        if key in seen:
            return
        seen.add(key)
        points.append(
            InjectionPoint(
                owner=cls,
                attribute_name=attr,
                declared_type_name=type_name,
                form=form,
                annotation=_classify_annotation(ann),
                annotation_name=ann.simple_name,
                source_line=line,
                declaring_member_name=member,
            )
        )

    for fld in cls.fields:
        ann = _first_recognized(fld.annotations, recognized)
        if ann is not None:
            add(fld.name, fld.declared_type_name, InjectionForm.FIELD, ann, fld.source_line, fld.name)

    for method in cls.methods:
        ann = _first_recognized(method.annotations, recognized)
        if ann is None or len(method.parameters) != 1 or not method.has_body:
            continue
        summary = by_method.get(method.name)
        if summary is None or summary.method is not method:
            summary = _MethodWalker(cls, method).walk()
        param = method.parameters[0]
        assigned = _fields_assigned_from_param(summary, param.name)
        if not assigned:
            continue
        attr = _pick_setter_attribute(cls, param.name, assigned)
        add(attr, param.declared_type_name, InjectionForm.SETTER, ann, method.source_span[0], method.name)

    for ctor in cls.constructors:
        ann = _first_recognized(ctor.annotations, recognized)
        if ann is None or not ctor.has_body:
            continue
        summary = _MethodWalker(cls, ctor).walk()
        for param in ctor.parameters:
            for attr in _fields_assigned_from_param(summary, param.name):
                add(attr, param.declared_type_name, InjectionForm.CONSTRUCTOR, ann, ctor.source_span[0], ctor.name)

    return points


def find_producer_methods(cls: ClassModel) -> list[ProducerMethod]:
    """Methods annotated as dependency producers (@Produces, @Bean,
    @Provides by simple name) with a non-void return type."""
    producers: list[ProducerMethod] = []
    for method in cls.methods:
        ann = _first_recognized(method.annotations, PRODUCER_ANNOTATIONS)
        if ann is None:
            continue
        if method.return_type_name in ("void", ""):
            continue
        producers.append(ProducerMethod(owner=cls, method=method, annotation_name=ann.simple_name))
    return producers


def analyze_references(
    cls: ClassModel,
    attribute_name: str,
    *,
    summaries: Optional[list[_MethodSummary]] = None,
) -> ReferenceSet:
    """Build the ReferenceSet of one attribute by walking every method body."""
    if summaries is None:
        summaries = summarize_class(cls)

    refs = ReferenceSet(attribute_name=attribute_name)
    fld = cls.field_named(attribute_name)
    if fld is not None:
        refs.externally_visible = fld.visibility in (Visibility.PUBLIC, Visibility.PROTECTED)

    for summary in summaries:
        method = summary.method
        method_public = method.visibility in (Visibility.PUBLIC, Visibility.PROTECTED)

        return_sites = [(method.name, line) for name, line in summary.returns if name == attribute_name]
        if method_public:
            refs.returned_by_getter_sites.extend(return_sites)

        setter_sites: list[tuple[str, int]] = []
        if method_public:
            for ev in summary.assigns:
                if (
                    ev.target_is_field_like
                    and ev.target_name == attribute_name
                    and ev.source_param is not None
                ):
                    setter_sites.append((method.name, ev.line))
            refs.setter_assignment_sites.extend(setter_sites)

        for name, line, same_instance in summary.arg_passes:
            if name != attribute_name:
                continue
            if same_instance:
                refs.same_class_pass_sites.append((method.name, line))
            else:
                refs.passed_as_argument_sites.append((method.name, line))

        # aliasing: the same injected value lands in several attributes
        for param in {p.name for p in method.parameters}:
            targets = [
                ev.target_name
                for ev in summary.assigns
                if ev.target_is_field_like and ev.source_param == param
            ]
            if attribute_name in targets:
                refs.aliased_targets.update(t for t in targets if t != attribute_name)
        for ev in summary.assigns:
            if (
                ev.target_is_field_like
                and ev.source_field_name == attribute_name
                and ev.target_name != attribute_name
            ):
                refs.aliased_targets.add(ev.target_name)

        if attribute_name in summary.reads and not _trivial_accessor_site(
            summary, attribute_name, bool(return_sites and method_public), bool(setter_sites)
        ):
            refs.reading_methods.add(method.name)

    return refs


def _trivial_accessor_site(
    summary: _MethodSummary, attribute_name: str, getter_recorded: bool, setter_recorded: bool
) -> bool:
    """True when the method body is exactly one return/assignment of the
    attribute and that site is already recorded in its dedicated list."""
    single = summary.single_statement()
    if single is None:
        return False
    if isinstance(single, Return) and getter_recorded:
        name = _plain_name(single.value) if single.value is not None else None
        return name == attribute_name
    if isinstance(single, ExprStatement) and isinstance(single.expr, Assign) and setter_recorded:
        target = _unwrap(single.expr.target)
        target_name = None
        if isinstance(target, Identifier):
            target_name = target.name
        elif isinstance(target, FieldAccess) and isinstance(target.receiver, This):
            target_name = target.name
        return target_name == attribute_name
    return False


def find_container_calls(
    cls: ClassModel,
    *,
    context_type_names: Sequence[str] = DEFAULT_CONTEXT_TYPE_NAMES,
    summaries: Optional[list[_MethodSummary]] = None,
) -> list[ContainerCall]:
    """Direct DI-container lookups: ``getBean`` on a Spring context and
    ``getInstance`` on a Guice Injector, one call per source line."""
    if summaries is None:
        summaries = summarize_class(cls)
    calls: list[ContainerCall] = []
    seen_lines: set[int] = set()
    for summary in summaries:
        for site in summary.call_sites:
            if site.receiver_type_name is None:
                continue
            if site.invoked_name == "getBean" and site.receiver_type_name in context_type_names:
                kind = ContainerCallKind.SPRING_GET_BEAN
            elif site.invoked_name == "getInstance" and site.receiver_type_name == "Injector":
                kind = ContainerCallKind.GUICE_GET_INSTANCE
            else:
                continue
            if site.line in seen_lines:
                continue
            seen_lines.add(site.line)
            calls.append(
                ContainerCall(
                    owner=cls,
                    method=site.invoked_name,
                    receiver_type_name=site.receiver_type_name,
                    call_kind=kind,
                    source_line=site.line,
                    enclosing_method=site.enclosing_method,
                )
            )
    return calls


# ---------------------------------------------------------------------------
# Bundled facts for the rule engine
# ---------------------------------------------------------------------------


@dataclass
class ClassFacts:
    cls: ClassModel
    injection_points: list[InjectionPoint]
    producer_methods: list[ProducerMethod]
    container_calls: list[ContainerCall]
    call_sites: list[CallSite]
    references: dict[str, ReferenceSet]
    annotated_setter_methods: set[str]

    def reference_set(self, attribute_name: str) -> ReferenceSet:
        if attribute_name not in self.references:
            self.references[attribute_name] = analyze_references(self.cls, attribute_name)
        return self.references[attribute_name]


def gather_facts(
    cls: ClassModel,
    *,
    recognize_resource: bool = False,
    context_type_names: Sequence[str] = DEFAULT_CONTEXT_TYPE_NAMES,
) -> ClassFacts:
    """Compute every shared fact the detectors consume, in one pass."""
    summaries = summarize_class(cls)
    points = find_injection_points(
        cls, recognize_resource=recognize_resource, summaries=summaries
    )
    attributes = {f.name for f in cls.fields} | {p.attribute_name for p in points}
    references = {
        attr: analyze_references(cls, attr, summaries=summaries) for attr in sorted(attributes)
    }
    annotated_setters = {
        p.declaring_member_name for p in points if p.form is InjectionForm.SETTER
    }
    return ClassFacts(
        cls=cls,
        injection_points=points,
        producer_methods=find_producer_methods(cls),
        container_calls=find_container_calls(
            cls, context_type_names=context_type_names, summaries=summaries
        ),
        call_sites=[site for s in summaries for site in s.call_sites],
        references=references,
        annotated_setter_methods=annotated_setters,
    )
