"""Structural model of Java source files.

Converts Java source text into a language-neutral model (classes, fields,
methods, statement trees) that the analysis layers consume.  The parser
covers the Java subset needed for dependency-injection analysis: type
declarations, members, annotations, and method bodies down to the level of
decision points, identifier reads, invocations, and assignments.  Generic
type arguments are kept as opaque text and lambdas are opaque expressions
whose bodies still contribute nodes.

Parsing is total: any byte sequence yields a SourceUnit, with skipped
regions recorded as diagnostics instead of raised errors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

__all__ = [
    "TypeKind",
    "Visibility",
    "ResolvedKind",
    "AnnotationUse",
    "Parameter",
    "FieldModel",
    "MethodModel",
    "ClassModel",
    "SourceUnit",
    "TypeIndex",
    "parse_unit",
    "index_corpus",
    "resolve_type_kind",
    "iter_tree",
    "base_type_name",
    "simple_type_name",
]


# ---------------------------------------------------------------------------
# Model types
# ---------------------------------------------------------------------------


class TypeKind(Enum):
    CLASS = "class"
    INTERFACE = "interface"
    ABSTRACT_CLASS = "abstract_class"
    ENUM = "enum"
    ANNOTATION_DECL = "annotation_decl"


class Visibility(Enum):
    PUBLIC = "public"
    PROTECTED = "protected"
    PACKAGE = "package"
    PRIVATE = "private"


class ResolvedKind(Enum):
    """Result of resolving a type name against a corpus index."""

    INTERFACE = "interface"
    ABSTRACT = "abstract"
    CONCRETE = "concrete"
    UNKNOWN = "unknown"


@dataclass
class AnnotationUse:
    """One annotation occurrence, e.g. ``@Inject`` or ``@Bean(name = "x")``.

    ``simple_name`` never carries the ``@`` prefix or a package qualifier;
    a qualifier, when written, is preserved under the ``__qualifier`` key
    of ``arguments``.  A lone positional argument is stored under ``value``.
    """

    simple_name: str
    arguments: dict[str, str] = field(default_factory=dict)
    source_line: int = 0


@dataclass
class Parameter:
    name: str
    declared_type_name: str


@dataclass
class FieldModel:
    name: str
    declared_type_name: str
    annotations: list[AnnotationUse] = field(default_factory=list)
    visibility: Visibility = Visibility.PACKAGE
    is_static: bool = False
    source_line: int = 0


@dataclass
class MethodModel:
    name: str
    parameters: list[Parameter] = field(default_factory=list)
    annotations: list[AnnotationUse] = field(default_factory=list)
    visibility: Visibility = Visibility.PACKAGE
    return_type_name: str = "void"
    body_statements: Optional["Block"] = None
    source_span: tuple[int, int] = (0, 0)
    is_static: bool = False
    is_abstract: bool = False

    @property
    def has_body(self) -> bool:
        return self.body_statements is not None


@dataclass
class ClassModel:
    """One declared type.  Nested and anonymous types are separate models
    with synthesized qualified names (``Outer.Inner``, ``Outer$anon1``)."""

    qualified_name: str
    kind: TypeKind
    superclass_name: Optional[str] = None
    interface_names: list[str] = field(default_factory=list)
    annotations: list[AnnotationUse] = field(default_factory=list)
    fields: list[FieldModel] = field(default_factory=list)
    methods: list[MethodModel] = field(default_factory=list)
    constructors: list[MethodModel] = field(default_factory=list)
    source_span: tuple[int, int] = (0, 0)

    @property
    def simple_name(self) -> str:
        tail = self.qualified_name.rsplit(".", 1)[-1]
        return tail.rsplit("$", 1)[-1] if "$" in tail else tail

    def field_named(self, name: str) -> Optional[FieldModel]:
        for f in self.fields:
            if f.name == name:
                return f
        return None

    def body_methods(self) -> list[MethodModel]:
        """Methods and constructors that carry a statement tree."""
        return [m for m in list(self.methods) + list(self.constructors) if m.has_body]


@dataclass
class SourceUnit:
    """Parse result for one file.  ``type_decls`` lists every declared type
    in source order, outer types before their nested/anonymous types."""

    file_path: str
    package_name: str = ""
    type_decls: list[ClassModel] = field(default_factory=list)
    parse_diagnostics: list[tuple[int, str]] = field(default_factory=list)


# ---------------------------------------------------------------------------
# Statement / expression tree
# ---------------------------------------------------------------------------


@dataclass
class Node:
    line: int

    def children(self) -> Iterator["Node"]:
        return iter(())


def _present(*nodes) -> Iterator[Node]:
    for n in nodes:
        if isinstance(n, Node):
            yield n
        elif isinstance(n, (list, tuple)):
            for sub in n:
                if isinstance(sub, Node):
                    yield sub


# -- statements --


@dataclass
class Block(Node):
    statements: list[Node] = field(default_factory=list)

    def children(self):
        return _present(self.statements)


@dataclass
class If(Node):
    condition: Node = None
    then_branch: Node = None
    else_branch: Optional[Node] = None

    def children(self):
        return _present(self.condition, self.then_branch, self.else_branch)


@dataclass
class ForLoop(Node):
    init: list[Node] = field(default_factory=list)
    condition: Optional[Node] = None
    update: list[Node] = field(default_factory=list)
    body: Node = None

    def children(self):
        return _present(self.init, self.condition, self.update, self.body)


@dataclass
class ForEach(Node):
    var_name: str = ""
    var_type: str = ""
    iterable: Node = None
    body: Node = None

    def children(self):
        return _present(self.iterable, self.body)


@dataclass
class While(Node):
    condition: Node = None
    body: Node = None

    def children(self):
        return _present(self.condition, self.body)


@dataclass
class DoWhile(Node):
    body: Node = None
    condition: Node = None

    def children(self):
        return _present(self.body, self.condition)


@dataclass
class CaseLabel(Node):
    """One non-default label of a switch section; each is a decision point."""

    expr: Optional[Node] = None

    def children(self):
        return _present(self.expr)


@dataclass
class SwitchSection(Node):
    labels: list[CaseLabel] = field(default_factory=list)
    is_default: bool = False
    body: list[Node] = field(default_factory=list)

    def children(self):
        return _present(self.labels, self.body)


@dataclass
class Switch(Node):
    selector: Node = None
    sections: list[SwitchSection] = field(default_factory=list)

    def children(self):
        return _present(self.selector, self.sections)


@dataclass
class Catch(Node):
    param_name: str = ""
    param_type: str = ""
    body: Node = None

    def children(self):
        return _present(self.body)


@dataclass
class Try(Node):
    resources: list[Node] = field(default_factory=list)
    body: Node = None
    catches: list[Catch] = field(default_factory=list)
    finally_body: Optional[Node] = None

    def children(self):
        return _present(self.resources, self.body, self.catches, self.finally_body)


@dataclass
class Return(Node):
    value: Optional[Node] = None

    def children(self):
        return _present(self.value)


@dataclass
class Throw(Node):
    value: Node = None

    def children(self):
        return _present(self.value)


@dataclass
class ExprStatement(Node):
    expr: Node = None

    def children(self):
        return _present(self.expr)


@dataclass
class VarDeclarator(Node):
    name: str = ""
    initializer: Optional[Node] = None

    def children(self):
        return _present(self.initializer)


@dataclass
class LocalVarDecl(Node):
    declared_type_name: str = ""
    declarators: list[VarDeclarator] = field(default_factory=list)

    def children(self):
        return _present(self.declarators)


@dataclass
class Labeled(Node):
    label: str = ""
    statement: Node = None

    def children(self):
        return _present(self.statement)


@dataclass
class Synchronized(Node):
    monitor: Optional[Node] = None
    body: Node = None

    def children(self):
        return _present(self.monitor, self.body)


@dataclass
class Assert(Node):
    condition: Node = None
    message: Optional[Node] = None

    def children(self):
        return _present(self.condition, self.message)


@dataclass
class BreakStatement(Node):
    pass


@dataclass
class ContinueStatement(Node):
    pass


@dataclass
class EmptyStatement(Node):
    pass


@dataclass
class Yield(Node):
    value: Node = None

    def children(self):
        return _present(self.value)


@dataclass
class LocalTypeDecl(Node):
    qualified_name: str = ""


# -- expressions --


@dataclass
class Assign(Node):
    target: Node = None
    value: Node = None
    op: str = "="

    def children(self):
        return _present(self.target, self.value)


@dataclass
class Ternary(Node):
    condition: Node = None
    if_true: Node = None
    if_false: Node = None

    def children(self):
        return _present(self.condition, self.if_true, self.if_false)


@dataclass
class Binary(Node):
    op: str = ""
    left: Node = None
    right: Node = None

    def children(self):
        return _present(self.left, self.right)


@dataclass
class Unary(Node):
    op: str = ""
    operand: Node = None

    def children(self):
        return _present(self.operand)


@dataclass
class InstanceOf(Node):
    operand: Node = None
    type_name: str = ""
    binding: Optional[str] = None

    def children(self):
        return _present(self.operand)


@dataclass
class Invocation(Node):
    receiver: Optional[Node] = None
    name: str = ""
    arguments: list[Node] = field(default_factory=list)

    def children(self):
        return _present(self.receiver, self.arguments)


@dataclass
class FieldAccess(Node):
    receiver: Node = None
    name: str = ""

    def children(self):
        return _present(self.receiver)


@dataclass
class Identifier(Node):
    name: str = ""


@dataclass
class This(Node):
    pass


@dataclass
class SuperRef(Node):
    pass


@dataclass
class Literal(Node):
    kind: str = ""  # string | char | number | boolean | null
    text: str = ""


@dataclass
class ObjectCreation(Node):
    type_name: str = ""
    arguments: list[Node] = field(default_factory=list)
    anonymous_class: Optional[str] = None  # qualified name when a body is given

    def children(self):
        return _present(self.arguments)


@dataclass
class ArrayCreation(Node):
    type_name: str = ""
    dimensions: list[Node] = field(default_factory=list)
    initializer: Optional[Node] = None

    def children(self):
        return _present(self.dimensions, self.initializer)


@dataclass
class ArrayInit(Node):
    elements: list[Node] = field(default_factory=list)

    def children(self):
        return _present(self.elements)


@dataclass
class ArrayAccess(Node):
    array: Node = None
    index: Node = None

    def children(self):
        return _present(self.array, self.index)


@dataclass
class Cast(Node):
    type_name: str = ""
    expr: Node = None

    def children(self):
        return _present(self.expr)


@dataclass
class Lambda(Node):
    params: list[str] = field(default_factory=list)
    body: Node = None  # expression or Block

    def children(self):
        return _present(self.body)


@dataclass
class MethodRef(Node):
    target_text: str = ""
    name: str = ""
    target: Optional[Node] = None

    def children(self):
        return _present(self.target)


@dataclass
class ClassLiteral(Node):
    type_name: str = ""


def iter_tree(root: Optional[Node]) -> Iterator[Node]:
    """Depth-first pre-order walk over a statement/expression tree."""
    if root is None:
        return
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(list(node.children())))


# ---------------------------------------------------------------------------
# Type name helpers
# ---------------------------------------------------------------------------


def base_type_name(type_text: str) -> str:
    """Strip generic arguments, array brackets, varargs and annotations from
    a textual type, leaving the (possibly dotted) base name."""
    t = type_text.strip()
    while t.startswith("@"):
        # drop one leading annotation token (name plus optional arg list)
        i = 1
        while i < len(t) and (t[i].isalnum() or t[i] in "._$"):
            i += 1
        if i < len(t) and t[i] == "(":
            depth = 0
            while i < len(t):
                if t[i] == "(":
                    depth += 1
                elif t[i] == ")":
                    depth -= 1
                    if depth == 0:
                        i += 1
                        break
                i += 1
        t = t[i:].lstrip()
    angle = t.find("<")
    if angle != -1:
        t = t[:angle]
    return t.replace("[]", "").replace("...", "").strip()


def simple_type_name(type_text: str) -> str:
    """Last dotted segment of the stripped base type."""
    return base_type_name(type_text).rsplit(".", 1)[-1]


# ---------------------------------------------------------------------------
# Type index over a corpus
# ---------------------------------------------------------------------------


@dataclass
class TypeIndex:
    by_qualified_name: dict[str, ClassModel] = field(default_factory=dict)
    by_simple_name: dict[str, ClassModel] = field(default_factory=dict)
    ambiguous_simple_names: set[str] = field(default_factory=set)
    duplicate_qualified_names: list[str] = field(default_factory=list)

    def lookup(self, name: str) -> Optional[ClassModel]:
        """Resolve a qualified or simple name; ambiguous simple names miss."""
        if name in self.by_qualified_name:
            return self.by_qualified_name[name]
        if name in self.ambiguous_simple_names:
            return None
        return self.by_simple_name.get(name)


def index_corpus(units: list[SourceUnit]) -> TypeIndex:
    """Build the corpus-wide type index.

    Qualified-name duplicates keep the first occurrence and are recorded;
    simple names declared by more than one type become ambiguous and no
    longer resolve by simple name.
    """
    index = TypeIndex()
    for unit in units:
        for cls in unit.type_decls:
            if cls.qualified_name in index.by_qualified_name:
                index.duplicate_qualified_names.append(cls.qualified_name)
                continue
            index.by_qualified_name[cls.qualified_name] = cls
            simple = cls.simple_name
            if simple in index.ambiguous_simple_names:
                continue
            if simple in index.by_simple_name and index.by_simple_name[simple] is not cls:
                del index.by_simple_name[simple]
                index.ambiguous_simple_names.add(simple)
            else:
                index.by_simple_name[simple] = cls
    return index


_PRIMITIVES = {"boolean", "byte", "char", "short", "int", "long", "float", "double", "void", "var"}


def resolve_type_kind(type_name: str, index: TypeIndex) -> ResolvedKind:
    """Classify a declared type name against the corpus index.

    Generic arguments and array brackets are stripped first.  Names that do
    not resolve (external types, primitives, ambiguous simple names) are
    UNKNOWN.
    """
    base = base_type_name(type_name)
    if not base or base in _PRIMITIVES:
        return ResolvedKind.UNKNOWN
    cls = index.lookup(base)
    if cls is None and "." in base:
        cls = index.lookup(base.rsplit(".", 1)[-1])
    if cls is None:
        return ResolvedKind.UNKNOWN
    if cls.kind in (TypeKind.INTERFACE, TypeKind.ANNOTATION_DECL):
        return ResolvedKind.INTERFACE
    if cls.kind is TypeKind.ABSTRACT_CLASS:
        return ResolvedKind.ABSTRACT
    return ResolvedKind.CONCRETE


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------


@dataclass
class Token:
    kind: str  # ident | num | str | char | punct | eof
    text: str
    line: int
    col: int


_TWO_CHAR_PUNCT = (
    "->", "::", "&&", "||", "++", "--", "==", "!=", "<=", ">=",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
)
# '>' and '<' are always emitted as single tokens so that generic argument
# lists tokenize cleanly; shifts are reassembled from adjacency when parsing.


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch in "_$"


def _is_ident_part(ch: str) -> bool:
    return ch.isalnum() or ch in "_$"


def tokenize(text: str) -> list[Token]:
    """Tokenize Java source.  Never raises; unrecognized characters become
    single-character punct tokens."""
    tokens: list[Token] = []
    i = 0
    line = 1
    col = 1
    n = len(text)

    def push(kind: str, tok_text: str, tok_line: int, tok_col: int) -> None:
        tokens.append(Token(kind, tok_text, tok_line, tok_col))

    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r\f\v":
            i += 1
            col += 1
            continue
        # comments
        if ch == "/" and i + 1 < n:
            nxt = text[i + 1]
            if nxt == "/":
                j = text.find("\n", i)
                if j == -1:
                    break
                col += j - i
                i = j
                continue
            if nxt == "*":
                j = text.find("*/", i + 2)
                if j == -1:
                    break  # unterminated comment swallows the rest
                line += text.count("\n", i, j)
                i = j + 2
                col = 1
                continue
        # text blocks and string literals
        if ch == '"':
            start_line, start_col = line, col
            if text.startswith('"""', i):
                j = text.find('"""', i + 3)
                j = n if j == -1 else j + 3
                line += text.count("\n", i, j)
                push("str", text[i:j], start_line, start_col)
                i = j
                col = 1
                continue
            j = i + 1
            while j < n:
                if text[j] == "\\":
                    j += 2
                    continue
                if text[j] == '"' or text[j] == "\n":
                    break
                j += 1
            j = min(j + 1, n)
            push("str", text[i:j], start_line, start_col)
            col += j - i
            i = j
            continue
        if ch == "'":
            start_col = col
            j = i + 1
            while j < n:
                if text[j] == "\\":
                    j += 2
                    continue
                if text[j] == "'" or text[j] == "\n":
                    break
                j += 1
            j = min(j + 1, n)
            push("char", text[i:j], line, start_col)
            col += j - i
            i = j
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            start_col = col
            j = i + 1
            while j < n:
                c = text[j]
                if c.isalnum() or c in "._":
                    j += 1
                elif c in "+-" and text[j - 1] in "eEpP":
                    j += 1
                else:
                    break
            push("num", text[i:j], line, start_col)
            col += j - i
            i = j
            continue
        if _is_ident_start(ch):
            start_col = col
            j = i + 1
            while j < n and _is_ident_part(text[j]):
                j += 1
            push("ident", text[i:j], line, start_col)
            col += j - i
            i = j
            continue
        if text.startswith("...", i):
            push("punct", "...", line, col)
            i += 3
            col += 3
            continue
        two = text[i : i + 2]
        if two in _TWO_CHAR_PUNCT:
            push("punct", two, line, col)
            i += 2
            col += 2
            continue
        push("punct", ch, line, col)
        i += 1
        col += 1

    tokens.append(Token("eof", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _ParseError(Exception):
    def __init__(self, line: int, message: str):
        super().__init__(message)
        self.line = line
        self.message = message


_MODIFIERS = {
    "public", "protected", "private", "static", "final", "abstract",
    "synchronized", "native", "transient", "volatile", "strictfp",
    "default", "sealed",
}

_TYPE_DECL_KEYWORDS = {"class", "interface", "enum", "record"}

_MAX_EXPR_DEPTH = 150

# tokens that may legally appear inside a generic argument list
_ANGLE_OK_PUNCT = {"<", ">", ",", ".", "?", "[", "]", "&", "@", "(", ")"}


class _Parser:
    def __init__(self, tokens: list[Token], package_name: str):
        self.toks = tokens
        self.pos = 0
        self.package = package_name
        self.diagnostics: list[tuple[int, str]] = []
        self.types: list[ClassModel] = []
        self._anon_counts: dict[str, int] = {}
        self._expr_depth = 0
        self._cls_stack: list[ClassModel] = []

    # -- token helpers --

    def peek(self, offset: int = 0) -> Token:
        idx = min(self.pos + offset, len(self.toks) - 1)
        return self.toks[idx]

    def at_end(self) -> bool:
        return self.peek().kind == "eof"

    def advance(self) -> Token:
        tok = self.toks[self.pos]
        if self.pos < len(self.toks) - 1:
            self.pos += 1
        return tok

    def match_punct(self, text: str) -> bool:
        tok = self.peek()
        if tok.kind == "punct" and tok.text == text:
            self.advance()
            return True
        return False

    def match_ident(self, text: str) -> bool:
        tok = self.peek()
        if tok.kind == "ident" and tok.text == text:
            self.advance()
            return True
        return False

    def expect_punct(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind == "punct" and tok.text == text:
            return self.advance()
        raise _ParseError(tok.line, f"expected '{text}', found '{tok.text or '<eof>'}'")

    def expect_ident(self) -> Token:
        tok = self.peek()
        if tok.kind == "ident":
            return self.advance()
        raise _ParseError(tok.line, f"expected identifier, found '{tok.text or '<eof>'}'")

    def diag(self, line: int, message: str) -> None:
        self.diagnostics.append((line, message))

    def _adjacent(self, a: Token, b: Token) -> bool:
        return a.line == b.line and a.col + len(a.text) == b.col

    # -- recovery --

    def skip_balanced_braces(self) -> None:
        """Consume a brace-balanced region starting at the next '{'."""
        depth = 0
        while not self.at_end():
            tok = self.advance()
            if tok.kind == "punct":
                if tok.text == "{":
                    depth += 1
                elif tok.text == "}":
                    depth -= 1
                    if depth <= 0:
                        return

    _MEMBER_START_HINTS = _MODIFIERS | _TYPE_DECL_KEYWORDS | {"void"}

    def sync_member(self) -> None:
        """After a member-level error, skip to something that can start the
        next member, leaving a closing '}' for the enclosing body."""
        depth = 0
        first = True
        while not self.at_end():
            tok = self.peek()
            if tok.kind == "punct":
                if tok.text == ";" and depth == 0:
                    self.advance()
                    return
                if tok.text == "{":
                    depth += 1
                elif tok.text == "}":
                    if depth == 0:
                        return
                    depth -= 1
                    if depth == 0:
                        self.advance()
                        return
                elif tok.text == "@" and depth == 0 and not first:
                    return
            elif tok.kind == "ident" and depth == 0 and not first and tok.text in self._MEMBER_START_HINTS:
                return
            self.advance()
            first = False

    # -- compilation unit --

    def parse_compilation_unit(self) -> None:
        while not self.at_end():
            start = self.pos
            tok = self.peek()
            try:
                if tok.kind == "ident" and tok.text == "import":
                    while not self.at_end() and not self.match_punct(";"):
                        self.advance()
                    continue
                if tok.kind == "punct" and tok.text == ";":
                    self.advance()
                    continue
                self.parse_type_decl(enclosing=None)
            except _ParseError as err:
                self.diag(err.line, f"skipped declaration: {err.message}")
                self.sync_member()
            except RecursionError:
                self.diag(tok.line, "skipped declaration: nesting too deep")
                self.sync_member()
            if self.pos == start:  # always make progress
                bad = self.advance()
                if bad.kind != "eof":
                    self.diag(bad.line, f"unexpected token '{bad.text}'")

    # -- annotations and modifiers --

    def parse_annotation(self) -> AnnotationUse:
        at = self.expect_punct("@")
        name_parts = [self.expect_ident().text]
        while self.peek().kind == "punct" and self.peek().text == "." and self.peek(1).kind == "ident":
            self.advance()
            name_parts.append(self.advance().text)
        arguments: dict[str, str] = {}
        if len(name_parts) > 1:
            arguments["__qualifier"] = ".".join(name_parts[:-1])
        if self.peek().kind == "punct" and self.peek().text == "(":
            arguments.update(self._parse_annotation_arguments())
        return AnnotationUse(simple_name=name_parts[-1], arguments=arguments, source_line=at.line)

    def _parse_annotation_arguments(self) -> dict[str, str]:
        args: dict[str, str] = {}
        self.expect_punct("(")
        depth = 1
        current_key: Optional[str] = None
        buf: list[str] = []

        def flush() -> None:
            text = " ".join(buf).strip()
            if text:
                args[current_key or "value"] = text
            buf.clear()

        while not self.at_end():
            tok = self.peek()
            if tok.kind == "punct":
                if tok.text == "(":
                    depth += 1
                elif tok.text == ")":
                    depth -= 1
                    if depth == 0:
                        self.advance()
                        flush()
                        return args
                elif tok.text == "," and depth == 1:
                    self.advance()
                    flush()
                    current_key = None
                    continue
                elif tok.text == "=" and depth == 1 and len(buf) == 1:
                    self.advance()
                    current_key = buf.pop()
                    continue
            buf.append(self.advance().text)
        return args

    def parse_modifiers_and_annotations(self) -> tuple[set[str], list[AnnotationUse]]:
        modifiers: set[str] = set()
        annotations: list[AnnotationUse] = []
        while True:
            tok = self.peek()
            if tok.kind == "punct" and tok.text == "@" and self.peek(1).text != "interface":
                annotations.append(self.parse_annotation())
                continue
            if tok.kind == "ident" and tok.text in _MODIFIERS:
                # 'default' also introduces annotation member defaults and
                # switch labels; both are handled elsewhere, so a bare
                # modifier position is the only way to reach here.
                modifiers.add(tok.text)
                self.advance()
                continue
            if tok.kind == "ident" and tok.text == "non" and self.peek(1).text == "-":
                # non-sealed
                self.advance()
                self.advance()
                if self.peek().text == "sealed":
                    self.advance()
                continue
            return modifiers, annotations

    # -- type declarations --

    def _is_type_decl_ahead(self) -> bool:
        tok = self.peek()
        if tok.kind == "ident" and tok.text in _TYPE_DECL_KEYWORDS:
            if tok.text == "record":  # contextual keyword
                return self.peek(1).kind == "ident" and self.peek(2).text == "("
            return True
        return tok.kind == "punct" and tok.text == "@" and self.peek(1).text == "interface"

    def parse_type_decl(self, enclosing: Optional[str]) -> ClassModel:
        modifiers, annotations = self.parse_modifiers_and_annotations()
        tok = self.peek()
        if tok.kind == "punct" and tok.text == "@" and self.peek(1).text == "interface":
            self.advance()
            self.advance()
            kind = TypeKind.ANNOTATION_DECL
        elif tok.kind == "ident" and tok.text in _TYPE_DECL_KEYWORDS:
            keyword = self.advance().text
            if keyword == "interface":
                kind = TypeKind.INTERFACE
            elif keyword == "enum":
                kind = TypeKind.ENUM
            else:  # class or record
                kind = TypeKind.ABSTRACT_CLASS if "abstract" in modifiers else TypeKind.CLASS
        else:
            raise _ParseError(tok.line, f"expected type declaration, found '{tok.text or '<eof>'}'")

        name_tok = self.expect_ident()
        qualified = f"{enclosing}.{name_tok.text}" if enclosing else (
            f"{self.package}.{name_tok.text}" if self.package else name_tok.text
        )
        cls = ClassModel(qualified_name=qualified, kind=kind, annotations=annotations)
        self.types.append(cls)
        self._cls_stack.append(cls)
        try:
            if self.peek().text == "<":
                self._consume_angles()
            if self.peek().text == "(":  # record component list
                self._skip_parens()
            if self.match_ident("extends"):
                first = self.parse_type_text()
                if kind is TypeKind.INTERFACE:
                    cls.interface_names.append(first)
                    while self.match_punct(","):
                        cls.interface_names.append(self.parse_type_text())
                else:
                    cls.superclass_name = first
            if self.match_ident("implements"):
                cls.interface_names.append(self.parse_type_text())
                while self.match_punct(","):
                    cls.interface_names.append(self.parse_type_text())
            if self.match_ident("permits"):
                self.parse_type_text()
                while self.match_punct(","):
                    self.parse_type_text()

            self.expect_punct("{")
            if kind is TypeKind.ENUM:
                self._parse_enum_constants()
            self.parse_class_body(cls)
        finally:
            self._cls_stack.pop()
        cls.source_span = (name_tok.line, self.toks[self.pos - 1].line if self.pos else name_tok.line)
        if kind is TypeKind.INTERFACE:
            cls.constructors = []
        return cls

    def _parse_enum_constants(self) -> None:
        while not self.at_end():
            tok = self.peek()
            if tok.kind == "punct" and tok.text in (";", "}"):
                if tok.text == ";":
                    self.advance()
                return
            if tok.kind == "punct" and tok.text == "@":
                self.parse_annotation()
                continue
            if tok.kind != "ident":
                return
            self.advance()  # constant name
            if self.peek().text == "(":
                self._skip_parens()
            if self.peek().text == "{":
                self.skip_balanced_braces()
            if not self.match_punct(","):
                if self.match_punct(";"):
                    return
                if self.peek().text == "}":
                    return

    def _skip_parens(self) -> None:
        depth = 0
        while not self.at_end():
            tok = self.advance()
            if tok.kind == "punct":
                if tok.text == "(":
                    depth += 1
                elif tok.text == ")":
                    depth -= 1
                    if depth <= 0:
                        return

    def parse_class_body(self, cls: ClassModel) -> None:
        while not self.at_end():
            start = self.pos
            if self.match_punct("}"):
                return
            try:
                self.parse_member(cls)
            except _ParseError as err:
                self.diag(err.line, f"skipped member of {cls.simple_name}: {err.message}")
                self.sync_member()
            except RecursionError:
                self.diag(self.peek().line, f"skipped member of {cls.simple_name}: nesting too deep")
                self.sync_member()
            if self.pos == start:
                bad = self.advance()
                if bad.kind == "eof":
                    return
                self.diag(bad.line, f"unexpected token '{bad.text}' in {cls.simple_name}")
        self.diag(self.peek().line, f"unterminated body of {cls.simple_name}")

    def parse_member(self, cls: ClassModel) -> None:
        if self.match_punct(";"):
            return
        save = self.pos
        modifiers, annotations = self.parse_modifiers_and_annotations()

        if self._is_type_decl_ahead():
            self.pos = save  # parse_type_decl re-reads modifiers itself
            self.parse_type_decl(enclosing=cls.qualified_name)
            return

        tok = self.peek()
        if tok.kind == "punct" and tok.text == "{":
            # instance or static initializer block; parsed for consistency
            # but not modeled as a method
            self.parse_block(cls)
            return

        if self.peek().text == "<":  # generic method type parameters
            self._consume_angles()

        visibility = self._visibility_of(modifiers)
        is_static = "static" in modifiers
        is_abstract = "abstract" in modifiers

        # constructor: name matches the class simple name, directly followed
        # by a parameter list
        if (
            tok.kind == "ident"
            and tok.text == cls.simple_name
            and self.peek(1).text == "("
        ):
            name_tok = self.advance()
            ctor = MethodModel(
                name=name_tok.text,
                annotations=annotations,
                visibility=visibility,
                return_type_name="",
                is_static=False,
            )
            ctor.parameters = self.parse_parameters()
            self._skip_throws()
            body, end_line = self._parse_method_body(cls)
            ctor.body_statements = body
            ctor.source_span = (name_tok.line, end_line)
            cls.constructors.append(ctor)
            return

        type_text = self.parse_type_text()
        name_tok = self.expect_ident()

        if self.peek().text == "(":
            method = MethodModel(
                name=name_tok.text,
                annotations=annotations,
                visibility=self._default_member_visibility(cls, visibility, modifiers),
                return_type_name=type_text,
                is_static=is_static,
                is_abstract=is_abstract,
            )
            method.parameters = self.parse_parameters()
            while self.match_punct("["):  # archaic int foo()[] form
                self.expect_punct("]")
            self._skip_throws()
            if self.match_ident("default"):  # annotation member default
                self.parse_expression()
            if self.peek().text == "{":
                body, end_line = self._parse_method_body(cls)
                method.body_statements = body
            else:
                self.expect_punct(";")
                end_line = name_tok.line
            method.source_span = (name_tok.line, end_line)
            cls.methods.append(method)
            return

        # field declaration, possibly with several declarators
        while True:
            extra_dims = ""
            while self.match_punct("["):
                self.expect_punct("]")
                extra_dims += "[]"
            if self.match_punct("="):
                self._parse_variable_initializer(cls)
            cls.fields.append(
                FieldModel(
                    name=name_tok.text,
                    declared_type_name=type_text + extra_dims,
                    annotations=annotations,
                    visibility=self._default_member_visibility(cls, visibility, modifiers),
                    is_static=is_static or cls.kind in (TypeKind.INTERFACE, TypeKind.ANNOTATION_DECL),
                    source_line=name_tok.line,
                )
            )
            if self.match_punct(","):
                name_tok = self.expect_ident()
                continue
            self.expect_punct(";")
            return

    @staticmethod
    def _visibility_of(modifiers: set[str]) -> Visibility:
        if "public" in modifiers:
            return Visibility.PUBLIC
        if "protected" in modifiers:
            return Visibility.PROTECTED
        if "private" in modifiers:
            return Visibility.PRIVATE
        return Visibility.PACKAGE

    @staticmethod
    def _default_member_visibility(
        cls: ClassModel, visibility: Visibility, modifiers: set[str]
    ) -> Visibility:
        # interface members are implicitly public
        if cls.kind in (TypeKind.INTERFACE, TypeKind.ANNOTATION_DECL) and not (
            modifiers & {"private", "protected"}
        ):
            return Visibility.PUBLIC
        return visibility

    def _parse_method_body(self, cls: ClassModel) -> tuple[Block, int]:
        body = self.parse_block(cls)
        end_line = self.toks[self.pos - 1].line if self.pos else body.line
        return body, end_line

    def parse_parameters(self) -> list[Parameter]:
        self.expect_punct("(")
        params: list[Parameter] = []
        if self.match_punct(")"):
            return params
        while True:
            while self.peek().text == "@":
                self.parse_annotation()
            self.match_ident("final")
            type_text = self.parse_type_text()
            if self.match_punct("...")            :
                type_text += "..."
            if self.peek().kind == "ident":
                name_tok = self.advance()
                if name_tok.text == "this":  # receiver parameter
                    name_tok = None
            else:
                name_tok = None
            while self.match_punct("["):
                self.expect_punct("]")
            if name_tok is not None:
                params.append(Parameter(name=name_tok.text, declared_type_name=type_text))
            if self.match_punct(","):
                continue
            self.expect_punct(")")
            return params

    def _skip_throws(self) -> None:
        if self.match_ident("throws"):
            self.parse_type_text()
            while self.match_punct(","):
                self.parse_type_text()

    # -- types --

    def parse_type_text(self) -> str:
        text = self.try_parse_type()
        if text is None:
            tok = self.peek()
            raise _ParseError(tok.line, f"expected type, found '{tok.text or '<eof>'}'")
        return text

    def try_parse_type(self) -> Optional[str]:
        """Parse a type reference, returning its text, or None (position is
        restored) when the tokens cannot form a type."""
        save = self.pos
        parts: list[str] = []
        while self.peek().text == "@":
            try:
                self.parse_annotation()
            except _ParseError:
                self.pos = save
                return None
        tok = self.peek()
        if tok.kind != "ident":
            self.pos = save
            return None
        parts.append(self.advance().text)
        if parts[0] in _PRIMITIVES:
            pass
        else:
            while True:
                if self.peek().text == "<":
                    angles = self._try_consume_angles()
                    if angles is None:
                        self.pos = save
                        return None
                    parts.append(angles)
                if (
                    self.peek().text == "."
                    and self.peek(1).kind == "ident"
                    and self.peek(1).text not in ("class", "this", "new", "super")
                ):
                    self.advance()
                    parts.append("." + self.advance().text)
                    continue
                break
        while self.peek().text == "[" and self.peek(1).text == "]":
            self.advance()
            self.advance()
            parts.append("[]")
        return "".join(parts)

    def _consume_angles(self) -> str:
        angles = self._try_consume_angles()
        if angles is None:
            raise _ParseError(self.peek().line, "malformed type arguments")
        return angles

    def _try_consume_angles(self) -> Optional[str]:
        """Consume a balanced generic argument list as opaque text."""
        save = self.pos
        if self.peek().text != "<":
            return None
        depth = 0
        pieces: list[str] = []
        while not self.at_end():
            tok = self.peek()
            if tok.kind == "punct":
                if tok.text == "<":
                    depth += 1
                elif tok.text == ">":
                    depth -= 1
                elif tok.text not in _ANGLE_OK_PUNCT or depth == 0:
                    self.pos = save
                    return None
            elif tok.kind != "ident":
                self.pos = save
                return None
            elif tok.text not in ("extends", "super") and not (
                tok.text[0].isalpha() or tok.text[0] in "_$"
            ):
                self.pos = save
                return None
            pieces.append(self.advance().text)
            if depth == 0:
                return "".join(pieces)
        self.pos = save
        return None

    # -- statements --

    def parse_block(self, cls: ClassModel) -> Block:
        open_tok = self.expect_punct("{")
        block = Block(line=open_tok.line)
        while not self.at_end():
            start = self.pos
            if self.match_punct("}"):
                return block
            try:
                block.statements.append(self.parse_statement(cls))
            except _ParseError as err:
                self.diag(err.line, f"skipped statement: {err.message}")
                self._sync_statement()
            except RecursionError:
                self.diag(self.peek().line, "skipped statement: nesting too deep")
                self._sync_statement()
            if self.pos == start:
                bad = self.advance()
                if bad.kind == "eof":
                    break
                self.diag(bad.line, f"unexpected token '{bad.text}'")
        self.diag(block.line, "unterminated block")
        return block

    def _sync_statement(self) -> None:
        depth = 0
        while not self.at_end():
            tok = self.peek()
            if tok.kind == "punct":
                if tok.text == ";" and depth == 0:
                    self.advance()
                    return
                if tok.text == "{":
                    depth += 1
                elif tok.text == "}":
                    if depth == 0:
                        return
                    depth -= 1
            self.advance()

    def parse_statement(self, cls: ClassModel) -> Node:
        tok = self.peek()
        text = tok.text

        if tok.kind == "punct":
            if text == "{":
                return self.parse_block(cls)
            if text == ";":
                self.advance()
                return EmptyStatement(line=tok.line)
            if text == "@" and self.peek(1).text == "interface":
                return self._parse_local_type(cls)

        if tok.kind == "ident":
            if text == "if":
                return self._parse_if(cls)
            if text == "for":
                return self._parse_for(cls)
            if text == "while":
                self.advance()
                self.expect_punct("(")
                cond = self.parse_expression()
                self.expect_punct(")")
                body = self.parse_statement(cls)
                return While(line=tok.line, condition=cond, body=body)
            if text == "do":
                self.advance()
                body = self.parse_statement(cls)
                if not self.match_ident("while"):
                    raise _ParseError(tok.line, "do without while")
                self.expect_punct("(")
                cond = self.parse_expression()
                self.expect_punct(")")
                self.match_punct(";")
                return DoWhile(line=tok.line, body=body, condition=cond)
            if text == "switch":
                return self._parse_switch(cls)
            if text == "try":
                return self._parse_try(cls)
            if text == "return":
                self.advance()
                value = None
                if not (self.peek().kind == "punct" and self.peek().text == ";"):
                    value = self.parse_expression()
                self.expect_punct(";")
                return Return(line=tok.line, value=value)
            if text == "throw":
                self.advance()
                value = self.parse_expression()
                self.expect_punct(";")
                return Throw(line=tok.line, value=value)
            if text in ("break", "continue"):
                self.advance()
                if self.peek().kind == "ident":
                    self.advance()  # label
                self.expect_punct(";")
                return (BreakStatement if text == "break" else ContinueStatement)(line=tok.line)
            if text == "synchronized" and self.peek(1).text == "(":
                self.advance()
                self.expect_punct("(")
                monitor = self.parse_expression()
                self.expect_punct(")")
                body = self.parse_block(cls)
                return Synchronized(line=tok.line, monitor=monitor, body=body)
            if text == "assert":
                self.advance()
                cond = self.parse_expression()
                message = None
                if self.match_punct(":"):
                    message = self.parse_expression()
                self.expect_punct(";")
                return Assert(line=tok.line, condition=cond, message=message)
            if text == "yield":
                save = self.pos
                self.advance()
                if self.peek().text not in ("=", ";"):
                    value = self.parse_expression()
                    self.expect_punct(";")
                    return Yield(line=tok.line, value=value)
                self.pos = save
            if text in _TYPE_DECL_KEYWORDS and self._is_type_decl_ahead():
                return self._parse_local_type(cls)
            if (
                text in ("final", "abstract", "static", "public", "private", "protected")
                and self.peek(1).kind == "ident"
                and self.peek(1).text in _TYPE_DECL_KEYWORDS
            ):
                return self._parse_local_type(cls)
            # labeled statement
            if self.peek(1).kind == "punct" and self.peek(1).text == ":" and self.peek(2).text != ":":
                label = self.advance().text
                self.advance()
                inner = self.parse_statement(cls)
                return Labeled(line=tok.line, label=label, statement=inner)

        decl = self._try_parse_local_var_decl(cls, terminators=(";",))
        if decl is not None:
            self.expect_punct(";")
            return decl

        expr = self.parse_expression()
        self.expect_punct(";")
        return ExprStatement(line=expr.line, expr=expr)

    def _parse_local_type(self, cls: ClassModel) -> Node:
        line = self.peek().line
        nested = self.parse_type_decl(enclosing=cls.qualified_name)
        return LocalTypeDecl(line=line, qualified_name=nested.qualified_name)

    def _parse_if(self, cls: ClassModel) -> If:
        tok = self.advance()
        self.expect_punct("(")
        cond = self.parse_expression()
        self.expect_punct(")")
        then_branch = self.parse_statement(cls)
        else_branch = None
        if self.match_ident("else"):
            else_branch = self.parse_statement(cls)
        return If(line=tok.line, condition=cond, then_branch=then_branch, else_branch=else_branch)

    def _parse_for(self, cls: ClassModel) -> Node:
        tok = self.advance()
        self.expect_punct("(")

        # for-each: a declaration followed by ':'
        save = self.pos
        decl = self._try_parse_local_var_decl(cls, terminators=(":",), single=True)
        if decl is not None and self.match_punct(":"):
            iterable = self.parse_expression()
            self.expect_punct(")")
            body = self.parse_statement(cls)
            return ForEach(
                line=tok.line,
                var_name=decl.declarators[0].name,
                var_type=decl.declared_type_name,
                iterable=iterable,
                body=body,
            )
        self.pos = save

        init: list[Node] = []
        if not self.match_punct(";"):
            init_decl = self._try_parse_local_var_decl(cls, terminators=(";",))
            if init_decl is not None:
                init.append(init_decl)
            else:
                init.append(self.parse_expression())
                while self.match_punct(","):
                    init.append(self.parse_expression())
            self.expect_punct(";")
        cond = None
        if not self.match_punct(";"):
            cond = self.parse_expression()
            self.expect_punct(";")
        update: list[Node] = []
        if not self.match_punct(")"):
            update.append(self.parse_expression())
            while self.match_punct(","):
                update.append(self.parse_expression())
            self.expect_punct(")")
        body = self.parse_statement(cls)
        return ForLoop(line=tok.line, init=init, condition=cond, update=update, body=body)

    def _parse_switch(self, cls: ClassModel) -> Switch:
        tok = self.advance()
        self.expect_punct("(")
        selector = self.parse_expression()
        self.expect_punct(")")
        self.expect_punct("{")
        switch = Switch(line=tok.line, selector=selector)
        current: Optional[SwitchSection] = None
        while not self.at_end():
            start = self.pos
            if self.match_punct("}"):
                return switch
            head = self.peek()
            try:
                if head.kind == "ident" and head.text in ("case", "default"):
                    section = SwitchSection(line=head.line)
                    while self.peek().kind == "ident" and self.peek().text in ("case", "default"):
                        label_tok = self.advance()
                        if label_tok.text == "default":
                            section.is_default = True
                        else:
                            section.labels.append(self._parse_case_labels(label_tok))
                            while self.match_punct(","):
                                section.labels.append(
                                    CaseLabel(line=self.peek().line, expr=self._parse_case_expr())
                                )
                        if self.match_punct(":"):
                            continue
                        if self.match_punct("->"):
                            section.body.append(self._parse_arrow_case_body(cls))
                        break
                    switch.sections.append(section)
                    current = section
                    continue
                if current is None:
                    current = SwitchSection(line=head.line)
                    switch.sections.append(current)
                current.body.append(self.parse_statement(cls))
            except _ParseError as err:
                self.diag(err.line, f"skipped switch entry: {err.message}")
                self._sync_statement()
            if self.pos == start:
                self.advance()
        return switch

    def _parse_case_labels(self, label_tok: Token) -> CaseLabel:
        return CaseLabel(line=label_tok.line, expr=self._parse_case_expr())

    def _parse_case_expr(self) -> Optional[Node]:
        # a case label expression ends at ':', '->' or ','
        save = self.pos
        depth = 0
        while not self.at_end():
            tok = self.peek()
            if tok.kind == "punct" and depth == 0 and tok.text in (":", "->", ","):
                break
            if tok.kind == "punct":
                if tok.text in ("(", "["):
                    depth += 1
                elif tok.text in (")", "]"):
                    depth -= 1
            self.advance()
        end = self.pos
        self.pos = save
        if end == save:
            return None
        try:
            expr = self.parse_ternary()
            if self.pos > end:
                self.pos = end
            else:
                self.pos = end
            return expr
        except _ParseError:
            self.pos = end
            return None

    def _parse_arrow_case_body(self, cls: ClassModel) -> Node:
        if self.peek().text == "{":
            return self.parse_block(cls)
        if self.peek().text == "throw":
            return self.parse_statement(cls)
        expr = self.parse_expression()
        self.match_punct(";")
        return ExprStatement(line=expr.line, expr=expr)

    def _parse_try(self, cls: ClassModel) -> Try:
        tok = self.advance()
        resources: list[Node] = []
        if self.match_punct("("):
            while not self.at_end() and self.peek().text != ")":
                decl = self._try_parse_local_var_decl(cls, terminators=(";", ")"))
                if decl is not None:
                    resources.append(decl)
                else:
                    resources.append(self.parse_expression())
                if not self.match_punct(";"):
                    break
            self.expect_punct(")")
        body = self.parse_block(cls)
        node = Try(line=tok.line, resources=resources, body=body)
        while self.peek().kind == "ident" and self.peek().text == "catch":
            catch_tok = self.advance()
            self.expect_punct("(")
            self.match_ident("final")
            type_text = self.parse_type_text()
            while self.match_punct("|"):  # multi-catch is one clause
                type_text += " | " + self.parse_type_text()
            name = self.expect_ident().text
            self.expect_punct(")")
            catch_body = self.parse_block(cls)
            node.catches.append(
                Catch(line=catch_tok.line, param_name=name, param_type=type_text, body=catch_body)
            )
        if self.match_ident("finally"):
            node.finally_body = self.parse_block(cls)
        return node

    def _try_parse_local_var_decl(
        self, cls: ClassModel, terminators: tuple[str, ...], single: bool = False
    ) -> Optional[LocalVarDecl]:
        """Attempt ``Type name [= init] [, name ...]`` without consuming the
        terminator.  Restores the position and returns None on mismatch."""
        save = self.pos
        self.match_ident("final")
        while self.peek().text == "@":
            try:
                self.parse_annotation()
            except _ParseError:
                self.pos = save
                return None
        type_text = self.try_parse_type()
        if type_text is None or self.peek().kind != "ident":
            self.pos = save
            return None
        first = self.peek()
        after = self.peek(1)
        valid_next = {"=", ",", "["} | set(terminators)
        if not (after.kind == "punct" and after.text in valid_next):
            self.pos = save
            return None
        decl = LocalVarDecl(line=first.line, declared_type_name=type_text)
        try:
            while True:
                name_tok = self.expect_ident()
                while self.match_punct("["):
                    self.expect_punct("]")
                init = None
                if self.match_punct("="):
                    init = self._parse_initializer_expr()
                decl.declarators.append(
                    VarDeclarator(line=name_tok.line, name=name_tok.text, initializer=init)
                )
                if single:
                    break
                if self.match_punct(","):
                    if self.peek().kind != "ident":
                        raise _ParseError(self.peek().line, "expected declarator name")
                    continue
                break
            if self.peek().kind == "punct" and self.peek().text in terminators:
                return decl
            raise _ParseError(self.peek().line, "not a declaration")
        except _ParseError:
            self.pos = save
            return None

    def _parse_initializer_expr(self) -> Node:
        if self.peek().text == "{":
            return self._parse_array_initializer()
        return self.parse_assignment()

    def _parse_array_initializer(self) -> ArrayInit:
        open_tok = self.expect_punct("{")
        node = ArrayInit(line=open_tok.line)
        if self.match_punct("}"):
            return node
        while True:
            node.elements.append(self._parse_initializer_expr())
            if self.match_punct(","):
                if self.match_punct("}"):
                    return node
                continue
            self.expect_punct("}")
            return node

    def _parse_variable_initializer(self, cls: ClassModel) -> Node:
        # field initializers are parsed (anonymous classes register, braces
        # stay balanced) but the expression itself is not modeled
        del cls
        return self._parse_initializer_expr()

    # -- expressions --

    def parse_expression(self) -> Node:
        return self.parse_assignment()

    def parse_assignment(self) -> Node:
        self._expr_depth += 1
        if self._expr_depth > _MAX_EXPR_DEPTH:
            self._expr_depth = 0
            raise _ParseError(self.peek().line, "expression too deeply nested")
        try:
            left = self.parse_ternary()
            op = self._match_assign_op()
            if op is not None:
                value = self.parse_assignment()
                return Assign(line=left.line, target=left, value=value, op=op)
            return left
        finally:
            self._expr_depth -= 1

    def _match_assign_op(self) -> Optional[str]:
        tok = self.peek()
        if tok.kind != "punct":
            return None
        if tok.text in ("=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^="):
            self.advance()
            return tok.text
        # shift-assigns tokenize as '>'* followed by '>=' (or '<' then '<=')
        if tok.text in ("<", ">"):
            seq = [tok]
            j = 1
            while (
                self.peek(j).kind == "punct"
                and self.peek(j).text == tok.text
                and self._adjacent(seq[-1], self.peek(j))
            ):
                seq.append(self.peek(j))
                j += 1
            last = self.peek(j)
            if last.kind == "punct" and last.text == tok.text + "=" and self._adjacent(seq[-1], last):
                for _ in range(j + 1):
                    self.advance()
                return tok.text * (len(seq) + 1) + "="
        return None

    def parse_ternary(self) -> Node:
        cond = self.parse_or()
        if self.peek().kind == "punct" and self.peek().text == "?":
            q = self.advance()
            if_true = self.parse_expression()
            self.expect_punct(":")
            if_false = self.parse_ternary()
            return Ternary(line=q.line, condition=cond, if_true=if_true, if_false=if_false)
        return cond

    def parse_or(self) -> Node:
        left = self.parse_and()
        while self.peek().kind == "punct" and self.peek().text == "||":
            op = self.advance()
            right = self.parse_and()
            left = Binary(line=op.line, op="||", left=left, right=right)
        return left

    def parse_and(self) -> Node:
        left = self.parse_bit_or()
        while self.peek().kind == "punct" and self.peek().text == "&&":
            op = self.advance()
            right = self.parse_bit_or()
            left = Binary(line=op.line, op="&&", left=left, right=right)
        return left

    def parse_bit_or(self) -> Node:
        left = self.parse_bit_xor()
        while self.peek().kind == "punct" and self.peek().text == "|":
            op = self.advance()
            right = self.parse_bit_xor()
            left = Binary(line=op.line, op="|", left=left, right=right)
        return left

    def parse_bit_xor(self) -> Node:
        left = self.parse_bit_and()
        while self.peek().kind == "punct" and self.peek().text == "^":
            op = self.advance()
            right = self.parse_bit_and()
            left = Binary(line=op.line, op="^", left=left, right=right)
        return left

    def parse_bit_and(self) -> Node:
        left = self.parse_equality()
        while self.peek().kind == "punct" and self.peek().text == "&":
            op = self.advance()
            right = self.parse_equality()
            left = Binary(line=op.line, op="&", left=left, right=right)
        return left

    def parse_equality(self) -> Node:
        left = self.parse_relational()
        while self.peek().kind == "punct" and self.peek().text in ("==", "!="):
            op = self.advance()
            right = self.parse_relational()
            left = Binary(line=op.line, op=op.text, left=left, right=right)
        return left

    def parse_relational(self) -> Node:
        left = self.parse_shift()
        while True:
            tok = self.peek()
            if tok.kind == "ident" and tok.text == "instanceof":
                self.advance()
                self.match_ident("final")
                type_text = self.parse_type_text()
                binding = None
                if self.peek().kind == "ident" and self.peek().text not in ("instanceof",):
                    nxt = self.peek(1)
                    if nxt.kind == "punct" and nxt.text in (")", ";", "&&", "||", ",", "?", ":"):
                        binding = self.advance().text
                left = InstanceOf(line=tok.line, operand=left, type_name=type_text, binding=binding)
                continue
            if tok.kind == "punct" and tok.text in ("<=", ">="):
                self.advance()
                right = self.parse_shift()
                left = Binary(line=tok.line, op=tok.text, left=left, right=right)
                continue
            if tok.kind == "punct" and tok.text in ("<", ">"):
                nxt = self.peek(1)
                if (
                    nxt.kind == "punct"
                    and nxt.text in (tok.text, tok.text + "=")
                    and self._adjacent(tok, nxt)
                ):
                    break  # shift-assign sequence, handled at assignment level
                self.advance()
                right = self.parse_shift()
                left = Binary(line=tok.line, op=tok.text, left=left, right=right)
                continue
            break
        return left

    def parse_shift(self) -> Node:
        left = self.parse_additive()
        while True:
            tok = self.peek()
            if tok.kind == "punct" and tok.text in ("<", ">"):
                nxt = self.peek(1)
                if nxt.kind == "punct" and nxt.text == tok.text + "=" and self._adjacent(tok, nxt):
                    break  # shift-assign, handled at assignment level
                if nxt.kind == "punct" and nxt.text == tok.text and self._adjacent(tok, nxt):
                    third = self.peek(2)
                    count = 2
                    if (
                        tok.text == ">"
                        and third.kind == "punct"
                        and third.text == ">"
                        and self._adjacent(nxt, third)
                    ):
                        count = 3
                    after = self.peek(count)
                    if (
                        after.kind == "punct"
                        and after.text in ("=", tok.text + "=")
                        and self._adjacent(self.peek(count - 1), after)
                    ):
                        break  # shift-assign, handled at assignment level
                    for _ in range(count):
                        self.advance()
                    right = self.parse_additive()
                    left = Binary(line=tok.line, op=tok.text * count, left=left, right=right)
                    continue
            break
        return left

    def parse_additive(self) -> Node:
        left = self.parse_multiplicative()
        while self.peek().kind == "punct" and self.peek().text in ("+", "-"):
            op = self.advance()
            right = self.parse_multiplicative()
            left = Binary(line=op.line, op=op.text, left=left, right=right)
        return left

    def parse_multiplicative(self) -> Node:
        left = self.parse_unary()
        while self.peek().kind == "punct" and self.peek().text in ("*", "/", "%"):
            op = self.advance()
            right = self.parse_unary()
            left = Binary(line=op.line, op=op.text, left=left, right=right)
        return left

    _CAST_FOLLOW_PUNCT = {"(", "!", "~", "@"}

    def parse_unary(self) -> Node:
        tok = self.peek()
        if tok.kind == "punct" and tok.text in ("+", "-", "!", "~", "++", "--"):
            self.advance()
            operand = self.parse_unary()
            return Unary(line=tok.line, op=tok.text, operand=operand)
        if tok.kind == "punct" and tok.text == "(":
            cast = self._try_parse_cast()
            if cast is not None:
                return cast
        return self.parse_postfix()

    def _try_parse_cast(self) -> Optional[Node]:
        save = self.pos
        open_tok = self.advance()  # '('
        type_text = self.try_parse_type()
        if type_text is None or not self.match_punct(")"):
            self.pos = save
            return None
        nxt = self.peek()
        is_operand_start = (
            nxt.kind in ("ident", "num", "str", "char")
            and nxt.text not in ("instanceof",)
        ) or (nxt.kind == "punct" and nxt.text in self._CAST_FOLLOW_PUNCT)
        # (expr) followed by an identifier would be a cast too; require the
        # parenthesized text to look like a type for bare names to reduce
        # false casts like (a) b  -- single lowercase identifiers still pass,
        # matching javac's rule that (Name) operand is a cast.
        if not is_operand_start:
            self.pos = save
            return None
        try:
            expr = self.parse_unary()
        except _ParseError:
            self.pos = save
            return None
        return Cast(line=open_tok.line, type_name=type_text, expr=expr)

    def parse_postfix(self) -> Node:
        node = self.parse_primary()
        while True:
            tok = self.peek()
            if tok.kind == "punct" and tok.text == "(" and isinstance(node, Identifier):
                args = self._parse_arguments()
                node = Invocation(line=node.line, receiver=None, name=node.name, arguments=args)
                continue
            if tok.kind == "punct" and tok.text == ".":
                nxt = self.peek(1)
                if nxt.kind == "punct" and nxt.text == "<":
                    # explicit type arguments: recv.<T>method(args)
                    self.advance()
                    if self._try_consume_angles() is None:
                        raise _ParseError(tok.line, "malformed type arguments")
                    name_tok = self.expect_ident()
                    args = self._parse_arguments()
                    node = Invocation(line=name_tok.line, receiver=node, name=name_tok.text, arguments=args)
                    continue
                if nxt.kind != "ident":
                    raise _ParseError(tok.line, "expected member name after '.'")
                if nxt.text == "class":
                    self.advance()
                    self.advance()
                    node = ClassLiteral(line=tok.line, type_name=_expr_text(node))
                    continue
                if nxt.text == "this":
                    self.advance()
                    self.advance()
                    node = This(line=tok.line)
                    continue
                if nxt.text == "new":
                    self.advance()
                    node = self._parse_creation(self.advance())
                    continue
                self.advance()
                name_tok = self.advance()
                if self.peek().kind == "punct" and self.peek().text == "(":
                    args = self._parse_arguments()
                    node = Invocation(line=name_tok.line, receiver=node, name=name_tok.text, arguments=args)
                else:
                    node = FieldAccess(line=name_tok.line, receiver=node, name=name_tok.text)
                continue
            if tok.kind == "punct" and tok.text == "::":
                self.advance()
                if self.peek().text == "<":
                    self._try_consume_angles()
                name_tok = self.peek()
                if name_tok.kind == "ident":
                    self.advance()
                    ref_name = name_tok.text
                else:
                    ref_name = "new"
                node = MethodRef(line=tok.line, target_text=_expr_text(node), name=ref_name, target=node)
                continue
            if tok.kind == "punct" and tok.text == "[":
                self.advance()
                index = self.parse_expression()
                self.expect_punct("]")
                node = ArrayAccess(line=tok.line, array=node, index=index)
                continue
            if tok.kind == "punct" and tok.text in ("++", "--"):
                self.advance()
                node = Unary(line=tok.line, op="post" + tok.text, operand=node)
                continue
            return node

    def _parse_arguments(self) -> list[Node]:
        self.expect_punct("(")
        args: list[Node] = []
        if self.match_punct(")"):
            return args
        while True:
            args.append(self.parse_expression())
            if self.match_punct(","):
                continue
            self.expect_punct(")")
            return args

    def parse_primary(self) -> Node:
        tok = self.peek()

        if tok.kind in ("num",):
            self.advance()
            return Literal(line=tok.line, kind="number", text=tok.text)
        if tok.kind == "str":
            self.advance()
            return Literal(line=tok.line, kind="string", text=tok.text)
        if tok.kind == "char":
            self.advance()
            return Literal(line=tok.line, kind="char", text=tok.text)

        if tok.kind == "punct" and tok.text == "(":
            lam = self._try_parse_paren_lambda()
            if lam is not None:
                return lam
            self.advance()
            inner = self.parse_expression()
            self.expect_punct(")")
            return inner

        if tok.kind == "punct" and tok.text == "{":
            return self._parse_array_initializer()

        if tok.kind != "ident":
            raise _ParseError(tok.line, f"unexpected token '{tok.text or '<eof>'}'")

        text = tok.text
        if text in ("true", "false"):
            self.advance()
            return Literal(line=tok.line, kind="boolean", text=text)
        if text == "null":
            self.advance()
            return Literal(line=tok.line, kind="null", text=text)
        if text == "this":
            self.advance()
            if self.peek().kind == "punct" and self.peek().text == "(":
                args = self._parse_arguments()
                return Invocation(line=tok.line, receiver=None, name="this", arguments=args)
            return This(line=tok.line)
        if text == "super":
            self.advance()
            if self.peek().kind == "punct" and self.peek().text == "(":
                args = self._parse_arguments()
                return Invocation(line=tok.line, receiver=None, name="super", arguments=args)
            return SuperRef(line=tok.line)
        if text == "new":
            self.advance()
            return self._parse_creation(tok)
        if text == "switch" and self.peek(1).text == "(":
            return self._parse_switch(self._enclosing_cls())

        # single-parameter lambda: x -> expr
        nxt = self.peek(1)
        if nxt.kind == "punct" and nxt.text == "->":
            self.advance()
            self.advance()
            body = self._parse_lambda_body()
            return Lambda(line=tok.line, params=[text], body=body)

        self.advance()
        return Identifier(line=tok.line, name=text)

    def _enclosing_cls(self) -> ClassModel:
        if self._cls_stack:
            return self._cls_stack[-1]
        return ClassModel("<expr>", TypeKind.CLASS)

    def _parse_lambda_body(self) -> Node:
        if self.peek().text == "{":
            return self.parse_block(self._enclosing_cls())
        return self.parse_expression()

    def _try_parse_paren_lambda(self) -> Optional[Lambda]:
        """Detect ``(a, b) -> ...`` by scanning to the matching ')'."""
        save = self.pos
        open_tok = self.peek()
        depth = 0
        j = self.pos
        while j < len(self.toks) - 1:
            t = self.toks[j]
            if t.kind == "punct":
                if t.text == "(":
                    depth += 1
                elif t.text == ")":
                    depth -= 1
                    if depth == 0:
                        break
                elif t.text in (";", "{", "}") :
                    return None
            j += 1
        after = self.toks[j + 1] if j + 1 < len(self.toks) else None
        if after is None or not (after.kind == "punct" and after.text == "->"):
            return None
        # extract parameter names: last identifier of each comma group,
        # ignoring commas nested in parens or generic argument lists
        params: list[str] = []
        group_last: Optional[str] = None
        depth = 0
        angle = 0
        for t in self.toks[self.pos : j + 1]:
            if t.kind == "punct":
                if t.text == "(":
                    depth += 1
                elif t.text == ")":
                    depth -= 1
                    if depth == 0 and group_last is not None:
                        params.append(group_last)
                elif t.text == "<":
                    angle += 1
                elif t.text == ">":
                    angle = max(0, angle - 1)
                elif t.text == "," and depth == 1 and angle == 0:
                    if group_last is not None:
                        params.append(group_last)
                    group_last = None
            elif t.kind == "ident" and t.text != "final":
                group_last = t.text
        self.pos = j + 1
        self.expect_punct("->")
        body = self._parse_lambda_body()
        return Lambda(line=open_tok.line, params=params, body=body)

    def _parse_creation(self, new_tok: Token) -> Node:
        type_text = self.parse_type_text()
        if self.peek().kind == "punct" and self.peek().text == "<":
            angles = self._try_consume_angles()
            if angles:
                type_text += angles

        # the type parser may already have consumed empty bracket pairs, as
        # in `new int[] {...}`; both spellings are array creations
        element_type = type_text
        had_dims = False
        while element_type.endswith("[]"):
            element_type = element_type[:-2]
            had_dims = True

        if had_dims or (self.peek().kind == "punct" and self.peek().text == "["):
            dims: list[Node] = []
            while self.match_punct("["):
                if self.match_punct("]"):
                    continue
                dims.append(self.parse_expression())
                self.expect_punct("]")
            initializer = None
            if self.peek().text == "{":
                initializer = self._parse_array_initializer()
            return ArrayCreation(line=new_tok.line, type_name=element_type, dimensions=dims, initializer=initializer)

        args = self._parse_arguments() if self.peek().text == "(" else []
        creation = ObjectCreation(line=new_tok.line, type_name=type_text, arguments=args)
        if self.peek().kind == "punct" and self.peek().text == "{":
            host_qname = self._cls_stack[-1].qualified_name if self._cls_stack else "Unit"
            count = self._anon_counts.get(host_qname, 0) + 1
            self._anon_counts[host_qname] = count
            anon = ClassModel(
                qualified_name=f"{host_qname}$anon{count}",
                kind=TypeKind.CLASS,
                superclass_name=base_type_name(type_text),
            )
            self.types.append(anon)
            self.advance()  # '{'
            self._cls_stack.append(anon)
            try:
                self.parse_class_body(anon)
            finally:
                self._cls_stack.pop()
            anon.source_span = (new_tok.line, self.toks[self.pos - 1].line)
            creation.anonymous_class = anon.qualified_name
        return creation


def _expr_text(node: Node) -> str:
    if isinstance(node, Identifier):
        return node.name
    if isinstance(node, FieldAccess):
        return f"{_expr_text(node.receiver)}.{node.name}"
    if isinstance(node, This):
        return "this"
    return "<expr>"


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


def parse_unit(source_text: str, file_path: str) -> SourceUnit:
    """Parse one Java source file into a SourceUnit.

    Never raises: syntax errors are recovered per declaration, and whatever
    could not be modeled is recorded in ``parse_diagnostics``.
    """
    text = source_text.lstrip("﻿")
    unit = SourceUnit(file_path=str(file_path))
    try:
        tokens = tokenize(text)
    except Exception:  # defensive: the tokenizer is written not to raise
        unit.parse_diagnostics.append((1, "unreadable source text"))
        return unit

    package = ""
    pos = 0
    if tokens and tokens[0].kind == "ident" and tokens[0].text == "package":
        parts = []
        pos = 1
        while pos < len(tokens) and tokens[pos].kind == "ident":
            parts.append(tokens[pos].text)
            pos += 1
            if pos < len(tokens) and tokens[pos].kind == "punct" and tokens[pos].text == ".":
                pos += 1
                continue
            break
        if pos < len(tokens) and tokens[pos].kind == "punct" and tokens[pos].text == ";":
            pos += 1
        package = ".".join(parts)

    parser = _Parser(tokens[pos:] if pos else tokens, package)
    try:
        parser.parse_compilation_unit()
    except RecursionError:
        parser.diag(1, "aborted: nesting too deep")
    except Exception as err:  # totality guard; not expected in practice
        parser.diag(parser.peek().line, f"aborted: {err}")

    unit.package_name = package
    unit.type_decls = parser.types
    unit.parse_diagnostics = parser.diagnostics
    if not unit.type_decls and not unit.parse_diagnostics and text.strip():
        unit.parse_diagnostics.append((1, "no type declarations found"))
    return unit
