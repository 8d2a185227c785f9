"""Rule engine: twelve dependency-injection anti-pattern detectors.

Each detector is a pure function of one class's shared facts plus the
corpus type index and a RuleConfig.  ``run_all`` applies every enabled
rule over a corpus and returns a deterministically ordered finding list.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable, Iterable, Optional

from .injection import (
    ClassFacts,
    ContainerCallKind,
    InjectionForm,
    gather_facts,
)
from .metrics import class_complexity_sum, cyclomatic_complexity
from .source_model import (
    ClassModel,
    ResolvedKind,
    SourceUnit,
    TypeIndex,
    base_type_name,
    index_corpus,
    resolve_type_kind,
)

__all__ = [
    "RULE_ORDER",
    "RULE_TITLES",
    "RuleConfig",
    "ConfigError",
    "Finding",
    "run_all",
    "detect_iij",
    "detect_cci",
    "detect_cpm",
    "detect_fdc",
    "detect_usi",
    "detect_sdp",
    "detect_dcc",
    "detect_owi",
    "detect_fco",
    "detect_odi",
    "detect_mai",
    "detect_mfi",
]


RULE_ORDER = ("IIJ", "CCI", "CPM", "FDC", "USI", "SDP", "DCC", "OWI", "FCO", "ODI", "MAI", "MFI")

RULE_TITLES = {
    "IIJ": "Intransigent injection",
    "CCI": "Concrete class injection",
    "CPM": "Complex producer method",
    "FDC": "Fat DI class",
    "USI": "Useless injection",
    "SDP": "Static dependence provider",
    "DCC": "Direct container call",
    "OWI": "Open window injection",
    "FCO": "Framework coupling",
    "ODI": "Open door injection",
    "MAI": "Multiple assigned injection",
    "MFI": "Multiple forms of injection",
}


class ConfigError(ValueError):
    """Raised for malformed configuration files or invalid values."""


@dataclass(frozen=True)
class RuleConfig:
    """Thresholds and name lists driving the detectors.

    These defaults are the rule set's published constants: a producer
    method is complex above complexity 8, a fat class needs class
    complexity above 46 plus at least 5 injected attributes.
    """

    cpm_cc_threshold: int = 8
    fdc_cc_threshold: int = 46
    fdc_min_injections: int = 5
    sdp_name_substrings: tuple[str, ...] = ("factory", "fabric", "locator")
    framework_specific_annotations: tuple[str, ...] = ("Autowired",)
    include_constructors_in_fdc: bool = True
    enabled_rules: frozenset = frozenset(RULE_ORDER)
    dcc_context_type_names: tuple[str, ...] = ("ApplicationContext",)
    owi_include_same_class_passes: bool = False
    recognize_resource_annotation: bool = False

    def validate(self) -> "RuleConfig":
        for name in ("cpm_cc_threshold", "fdc_cc_threshold", "fdc_min_injections"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")
        unknown = set(self.enabled_rules) - set(RULE_ORDER)
        if unknown:
            raise ConfigError(f"unknown rule ids: {', '.join(sorted(unknown))}")
        if "SDP" in self.enabled_rules and not self.sdp_name_substrings:
            raise ConfigError("sdp_name_substrings must be non-empty while SDP is enabled")
        return self

    def with_rules(self, rule_ids: Iterable[str]) -> "RuleConfig":
        return replace(self, enabled_rules=frozenset(rule_ids)).validate()

    @classmethod
    def from_file(cls, path: str | Path) -> "RuleConfig":
        """Load ``key = value`` pairs (UTF-8, '#' comments); keys match the
        field names, lists are comma-separated, absent keys keep defaults."""
        values: dict[str, object] = {}
        try:
            lines = Path(path).read_text(encoding="utf-8").splitlines()
        except OSError as err:
            raise ConfigError(f"cannot read config file {path}: {err.strerror}") from err
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key = value")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            try:
                values[key] = cls._parse_value(key, value)
            except ConfigError as err:
                raise ConfigError(f"{path}:{lineno}: {err}") from None
        return cls(**values).validate()

    @staticmethod
    def _parse_value(key: str, value: str) -> object:
        int_keys = {"cpm_cc_threshold", "fdc_cc_threshold", "fdc_min_injections"}
        bool_keys = {
            "include_constructors_in_fdc",
            "owi_include_same_class_passes",
            "recognize_resource_annotation",
        }
        list_keys = {
            "sdp_name_substrings",
            "framework_specific_annotations",
            "dcc_context_type_names",
        }
        if key in int_keys:
            try:
                return int(value)
            except ValueError:
                raise ConfigError(f"{key} expects an integer, got {value!r}") from None
        if key in bool_keys:
            lowered = value.lower()
            if lowered in ("true", "yes", "on", "1"):
                return True
            if lowered in ("false", "no", "off", "0"):
                return False
            raise ConfigError(f"{key} expects true/false, got {value!r}")
        if key in list_keys:
            items = tuple(item.strip() for item in value.split(",") if item.strip())
            if key == "sdp_name_substrings":
                items = tuple(item.lower() for item in items)
            return items
        if key == "enabled_rules":
            rules = frozenset(item.strip().upper() for item in value.split(",") if item.strip())
            return rules
        raise ConfigError(f"unknown configuration key {key!r}")


@dataclass(frozen=True)
class Finding:
    rule_id: str
    file_path: str
    class_name: str
    element_name: str
    source_line: int
    message: str

    @property
    def sort_key(self) -> tuple:
        return (
            self.file_path,
            self.source_line,
            self.rule_id,
            self.class_name,
            self.element_name,
            self.message,
        )

    @property
    def identity(self) -> tuple:
        return (self.rule_id, self.file_path, self.class_name, self.element_name, self.source_line)


def _finding(rule: str, file_path: str, cls: ClassModel, element: str, line: int, message: str) -> Finding:
    return Finding(
        rule_id=rule,
        file_path=file_path,
        class_name=cls.qualified_name,
        element_name=element,
        source_line=line,
        message=message,
    )


# ---------------------------------------------------------------------------
# The twelve rules
# ---------------------------------------------------------------------------


def detect_iij(
    cls: ClassModel, facts: ClassFacts, index: TypeIndex, cfg: RuleConfig, file_path: str = ""
) -> list[Finding]:
    """Injected attribute used somewhere but not in every body method;
    attributes never used at all are left to USI."""
    body_names = {m.name for m in cls.body_methods()}
    if not body_names:
        return []
    findings = []
    for point in facts.injection_points:
        if point.form is not InjectionForm.FIELD:
            continue
        refs = facts.reference_set(point.attribute_name)
        if refs.reading_methods and not body_names <= refs.reading_methods:
            unused_in = ", ".join(sorted(body_names - refs.reading_methods))
            findings.append(
                _finding(
                    "IIJ",
                    file_path,
                    cls,
                    point.attribute_name,
                    point.source_line,
                    f"injected attribute '{point.attribute_name}' is not read in: {unused_in}",
                )
            )
    return findings


def detect_cci(
    cls: ClassModel, facts: ClassFacts, index: TypeIndex, cfg: RuleConfig, file_path: str = ""
) -> list[Finding]:
    """Injection declared with a concrete class type; unresolved types are
    exempt."""
    findings = []
    for point in facts.injection_points:
        if resolve_type_kind(point.declared_type_name, index) is ResolvedKind.CONCRETE:
            type_name = base_type_name(point.declared_type_name)
            findings.append(
                _finding(
                    "CCI",
                    file_path,
                    cls,
                    point.attribute_name,
                    point.source_line,
                    f"injected attribute '{point.attribute_name}' has concrete type '{type_name}'",
                )
            )
    return findings


def detect_cpm(
    cls: ClassModel, facts: ClassFacts, index: TypeIndex, cfg: RuleConfig, file_path: str = ""
) -> list[Finding]:
    """Producer method with cyclomatic complexity above the threshold."""
    findings = []
    for producer in facts.producer_methods:
        if not producer.method.has_body:
            continue
        cc = cyclomatic_complexity(producer.method)
        if cc > cfg.cpm_cc_threshold:
            findings.append(
                _finding(
                    "CPM",
                    file_path,
                    cls,
                    producer.method.name,
                    producer.method.source_span[0],
                    f"producer method '{producer.method.name}' has complexity {cc} "
                    f"(threshold {cfg.cpm_cc_threshold})",
                )
            )
    return findings


def detect_fdc(
    cls: ClassModel, facts: ClassFacts, index: TypeIndex, cfg: RuleConfig, file_path: str = ""
) -> list[Finding]:
    """Class whose complexity sum and injected-attribute count are both
    over the configured limits; one finding per class."""
    attributes = {p.attribute_name for p in facts.injection_points}
    if len(attributes) < cfg.fdc_min_injections:
        return []
    cc_sum = class_complexity_sum(cls, include_constructors=cfg.include_constructors_in_fdc)
    if cc_sum <= cfg.fdc_cc_threshold:
        return []
    return [
        _finding(
            "FDC",
            file_path,
            cls,
            cls.simple_name,
            cls.source_span[0],
            f"class complexity {cc_sum} with {len(attributes)} injected attributes "
            f"(thresholds: complexity > {cfg.fdc_cc_threshold}, injections >= {cfg.fdc_min_injections})",
        )
    ]


def detect_usi(
    cls: ClassModel, facts: ClassFacts, index: TypeIndex, cfg: RuleConfig, file_path: str = ""
) -> list[Finding]:
    """Field injection with no reference of any kind in the class."""
    findings = []
    for point in facts.injection_points:
        if point.form is not InjectionForm.FIELD:
            continue
        if facts.reference_set(point.attribute_name).is_empty():
            findings.append(
                _finding(
                    "USI",
                    file_path,
                    cls,
                    point.attribute_name,
                    point.source_line,
                    f"injected attribute '{point.attribute_name}' is never used",
                )
            )
    return findings


def detect_sdp(
    cls: ClassModel, facts: ClassFacts, index: TypeIndex, cfg: RuleConfig, file_path: str = ""
) -> list[Finding]:
    """Dependency obtained from a static fabric or service-locator style
    call: the receiver type or method name matches a configured substring
    and the call's result is assigned or returned."""
    findings = []
    for site in facts.call_sites:
        if not site.result_used:
            continue
        receiver = (site.receiver_type_name or "").lower()
        method = site.invoked_name.lower()
        matched = next(
            (s for s in cfg.sdp_name_substrings if s in receiver or s in method), None
        )
        if matched is None:
            continue
        described = site.receiver_type_name or site.invoked_name
        findings.append(
            _finding(
                "SDP",
                file_path,
                cls,
                site.enclosing_method,
                site.line,
                f"dependency obtained via '{described}.{site.invoked_name}' "
                f"(name matches '{matched}')",
            )
        )
    return findings


def detect_dcc(
    cls: ClassModel, facts: ClassFacts, index: TypeIndex, cfg: RuleConfig, file_path: str = ""
) -> list[Finding]:
    """Direct DI-container lookup; one finding per (file, line)."""
    findings = []
    for call in facts.container_calls:
        what = (
            "Spring context getBean"
            if call.call_kind is ContainerCallKind.SPRING_GET_BEAN
            else "Guice injector getInstance"
        )
        findings.append(
            _finding(
                "DCC",
                file_path,
                cls,
                call.enclosing_method,
                call.source_line,
                f"direct container call: {what} on '{call.receiver_type_name}'",
            )
        )
    return findings


def detect_owi(
    cls: ClassModel, facts: ClassFacts, index: TypeIndex, cfg: RuleConfig, file_path: str = ""
) -> list[Finding]:
    """Injected field handed out of the class: passed to another object's
    method or returned by a public/protected method."""
    findings = []
    for point in facts.injection_points:
        if point.form is not InjectionForm.FIELD:
            continue
        refs = facts.reference_set(point.attribute_name)
        pass_sites = list(refs.passed_as_argument_sites)
        if cfg.owi_include_same_class_passes:
            pass_sites += refs.same_class_pass_sites
        for method_name, line in pass_sites:
            findings.append(
                _finding(
                    "OWI",
                    file_path,
                    cls,
                    point.attribute_name,
                    line,
                    f"injected attribute '{point.attribute_name}' is passed to another "
                    f"class's method in '{method_name}'",
                )
            )
        for method_name, line in refs.returned_by_getter_sites:
            findings.append(
                _finding(
                    "OWI",
                    file_path,
                    cls,
                    point.attribute_name,
                    line,
                    f"injected attribute '{point.attribute_name}' is returned by '{method_name}'",
                )
            )
    return findings


def detect_fco(
    cls: ClassModel, facts: ClassFacts, index: TypeIndex, cfg: RuleConfig, file_path: str = ""
) -> list[Finding]:
    """Injection declared with a framework-specific annotation."""
    findings = []
    for point in facts.injection_points:
        if point.annotation_name in cfg.framework_specific_annotations:
            findings.append(
                _finding(
                    "FCO",
                    file_path,
                    cls,
                    point.attribute_name,
                    point.source_line,
                    f"injection of '{point.attribute_name}' uses framework-specific "
                    f"annotation @{point.annotation_name}",
                )
            )
    return findings


def detect_odi(
    cls: ClassModel, facts: ClassFacts, index: TypeIndex, cfg: RuleConfig, file_path: str = ""
) -> list[Finding]:
    """Injected field open to modification: a public/protected non-injection
    setter reassigns it, or the field itself is public/protected."""
    findings = []
    for point in facts.injection_points:
        if point.form is not InjectionForm.FIELD:
            continue
        refs = facts.reference_set(point.attribute_name)
        for method_name, line in refs.setter_assignment_sites:
            if method_name in facts.annotated_setter_methods:
                continue
            findings.append(
                _finding(
                    "ODI",
                    file_path,
                    cls,
                    method_name,
                    line,
                    f"injected attribute '{point.attribute_name}' can be replaced through "
                    f"public setter '{method_name}'",
                )
            )
        if refs.externally_visible:
            findings.append(
                _finding(
                    "ODI",
                    file_path,
                    cls,
                    point.attribute_name,
                    point.source_line,
                    f"injected attribute '{point.attribute_name}' is declared "
                    f"public or protected",
                )
            )
    return findings


def detect_mai(
    cls: ClassModel, facts: ClassFacts, index: TypeIndex, cfg: RuleConfig, file_path: str = ""
) -> list[Finding]:
    """The same injected value assigned to two or more attributes
    (superclass attributes included); one finding per alias group."""
    findings = []
    reported: set[frozenset] = set()
    for point in facts.injection_points:
        refs = facts.reference_set(point.attribute_name)
        if not refs.aliased_targets:
            continue
        group = frozenset({point.attribute_name} | refs.aliased_targets)
        if group in reported:
            continue
        reported.add(group)
        names = ", ".join(sorted(group))
        findings.append(
            _finding(
                "MAI",
                file_path,
                cls,
                point.attribute_name,
                point.source_line,
                f"one injected instance is assigned to several attributes: {names}",
            )
        )
    return findings


def detect_mfi(
    cls: ClassModel, facts: ClassFacts, index: TypeIndex, cfg: RuleConfig, file_path: str = ""
) -> list[Finding]:
    """One attribute registered for injection through two or more forms;
    one finding per attribute, not per injection point."""
    by_attribute: dict[str, list] = {}
    for point in facts.injection_points:
        by_attribute.setdefault(point.attribute_name, []).append(point)
    findings = []
    for attribute, points in sorted(by_attribute.items()):
        forms = {p.form for p in points}
        if len(forms) < 2:
            continue
        first = min(points, key=lambda p: p.source_line)
        form_names = ", ".join(sorted(f.value for f in forms))
        findings.append(
            _finding(
                "MFI",
                file_path,
                cls,
                attribute,
                first.source_line,
                f"attribute '{attribute}' is injected through multiple forms: {form_names}",
            )
        )
    return findings


_DETECTORS: dict[str, Callable] = {
    "IIJ": detect_iij,
    "CCI": detect_cci,
    "CPM": detect_cpm,
    "FDC": detect_fdc,
    "USI": detect_usi,
    "SDP": detect_sdp,
    "DCC": detect_dcc,
    "OWI": detect_owi,
    "FCO": detect_fco,
    "ODI": detect_odi,
    "MAI": detect_mai,
    "MFI": detect_mfi,
}


def run_all(
    corpus: list[SourceUnit],
    cfg: Optional[RuleConfig] = None,
    index: Optional[TypeIndex] = None,
) -> list[Finding]:
    """Apply every enabled detector over the corpus.

    Output is sorted by (file, line, rule) and deduplicated on the finding
    identity tuple, so identical corpora yield byte-identical reports
    regardless of input order.
    """
    cfg = (cfg or RuleConfig()).validate()
    if index is None:
        index = index_corpus(corpus)
    findings: list[Finding] = []
    for unit in corpus:
        for cls in unit.type_decls:
            facts = gather_facts(
                cls,
                recognize_resource=cfg.recognize_resource_annotation,
                context_type_names=cfg.dcc_context_type_names,
            )
            for rule_id in RULE_ORDER:
                if rule_id not in cfg.enabled_rules:
                    continue
                findings.extend(_DETECTORS[rule_id](cls, facts, index, cfg, unit.file_path))
    findings.sort(key=lambda f: f.sort_key)
    unique: dict[tuple, Finding] = {}
    for finding in findings:
        if finding.rule_id == "DCC":
            # container calls deduplicate on (file, line) alone
            key = ("DCC", finding.file_path, finding.source_line)
        else:
            key = finding.identity
        unique.setdefault(key, finding)
    return sorted(unique.values(), key=lambda f: f.sort_key)
