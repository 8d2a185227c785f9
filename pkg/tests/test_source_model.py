import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dilint.source_model import (
    Invocation,
    Literal,
    ResolvedKind,
    TypeKind,
    index_corpus,
    iter_tree,
    parse_unit,
    resolve_type_kind,
)

from conftest import CATALOG


def test_minimal_unit_with_injected_field():
    unit = parse_unit("public class A { @Inject private IFoo foo; }", "A.java")
    assert unit.parse_diagnostics == []
    assert len(unit.type_decls) == 1
    cls = unit.type_decls[0]
    assert cls.qualified_name == "A"
    assert cls.kind is TypeKind.CLASS
    assert [f.name for f in cls.fields] == ["foo"]
    assert [a.simple_name for a in cls.fields[0].annotations] == ["Inject"]


def test_interface_with_bodyless_method():
    unit = parse_unit("public interface IFoo { void doSomething(); }", "IFoo.java")
    cls = unit.type_decls[0]
    assert cls.kind is TypeKind.INTERFACE
    assert len(cls.methods) == 1
    assert cls.methods[0].body_statements is None
    assert cls.constructors == []


def test_container_call_figure_models_the_invocation():
    source = (CATALOG / "dcc" / "occurrence" / "F.java").read_text()
    cls = parse_unit(source, "F.java").type_decls[0]
    assert len([f for f in cls.fields if f.annotations]) == 2
    get_repository = next(m for m in cls.methods if m.name == "getRepository")
    calls = [n for n in iter_tree(get_repository.body_statements) if isinstance(n, Invocation)]
    assert len(calls) == 1
    call = calls[0]
    assert call.name == "getBean"
    assert getattr(call.receiver, "name", None) == "context"
    assert len(call.arguments) == 1
    assert isinstance(call.arguments[0], Literal)
    assert call.arguments[0].kind == "string"


def test_package_name_becomes_qualified_prefix():
    unit = parse_unit("package a.b;\nclass X {}", "X.java")
    assert unit.package_name == "a.b"
    assert unit.type_decls[0].qualified_name == "a.b.X"


def test_bom_is_skipped():
    unit = parse_unit("﻿package p;\nclass X {}", "X.java")
    assert unit.package_name == "p"
    assert unit.parse_diagnostics == []


def test_nested_and_anonymous_class_names():
    source = """
    package q;
    public class Outer {
        class Inner { }
        void run() {
            Runnable r = new Runnable() {
                public void run() { }
            };
        }
    }
    """
    unit = parse_unit(source, "Outer.java")
    names = [t.qualified_name for t in unit.type_decls]
    assert names == ["q.Outer", "q.Outer.Inner", "q.Outer$anon1"]


def test_recovery_keeps_members_after_garbage():
    source = """
    public class Broken {
        void good() { }
        %%% not java %%%
        void alsoGood() { }
    }
    """
    unit = parse_unit(source, "Broken.java")
    assert [m.name for m in unit.type_decls[0].methods] == ["good", "alsoGood"]
    assert unit.parse_diagnostics


def test_unparseable_text_yields_diagnostics_not_errors():
    unit = parse_unit("this is not java at all ;;;", "bad.java")
    assert unit.type_decls == []
    assert unit.parse_diagnostics


@settings(max_examples=200, deadline=None)
@given(st.text(max_size=300))
def test_parse_unit_is_total(text):
    unit = parse_unit(text, "any.java")
    assert unit.file_path == "any.java"


@settings(max_examples=50, deadline=None)
@given(
    st.text(
        alphabet='abcz {}()<>;,.@"/*=%&|?:+-[]0123456789\n\t\'',
        max_size=400,
    )
)
def test_parse_unit_is_total_on_java_like_soup(text):
    parse_unit(text, "soup.java")


def test_round_trip_stability_over_catalog_sources():
    for path in sorted(CATALOG.rglob("*.java")):
        text = path.read_text()
        first = parse_unit(text, path.name)
        second = parse_unit(text, path.name)
        assert first == second


REALISTIC_SOURCE = r'''
package com.example.app.service;

import java.util.*;
import javax.inject.Inject;

@Service("orderService")
public class OrderService<T extends Comparable<? super T>> extends BaseService
        implements IOrderService, Auditable {

    private static final String DEFAULT_REGION = "us-east\n\"quoted\"";
    public static final int MAX_RETRIES = 3;

    @Inject
    private Map<String, List<? extends OrderHandler>> handlers;
    private volatile int state = MAX_RETRIES > 2 ? 1 : 0;

    @Inject
    public OrderService(OrderRepository repo, @Named("audit") AuditLog log) {
        this.repo = repo;
        this.log = log;
    }

    @Override
    @Transactional(readOnly = true, timeout = 30)
    public Optional<Order> find(long id) throws NotFoundException {
        Order cached = (Order) cache.get(id);
        if (cached != null && !cached.isStale() || force) {
            return Optional.of(cached);
        }
        for (Map.Entry<String, List<? extends OrderHandler>> e : handlers.entrySet()) {
            e.getValue().stream()
                .filter(h -> h.supports(id))
                .map(OrderHandler::name)
                .forEach(name -> audit(name, id));
        }
        try (Connection c = pool.acquire(); Statement s = c.createStatement()) {
            int attempts = 0;
            do {
                attempts++;
                switch (attempts) {
                    case 1, 2 -> retryQuickly();
                    case 3 -> { backOff(); }
                    default -> giveUp();
                }
            } while (attempts < MAX_RETRIES);
        } catch (SQLException | IllegalStateException ex) {
            return Optional.empty();
        } finally {
            metrics.increment("find");
        }
        int[] shifted = new int[] {1 << 2, 8 >> 1, -1 >>> 28};
        state <<= 1;
        label:
        while (true) {
            if (state > 100) break label;
            state += shifted[0];
        }
        assert state >= 0 : "state must stay non-negative";
        Runnable cleanup = () -> { if (state > 0) { state--; } };
        new Thread(cleanup) {
            @Override
            public void run() {
                super.run();
            }
        }.start();
        return repo.byId(id);
    }

    static class Holder {
        @Inject private Validator validator;
        void check(Object o) {
            if (o instanceof Order order && order.valid()) {
                validator.apply(order);
            }
        }
    }

    enum Mode { FAST, SAFE { }, @Deprecated LEGACY("x") }
}
'''


def test_realistic_source_parses_without_diagnostics():
    unit = parse_unit(REALISTIC_SOURCE, "OrderService.java")
    assert unit.parse_diagnostics == []
    names = [t.qualified_name for t in unit.type_decls]
    assert names == [
        "com.example.app.service.OrderService",
        "com.example.app.service.OrderService$anon1",
        "com.example.app.service.OrderService.Holder",
        "com.example.app.service.OrderService.Mode",
    ]
    outer = unit.type_decls[0]
    assert outer.superclass_name == "BaseService"
    assert outer.interface_names == ["IOrderService", "Auditable"]
    assert [p.declared_type_name for p in outer.constructors[0].parameters] == [
        "OrderRepository",
        "AuditLog",
    ]
    anon = unit.type_decls[1]
    assert anon.superclass_name == "Thread"
    assert [m.name for m in anon.methods] == ["run"]


def test_index_corpus_empty():
    index = index_corpus([])
    assert index.by_qualified_name == {}


def test_index_corpus_simple_name_collision():
    units = [
        parse_unit("package a;\nclass X {}", "a/X.java"),
        parse_unit("package b;\nclass X {}", "b/X.java"),
    ]
    index = index_corpus(units)
    assert index.lookup("a.X") is not None
    assert index.lookup("b.X") is not None
    assert "X" in index.ambiguous_simple_names
    assert index.lookup("X") is None


def test_index_corpus_duplicate_qualified_first_wins():
    first = parse_unit("package a;\nclass X { int one; }", "1.java")
    second = parse_unit("package a;\nclass X { int two; }", "2.java")
    index = index_corpus([first, second])
    assert index.duplicate_qualified_names == ["a.X"]
    assert index.lookup("a.X").fields[0].name == "one"


@pytest.fixture(scope="module")
def cci_index():
    files = [
        CATALOG / "cci" / "occurrence" / "B.java",
        CATALOG / "cci" / "support" / "ConcreteClassExample.java",
        CATALOG / "cci" / "support" / "IExampleInterface.java",
    ]
    return index_corpus([parse_unit(p.read_text(), p.name) for p in files])


def test_concrete_class_corpus_kinds(cci_index):
    assert cci_index.lookup("ConcreteClassExample").kind is TypeKind.CLASS
    assert cci_index.lookup("IExampleInterface").kind is TypeKind.INTERFACE


@pytest.mark.parametrize(
    "type_name, expected",
    [
        ("IExampleInterface", ResolvedKind.INTERFACE),
        ("ConcreteClassExample", ResolvedKind.CONCRETE),
        ("ConcreteClassExample[]", ResolvedKind.CONCRETE),
        ("List<String>", ResolvedKind.UNKNOWN),
        ("cci.support.IExampleInterface", ResolvedKind.INTERFACE),
    ],
)
def test_resolve_type_kind(cci_index, type_name, expected):
    assert resolve_type_kind(type_name, cci_index) is expected


def test_resolve_type_kind_on_empty_index():
    assert resolve_type_kind("List<String>", index_corpus([])) is ResolvedKind.UNKNOWN


def test_abstract_class_resolves_abstract():
    index = index_corpus([parse_unit("abstract class Base {}", "b.java")])
    assert resolve_type_kind("Base", index) is ResolvedKind.ABSTRACT


def test_enum_resolves_concrete():
    index = index_corpus([parse_unit("enum Color { RED, GREEN }", "c.java")])
    assert resolve_type_kind("Color", index) is ResolvedKind.CONCRETE
