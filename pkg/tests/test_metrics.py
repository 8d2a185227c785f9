import random

import pytest

from dilint.metrics import class_complexity_sum, complexity_records, cyclomatic_complexity
from dilint.source_model import parse_unit

from conftest import CATALOG, FIXTURES


def method_of(source, name="f"):
    cls = parse_unit(source, "m.java").type_decls[0]
    return next(m for m in cls.methods if m.name == name)


def test_empty_body_has_base_complexity():
    assert cyclomatic_complexity(method_of("class X { void f() { } }")) == 1


def test_if_with_and_condition():
    assert cyclomatic_complexity(method_of("class X { void f() { if (a && b) { g(); } } }")) == 3


def test_producer_figure_complexity_is_four():
    source = (CATALOG / "cpm" / "occurrence" / "C.java").read_text()
    cls = parse_unit(source, "C.java").type_decls[0]
    assert cyclomatic_complexity(cls.methods[0]) == 4


def test_bodyless_method_rejected():
    cls = parse_unit("interface I { void f(); }", "i.java").type_decls[0]
    with pytest.raises(ValueError):
        cyclomatic_complexity(cls.methods[0])


def test_interface_class_sum_is_zero():
    cls = parse_unit("interface I { void f(); int g(); }", "i.java").type_decls[0]
    assert class_complexity_sum(cls) == 0


def test_two_empty_methods_sum_to_two():
    cls = parse_unit("class X { void a() { } void b() { } }", "x.java").type_decls[0]
    assert class_complexity_sum(cls) == 2


def test_fixture_class_sums_to_47():
    # per-method complexities 5, 9, 13, 12, 8
    source = (FIXTURES / "boundary" / "FdcFires.java").read_text()
    cls = parse_unit(source, "FdcFires.java").type_decls[0]
    records = complexity_records(cls)
    assert sorted(r.cc for r in records) == [5, 8, 9, 12, 13]
    assert class_complexity_sum(cls) == 47


def test_constructor_counts_in_class_sum_unless_disabled():
    source = """
    class C {
        C() { if (a) { g(); } }
        void f() { if (b) { g(); } }
    }
    """
    cls = parse_unit(source, "c.java").type_decls[0]
    assert class_complexity_sum(cls) == 4
    assert class_complexity_sum(cls, include_constructors=False) == 2


def test_switch_default_not_counted():
    source = """
    class X { void f() {
        switch (k) { case 1: a(); break; case 2: b(); break; default: c(); }
    } }
    """
    assert cyclomatic_complexity(method_of(source)) == 3


def test_multi_catch_is_one_clause():
    source = """
    class X { void f() {
        try { a(); } catch (IOException | RuntimeException e) { b(); }
    } }
    """
    assert cyclomatic_complexity(method_of(source)) == 2


def test_finally_not_counted():
    source = "class X { void f() { try { a(); } finally { b(); } } }"
    assert cyclomatic_complexity(method_of(source)) == 1


def test_lambda_body_contributes_to_enclosing_method():
    source = """
    class X { void f(List<String> xs) {
        xs.forEach(x -> { if (x != null) { use(x); } });
    } }
    """
    assert cyclomatic_complexity(method_of(source)) == 2


def test_additivity_and_empty_method_increment():
    base = "class X { void a() { if (p) { g(); } } void b() { while (q) { g(); } } "
    cls = parse_unit(base + "}", "x.java").type_decls[0]
    with_extra = parse_unit(base + "void c() { } }", "x.java").type_decls[0]
    assert class_complexity_sum(cls) == sum(r.cc for r in complexity_records(cls))
    assert class_complexity_sum(with_extra) == class_complexity_sum(cls) + 1


def test_order_independence():
    methods = [
        "void a() { if (p) { g(); } }",
        "void b() { for (;;) { break; } }",
        "void c() { x = p ? 1 : 2; }",
    ]
    rng = random.Random(11)
    reference = None
    for _ in range(5):
        rng.shuffle(methods)
        cls = parse_unit("class X { " + " ".join(methods) + " }", "x.java").type_decls[0]
        total = class_complexity_sum(cls)
        if reference is None:
            reference = total
        assert total == reference


def test_inserting_an_if_raises_complexity_by_one():
    body = "x = 1; if (a) { x = 2; } while (b) { x = 3; }"
    with_if = "if (c) { y = 0; } " + body
    before = cyclomatic_complexity(method_of(f"class X {{ void f() {{ {body} }} }}"))
    after = cyclomatic_complexity(method_of(f"class X {{ void f() {{ {with_if} }} }}"))
    assert after == before + 1


@pytest.mark.parametrize(
    "snippet, expected_delta",
    [
        ("if (a) { g(); }", 1),
        ("for (int i = 0; i < 2; i++) { g(); }", 1),
        ("for (String s : xs) { g(); }", 1),
        ("while (a) { g(); }", 1),
        ("do { g(); } while (a);", 1),
        ("switch (k) { case 1: g(); }", 1),
        ("try { g(); } catch (E e) { h(); }", 1),
        ("x = a && b;", 1),
        ("x = a || b;", 1),
        ("x = a ? 1 : 2;", 1),
    ],
)
def test_each_decision_token_counts_exactly_once(snippet, expected_delta):
    cc = cyclomatic_complexity(method_of(f"class X {{ void f() {{ {snippet} }} }}"))
    assert cc == 1 + expected_delta
