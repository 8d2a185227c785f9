from dilint.injection import (
    ContainerCallKind,
    InjectionAnnotation,
    InjectionForm,
    analyze_references,
    find_container_calls,
    find_injection_points,
    find_producer_methods,
    gather_facts,
)
from dilint.source_model import parse_unit

from conftest import CATALOG


def load(relative):
    path = CATALOG / relative
    return parse_unit(path.read_text(), path.name).type_decls[0]


# -- injection points --


def test_intransigent_figure_has_two_field_injections():
    points = find_injection_points(load("iij/occurrence/A.java"))
    assert [(p.attribute_name, p.form, p.annotation) for p in points] == [
        ("example0", InjectionForm.FIELD, InjectionAnnotation.JSR330_INJECT),
        ("example1", InjectionForm.FIELD, InjectionAnnotation.JSR330_INJECT),
    ]


def test_multiple_forms_figure_has_field_and_setter_entries():
    points = find_injection_points(load("mfi/occurrence/ExampleBusiness.java"))
    assert [(p.attribute_name, p.form) for p in points] == [
        ("exampleDAO", InjectionForm.FIELD),
        ("exampleDAO", InjectionForm.SETTER),
    ]


def test_class_without_annotations_has_no_injection_points():
    cls = parse_unit("class Plain { private int x; void f() { x = 1; } }", "p.java").type_decls[0]
    assert find_injection_points(cls) == []


def test_autowired_maps_to_spring_annotation():
    cls = parse_unit("class J { @Autowired private Parser parser; }", "j.java").type_decls[0]
    points = find_injection_points(cls)
    assert points[0].annotation is InjectionAnnotation.SPRING_AUTOWIRED
    assert points[0].annotation_name == "Autowired"


def test_qualified_guice_inject_is_distinguished():
    cls = parse_unit(
        "class G { @com.google.inject.Inject private Parser parser; }", "g.java"
    ).type_decls[0]
    assert find_injection_points(cls)[0].annotation is InjectionAnnotation.GUICE_INJECT_ALIAS


def test_resource_annotation_is_off_by_default():
    cls = parse_unit("class R { @Resource private Parser parser; }", "r.java").type_decls[0]
    assert find_injection_points(cls) == []
    assert len(find_injection_points(cls, recognize_resource=True)) == 1


def test_constructor_injection_yields_one_point_per_assigned_field():
    source = """
    class Svc {
        private Parser parser;
        private Sink sink;

        @Inject
        public Svc(Parser p, Sink s) {
            this.parser = p;
            this.sink = s;
        }
    }
    """
    points = find_injection_points(parse_unit(source, "s.java").type_decls[0])
    assert [(p.attribute_name, p.form, p.declared_type_name) for p in points] == [
        ("parser", InjectionForm.CONSTRUCTOR, "Parser"),
        ("sink", InjectionForm.CONSTRUCTOR, "Sink"),
    ]


def test_setter_attribute_prefers_field_declared_in_class():
    # the annotated setter assigns an inherited attribute first, then its own
    cls = load("mai/occurrence/ExampleBusiness.java")
    points = find_injection_points(cls)
    assert [(p.attribute_name, p.form) for p in points] == [
        ("exampleDAO", InjectionForm.SETTER)
    ]


def test_annotated_method_without_field_assignment_is_not_a_setter_injection():
    source = """
    class N {
        @Inject
        public void configure(Parser p) {
            helper(p);
        }
    }
    """
    assert find_injection_points(parse_unit(source, "n.java").type_decls[0]) == []


def test_injection_points_attach_to_real_attributes(catalog_units):
    from dilint.injection import summarize_class

    for unit in catalog_units:
        for cls in unit.type_decls:
            assigned = {
                ev.target_name
                for summary in summarize_class(cls)
                for ev in summary.assigns
                if ev.target_is_field_like
            }
            for point in find_injection_points(cls):
                if point.form is InjectionForm.FIELD:
                    assert cls.field_named(point.attribute_name) is not None
                else:
                    assert (
                        cls.field_named(point.attribute_name) is not None
                        or point.attribute_name in assigned
                    )


# -- producer methods --


def test_complex_producer_figure():
    producers = find_producer_methods(load("cpm/occurrence/C.java"))
    assert [(p.method.name, p.annotation_name) for p in producers] == [
        ("generateReport", "Produces")
    ]


def test_bean_producer_figure():
    producers = find_producer_methods(load("sdp/resolution/ProjectConfigBeans.java"))
    assert [(p.method.name, p.annotation_name) for p in producers] == [
        ("provideDataSource", "Bean")
    ]


def test_provides_annotation_recognized():
    cls = parse_unit(
        "class M { @Provides public Parser parser() { return new Parser(); } }", "m.java"
    ).type_decls[0]
    assert find_producer_methods(cls)[0].annotation_name == "Provides"


def test_plain_methods_are_not_producers():
    cls = parse_unit("class P { public int f() { return 1; } }", "p.java").type_decls[0]
    assert find_producer_methods(cls) == []


def test_void_producer_is_excluded():
    cls = parse_unit("class V { @Bean public void setup() { } }", "v.java").type_decls[0]
    assert find_producer_methods(cls) == []


# -- reference analysis --


def test_non_used_injection_has_empty_reference_set():
    refs = analyze_references(load("usi/occurrence/E.java"), "one")
    assert refs.is_empty()
    assert refs.reading_methods == set()


def test_open_window_figure_reference_set():
    refs = analyze_references(load("owi/occurrence/F.java"), "parser")
    assert refs.reading_methods == {"execute"}
    assert refs.passed_as_argument_sites == [("execute", 16)]
    assert [site for site, _ in refs.returned_by_getter_sites] == ["getParser"]


def test_multiple_assigned_figure_aliases_superclass_attribute():
    refs = analyze_references(load("mai/occurrence/ExampleBusiness.java"), "exampleDAO")
    assert refs.aliased_targets == {"genericDAO"}


def test_parameter_shadows_field():
    source = """
    class S {
        private Parser parser;
        void use(Parser parser) { parser.parse(); }
        void real() { parser.parse(); }
    }
    """
    refs = analyze_references(parse_unit(source, "s.java").type_decls[0], "parser")
    assert refs.reading_methods == {"real"}


def test_local_variable_shadows_field():
    source = """
    class S {
        private Parser parser;
        void f() {
            Parser parser = make();
            parser.parse();
        }
    }
    """
    refs = analyze_references(parse_unit(source, "s.java").type_decls[0], "parser")
    assert refs.reading_methods == set()


def test_this_access_is_never_shadowed():
    source = """
    class S {
        private Parser parser;
        void f(Parser parser) {
            this.parser.parse();
        }
    }
    """
    refs = analyze_references(parse_unit(source, "s.java").type_decls[0], "parser")
    assert refs.reading_methods == {"f"}


def test_trivial_private_getter_still_counts_as_reading():
    # the return site is not recorded for private methods, so the read is
    source = """
    class S {
        @Inject private Parser parser;
        private Parser grab() { return parser; }
    }
    """
    refs = analyze_references(parse_unit(source, "s.java").type_decls[0], "parser")
    assert refs.returned_by_getter_sites == []
    assert refs.reading_methods == {"grab"}


def test_non_trivial_getter_counts_as_reading_too():
    source = """
    class S {
        @Inject private Parser parser;
        public Parser getParser() {
            log();
            return parser;
        }
    }
    """
    refs = analyze_references(parse_unit(source, "s.java").type_decls[0], "parser")
    assert [site for site, _ in refs.returned_by_getter_sites] == ["getParser"]
    assert refs.reading_methods == {"getParser"}


def test_externally_visible_fields_flagged():
    source = "class S { @Inject protected Parser parser; }"
    refs = analyze_references(parse_unit(source, "s.java").type_decls[0], "parser")
    assert refs.externally_visible


def test_reading_methods_are_sound(catalog_units):
    # every reported reading method must actually have a body in the class
    for unit in catalog_units:
        for cls in unit.type_decls:
            body_names = {m.name for m in cls.body_methods()}
            for field in cls.fields:
                refs = analyze_references(cls, field.name)
                assert refs.reading_methods <= body_names


# -- container calls --


def test_direct_container_call_figure():
    calls = find_container_calls(load("dcc/occurrence/F.java"))
    assert len(calls) == 1
    call = calls[0]
    assert call.call_kind is ContainerCallKind.SPRING_GET_BEAN
    assert call.method == "getBean"
    assert call.enclosing_method == "getRepository"


def test_resolution_half_has_no_container_calls():
    assert find_container_calls(load("dcc/resolution/F_Without_Container_Call.java")) == []


def test_receiver_type_guard_rejects_non_context_receivers():
    source = 'class G { private Map someMap; void f() { Object x = someMap.getBean("k"); } }'
    assert find_container_calls(parse_unit(source, "g.java").type_decls[0]) == []


def test_guice_injector_get_instance():
    source = """
    class H {
        @Inject private Injector injector;
        Parser make() { return injector.getInstance(Parser.class); }
    }
    """
    calls = find_container_calls(parse_unit(source, "h.java").type_decls[0])
    assert [c.call_kind for c in calls] == [ContainerCallKind.GUICE_GET_INSTANCE]


def test_same_line_container_calls_deduplicate():
    source = (
        "class D { private ApplicationContext ctx;\n"
        'void f() { Object a = ctx.getBean("a"); Object b = ctx.getBean("b"); }\n'
        "}"
    )
    calls = find_container_calls(parse_unit(source, "d.java").type_decls[0])
    assert len(calls) == 1


def test_local_context_variable_is_recognized():
    source = """
    class L {
        void f(ApplicationContext ctx) {
            Object a = ctx.getBean("a");
        }
    }
    """
    calls = find_container_calls(parse_unit(source, "l.java").type_decls[0])
    assert len(calls) == 1


# -- bundled facts --


def test_gather_facts_collects_call_sites_with_result_usage():
    facts = gather_facts(load("sdp/occurrence/E.java"))
    by_name = {site.invoked_name: site for site in facts.call_sites}
    assert by_name["getInstance"].result_used
    assert by_name["getInstance"].receiver_type_name == "ServiceLocator"
    assert not by_name["insert"].result_used
