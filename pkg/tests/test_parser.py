import pytest

from classaudit.errors import ParseError, SpanOutOfBounds
from classaudit.javamodel import count_loc_and_blank, parse_compilation_unit


def parse(code, file_id="Test.java"):
    return parse_compilation_unit(code, file_id)


def flat(classes):
    out = []
    stack = list(classes)
    while stack:
        c = stack.pop(0)
        out.append(c)
        stack.extend(c.nested)
    return out


def test_minimal_class():
    classes = parse("class A { int x; void f(){x=1;} }")
    assert len(classes) == 1
    a = classes[0]
    assert a.name == "A"
    assert [attr.name for attr in a.attributes] == ["x"]
    assert [m.name for m in a.methods] == ["f"]
    assert a.methods[0].accessed_attributes == {"x"}


def test_interface_produces_no_unit():
    assert parse("interface I { void f(); }") == []


def test_enum_record_annotation_produce_no_unit():
    assert parse("enum E { A, B }") == []
    assert parse("record P(int x, int y) { }") == []
    assert parse("@interface Marker { int value() default 1; }") == []


def test_nested_classes_are_independent():
    classes = flat(parse("class A { class B { int y; } int x; }"))
    names = {c.name: c for c in classes}
    assert set(names) == {"A", "B"}
    assert [a.name for a in names["A"].attributes] == ["x"]
    assert [a.name for a in names["B"].attributes] == ["y"]


def test_class_nested_in_interface_is_a_unit():
    classes = flat(parse("interface I { class Impl { int z; } }"))
    assert [c.name for c in classes] == ["Impl"]
    assert classes[0].qualified_name == "I.Impl"


def test_qualified_names_include_package_and_enclosing():
    code = "package a.b;\nclass Outer { class Inner {} }"
    classes = flat(parse(code))
    assert {c.qualified_name for c in classes} == {"a.b.Outer", "a.b.Outer.Inner"}


def test_anonymous_class_is_not_a_unit():
    code = """
class A {
    Runnable r() {
        return new Runnable() { public void run() {} };
    }
}
"""
    assert [c.name for c in flat(parse(code))] == ["A"]


def test_local_class_inside_method_is_not_a_unit():
    code = "class A { void f() { class Local { int q; } } }"
    assert [c.name for c in flat(parse(code))] == ["A"]


def test_constructor_excluded_from_methods():
    code = "class A { int x; A(int x) { this.x = x; } int get() { return x; } }"
    a = parse(code)[0]
    assert [m.name for m in a.methods] == ["get"]


def test_factory_method_named_like_class_with_return_type_is_a_method():
    code = "class A { static A A() { return null; } }"
    a = parse(code)[0]
    assert [m.name for m in a.methods] == ["A"]


def test_static_member_detection():
    assert parse("class A { static int x; }")[0].has_static_member
    assert parse("class A { static void f() {} }")[0].has_static_member
    assert not parse("class A { int x; void f() {} }")[0].has_static_member
    # initializer blocks are neither methods nor attributes
    assert not parse("class A { static { } int x; }")[0].has_static_member


def test_parameter_type_normalization():
    code = """
class A {
    void a(List< String > x) {}
    void b(List<Integer> x) {}
    void c(String[] x) {}
    void d(String x[]) {}
    void e(int... x) {}
    void f(java.util.Map<String, int[]> x) {}
}
"""
    a = parse(code)[0]
    types = {m.name: m.parameter_types for m in a.methods}
    assert types["a"] == ["List<String>"]
    assert types["b"] == ["List<Integer>"]
    assert types["c"] == ["String[]"]
    assert types["d"] == ["String[]"]
    assert types["e"] == ["int..."]
    assert types["f"] == ["java.util.Map<String,int[]>"]


def test_multi_declarator_fields_and_initializers():
    code = "class A { int a = 1, b, c = f(1, 2); Runnable r = () -> {}; }"
    a = parse(code)[0]
    assert [attr.name for attr in a.attributes] == ["a", "b", "c", "r"]


def test_field_with_anonymous_class_initializer():
    code = "class A { Runnable r = new Runnable() { public void run() {} }; int z; }"
    a = parse(code)[0]
    assert [attr.name for attr in a.attributes] == ["r", "z"]


def test_abstract_method_counts_with_empty_body():
    code = "abstract class A { abstract int f(int x); }"
    a = parse(code)[0]
    assert [m.name for m in a.methods] == ["f"]
    assert a.methods[0].decision_profile.total() == 0


def test_generic_method_declaration():
    code = "class A { <T> T pick(java.util.List<T> xs) { return xs.get(0); } }"
    a = parse(code)[0]
    assert [m.name for m in a.methods] == ["pick"]
    assert a.methods[0].parameter_types == ["java.util.List<T>"]


def test_line_span_and_loc(metrics_dir):
    src = (metrics_dir / "PerfectCohesion.java").read_text()
    a = parse(src)[0]
    assert a.line_span == (1, 11)
    assert a.loc == 11
    assert a.blank_lines == 2


def test_count_loc_and_blank_examples():
    text = "class A {\n\nint x;\n  \nint y;\n}\n"
    assert count_loc_and_blank(text, (1, 6)) == (6, 2)
    assert count_loc_and_blank("class A {}", (1, 1)) == (1, 0)
    # mixed tabs/space-only lines, hand-counted
    text = "a\n\t\nb\n   \t \nc\n"
    assert count_loc_and_blank(text, (1, 5)) == (5, 2)


def test_count_loc_span_out_of_bounds():
    with pytest.raises(SpanOutOfBounds):
        count_loc_and_blank("one\ntwo\n", (1, 3))
    with pytest.raises(SpanOutOfBounds):
        count_loc_and_blank("one\ntwo\n", (0, 1))


def test_unbalanced_braces_raise_parse_error():
    with pytest.raises(ParseError):
        parse("class A { void f() { }")


def test_parse_is_deterministic():
    code = open(__file__.replace("test_parser.py", "fixtures/metrics/BranchCascade.java")).read()
    first = parse(code)
    second = parse(code)
    assert repr(first) == repr(second)


def test_sibling_class_loc_sum_within_file(corpus_dir):
    # nesting-free file: per-class spans cannot overlap, sum stays in bounds
    text = (corpus_dir / "Palette.java").read_text()
    classes = parse(text)
    total_lines = len(text.splitlines())
    assert sum(c.loc for c in classes) <= total_lines


def test_nested_span_included_in_enclosing(corpus_dir):
    text = (corpus_dir / "Invoice.java").read_text()
    outer = parse(text)[0]
    inner = outer.nested[0]
    assert outer.line_span[0] <= inner.line_span[0] <= inner.line_span[1] <= outer.line_span[1]


def test_accessed_attributes_always_subset(metrics_dir, corpus_dir):
    for directory in (metrics_dir, corpus_dir):
        for path in sorted(directory.glob("*.java")):
            for cls in flat(parse(path.read_text(), str(path))):
                names = cls.attribute_names()
                for m in cls.methods:
                    assert m.accessed_attributes <= names, (path, cls.name, m.name)


def test_annotated_class_span_starts_at_annotation():
    code = "@Deprecated\nclass A {\n int x;\n}\n"
    a = parse(code)[0]
    assert a.line_span == (1, 4)


def test_two_top_level_classes():
    classes = parse("class A { }\nclass B { }")
    assert [c.name for c in classes] == ["A", "B"]
