"""Walk one Java class through every metric, step by step.

Run:  python demos/metrics_tour.py
"""

from classaudit import class_metrics, parse_compilation_unit
from classaudit.metrics import method_cc, method_coco

SOURCE = """
class OrderBook {
    int depth;
    int spread;

    void place(int size) {
        if (size > 0 && size <= depth) {
            depth -= size;
        }
    }

    int quote(int side) {
        for (int i = 0; i < depth; i++) {
            if (i % 2 == side) {
                spread++;
            }
        }
        return spread > 10 ? 10 : spread;
    }
}
"""

cls = parse_compilation_unit(SOURCE, "OrderBook.java")[0]

print(f"class {cls.name}")
print(f"  attributes: {[a.name for a in cls.attributes]}")
print(f"  line span {cls.line_span}, {cls.loc} lines, {cls.blank_lines} blank")
print()

# Per-method facts feed the class-level formulas.
for m in cls.methods:
    p = m.decision_profile
    print(f"method {m.name}({', '.join(m.parameter_types)})")
    print(f"  touches attributes: {sorted(m.accessed_attributes)}")
    print(f"  decision points: if={p.if_count} loops={p.loop_count} "
          f"cases={p.case_count} catch={p.catch_count} "
          f"ternary={p.ternary_count} &&/||={p.short_circuit_count}")
    print(f"  cyclomatic complexity = 1 + {p.total()} = {method_cc(m)}")
    print(f"  cognitive events (kind, depth): {m.cognitive_events}")
    print(f"  cognitive complexity = {method_coco(m)}")
    print()

m = class_metrics(cls)
k, l = m.k, m.l_attr
a = sum(len(x.accessed_attributes) for x in cls.methods)
print(f"LCOM5 = (a - k*l) / (l - k*l) = ({a} - {k}*{l}) / ({l} - {k}*{l}) = {m.lcom5}")
print(f"NHD over {m.l_types} distinct parameter type(s) = {m.nhd}")
print(f"CC total = {m.cc_total}")
print(f"CoCo total/avg/min/max = {m.coco_total}/{m.coco_avg}/{m.coco_min}/{m.coco_max}")
