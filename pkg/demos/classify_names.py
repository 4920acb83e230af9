"""The naming rules on a spread of class names.

Run:  python demos/classify_names.py
"""

from classaudit import SuffixRules, classify

rules = SuffixRules()

NAMES = [
    # name, has_static_member
    ("StringUtils", True),    # *Utils wins, statics allowed there
    ("IoUtil", False),
    ("TaskManager", False),   # agent noun -> ErOr
    ("Visitor", False),
    ("HttpServer", False),
    ("Calculator", False),    # excluded everyday word -> falls to Rest
    ("Color", False),         # ditto
    ("HttpLogger", False),    # ends with excluded "Logger"
    ("Retriever", False),     # ends "er" but matches no excluded word
    ("Invoice", False),       # plain Rest
    ("Session", True),        # Rest name with statics -> dropped
    ("HTTPSERVER", False),    # uppercase tail: not an agent noun
    ("er", False),            # tail needs at least one preceding character
]

width = max(len(n) for n, _ in NAMES)
for name, has_static in NAMES:
    label = classify(name, has_static, rules)
    reason = f" ({label.drop_reason})" if label.drop_reason else ""
    statics = "static members" if has_static else "no statics"
    print(f"{name:<{width}}  {statics:<14} -> {label.kind.value}{reason}")

print()
print("Policy knob: excluded names can be dropped instead of pooled into Rest:")
label = classify("Calculator", False, rules, excluded_to="drop")
print(f"Calculator with excluded_to='drop' -> {label.kind.value} ({label.drop_reason})")
