"""Structural view of Java classes: just the facts the metrics consume.

Only ``class`` declarations (top-level and named nested, wherever they sit)
become units; interfaces, enums, records, annotation types, and anonymous
classes do not. That scope is a modeling decision, not something the input
format dictates: it keeps the attribute-based cohesion metrics well defined.
Constructors are excluded from the method list everywhere.
"""

from dataclasses import dataclass, field
from typing import List, Set, Tuple


@dataclass(frozen=True)
class AttributeDecl:
    name: str
    is_static: bool = False


@dataclass
class DecisionProfile:
    """Decision-point counts for one method body.

    Each ``if`` keyword, loop keyword (for / enhanced-for / while / do),
    ``case`` label group, ``catch`` clause, ternary operator, and
    short-circuit ``&&``/``||`` token counts once.
    """

    if_count: int = 0
    loop_count: int = 0
    case_count: int = 0
    catch_count: int = 0
    ternary_count: int = 0
    short_circuit_count: int = 0

    def total(self) -> int:
        return (self.if_count + self.loop_count + self.case_count
                + self.catch_count + self.ternary_count
                + self.short_circuit_count)


# Cognitive event kinds. NESTING kinds score 1 + depth, FLAT kinds score 1.
EVENT_IF = "if"
EVENT_LOOP = "loop"
EVENT_SWITCH = "switch"
EVENT_CATCH = "catch"
EVENT_TERNARY = "ternary"
EVENT_ELSE_IF = "else_if"
EVENT_ELSE = "else"
EVENT_BOOL_RUN = "bool_run"
EVENT_RECURSION = "recursion"

NESTING_EVENT_KINDS = frozenset(
    {EVENT_IF, EVENT_LOOP, EVENT_SWITCH, EVENT_CATCH, EVENT_TERNARY}
)
FLAT_EVENT_KINDS = frozenset(
    {EVENT_ELSE_IF, EVENT_ELSE, EVENT_BOOL_RUN, EVENT_RECURSION}
)

CognitiveEvent = Tuple[str, int]  # (kind, structural nesting depth)


@dataclass
class MethodView:
    name: str
    is_static: bool
    parameter_types: List[str]
    accessed_attributes: Set[str]
    decision_profile: DecisionProfile
    cognitive_events: List[CognitiveEvent]


@dataclass
class SourceClass:
    name: str
    qualified_name: str
    attributes: List[AttributeDecl]
    methods: List[MethodView]
    has_static_member: bool
    line_span: Tuple[int, int]  # 1-based inclusive
    loc: int
    blank_lines: int
    nested: List["SourceClass"] = field(default_factory=list)

    def attribute_names(self) -> Set[str]:
        return {a.name for a in self.attributes}
