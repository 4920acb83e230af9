"""Structural parser: Java compilation unit -> SourceClass records.

This is a lenient token-level parser, not a full grammar. It finds type
declarations, separates fields from methods from constructors inside class
bodies, and hands method bodies to the body analyzer. Nested named classes
become independent units: their members are excluded from the enclosing
class, while the enclosing line span still covers their text.
"""

from typing import List, Optional, Sequence, Set, Tuple

from ..errors import ParseError, SpanOutOfBounds
from .body import analyze_body
from .model import AttributeDecl, DecisionProfile, MethodView, SourceClass
from .tokens import IDENT, MODIFIER_WORDS, Token, tokenize

_TYPE_KEYWORDS = ("class", "interface", "enum")


def count_loc_and_blank(source_text: str, line_span: Tuple[int, int]) -> Tuple[int, int]:
    """Physical and blank line counts for a 1-based inclusive span."""
    lines = source_text.splitlines()
    first, last = line_span
    if first < 1 or last > max(len(lines), 1) or first > last:
        raise SpanOutOfBounds(f"span {line_span} outside file of {len(lines)} lines")
    loc = last - first + 1
    blank = sum(1 for ln in lines[first - 1:last] if ln.strip() == "")
    return loc, blank


def parse_compilation_unit(source_text: str, file_id: str = "<memory>") -> List[SourceClass]:
    """Extract one SourceClass per named ``class`` declaration.

    Interfaces, enums, records, annotation types and anonymous classes yield
    no unit, but named classes nested inside them still do. Raises
    ParseError when the text cannot be tokenized or braces do not balance.
    """
    tokens = tokenize(source_text, file_id)
    parser = _UnitParser(tokens, source_text, file_id)
    return parser.parse_top_level()


class _UnitParser:
    def __init__(self, tokens: Sequence[Token], source_text: str, file_id: str):
        self.toks = list(tokens)
        self.n = len(self.toks)
        self.source_text = source_text
        self.file_id = file_id
        self.package = ""

    # ---- token helpers ----------------------------------------------------

    def txt(self, i: int, k: int = 0) -> str:
        j = i + k
        return self.toks[j].text if 0 <= j < self.n else ""

    def kind(self, i: int, k: int = 0) -> str:
        j = i + k
        return self.toks[j].kind if 0 <= j < self.n else ""

    def line(self, i: int) -> int:
        j = min(max(i, 0), self.n - 1)
        return self.toks[j].line if self.n else 1

    def matching_brace(self, i: int) -> int:
        """Index of the '}' matching the '{' at i; ParseError if unbalanced."""
        level = 0
        for j in range(i, self.n):
            t = self.toks[j].text
            if t == "{":
                level += 1
            elif t == "}":
                level -= 1
                if level == 0:
                    return j
        raise ParseError(self.file_id, self.line(i), "unbalanced braces")

    def skip_annotation(self, i: int) -> int:
        """i at '@': skip @Name or @Name(...). Returns next index."""
        i += 1
        while self.txt(i) == "." or self.kind(i) == IDENT:
            if self.kind(i) != IDENT and self.txt(i) != ".":
                break
            nxt = i + 1
            if self.kind(i) == IDENT and self.txt(nxt) == ".":
                i = nxt + 1
                continue
            if self.kind(i) == IDENT:
                i = nxt
                break
            i = nxt
        if self.txt(i) == "(":
            i = self.skip_balanced(i, "(", ")")
        return i

    def skip_balanced(self, i: int, open_text: str, close_text: str) -> int:
        level = 0
        while i < self.n:
            t = self.txt(i)
            if t == open_text:
                level += 1
            elif t == close_text:
                level -= 1
                if level == 0:
                    return i + 1
            i += 1
        raise ParseError(self.file_id, self.line(i - 1), f"unbalanced {open_text}{close_text}")

    # ---- top level ----------------------------------------------------------

    def parse_top_level(self) -> List[SourceClass]:
        units: List[SourceClass] = []
        i = 0
        while i < self.n:
            t = self.txt(i)
            if t == "package":
                j = i + 1
                parts = []
                while self.txt(j) != ";" and j < self.n:
                    parts.append(self.txt(j))
                    j += 1
                self.package = "".join(parts)
                i = j + 1
                continue
            if t == "import":
                while i < self.n and self.txt(i) != ";":
                    i += 1
                i += 1
                continue
            i = self._scan_region(i, self.n, self.package, units, decl_start=None)
        return units

    def _scan_region(
        self,
        i: int,
        end: int,
        prefix: str,
        units: List[SourceClass],
        decl_start: Optional[int],
    ) -> int:
        """Handle one construct starting at i inside [i, end); returns the
        index after it. Collects class units found anywhere inside."""
        t = self.txt(i)
        if t == "@":
            return self.skip_annotation(i)
        if t in MODIFIER_WORDS:
            return i + 1
        if t in _TYPE_KEYWORDS or self._is_record_decl(i):
            return self._parse_type_decl(i, prefix, units, decl_start if decl_start is not None else i)
        if t == "{":
            close = self.matching_brace(i)
            self._scan_nested_types(i + 1, close, prefix, units)
            return close + 1
        if t == "(":
            return self.skip_balanced(i, "(", ")")
        return i + 1

    def _is_record_decl(self, i: int) -> bool:
        return self.txt(i) == "record" and self.kind(i, 1) == IDENT and self.txt(i, 2) == "("

    def _decl_first_index(self, i: int) -> int:
        """Walk back over modifiers/annotations to the declaration start."""
        j = i
        while j - 1 >= 0:
            prev = self.txt(j - 1)
            if prev in MODIFIER_WORDS or prev == "non" or prev == "-":
                j -= 1
                continue
            if self.kind(j - 1) == IDENT and j - 2 >= 0 and self.txt(j - 2) == "@":
                j -= 2
                continue
            if prev == ")":
                # possible annotation arguments: @Name(...)
                k = j - 1
                level = 0
                while k >= 0:
                    if self.txt(k) == ")":
                        level += 1
                    elif self.txt(k) == "(":
                        level -= 1
                        if level == 0:
                            break
                    k -= 1
                if k - 2 >= 0 and self.txt(k - 2) == "@" and self.kind(k - 1) == IDENT:
                    j = k - 2
                    continue
                break
            break
        return j

    def _parse_type_decl(self, i: int, prefix: str, units: List[SourceClass], decl_start: int) -> int:
        keyword = self.txt(i)
        is_annotation_decl = keyword == "interface" and self.txt(i - 1) == "@"
        name_idx = i + 1
        if self.kind(name_idx) != IDENT:
            return i + 1
        name = self.txt(name_idx)
        j = name_idx + 1
        # skip type parameters / record header / extends-implements-permits
        while j < self.n and self.txt(j) != "{":
            if self.txt(j) == "(":
                j = self.skip_balanced(j, "(", ")")
                continue
            if self.txt(j) == ";":  # bodyless declaration
                return j + 1
            j += 1
        if j >= self.n:
            raise ParseError(self.file_id, self.line(i), f"missing body for {keyword} {name}")
        body_open = j
        body_close = self.matching_brace(body_open)
        qualified = f"{prefix}.{name}" if prefix else name
        if keyword == "class" and not is_annotation_decl:
            first_line = self.line(self._decl_first_index(decl_start))
            unit = self._build_class(
                name, qualified, body_open, body_close, first_line
            )
            units.append(unit)
        else:
            # not a unit, but classes nested inside still are
            self._scan_nested_types(body_open + 1, body_close, qualified, units)
        return body_close + 1

    def _scan_nested_types(self, i: int, end: int, prefix: str, units: List[SourceClass]):
        """Find type declarations anywhere in [i, end) without modeling the
        surrounding construct (interface/enum/record bodies, initializers)."""
        while i < end:
            t = self.txt(i)
            if t in _TYPE_KEYWORDS and self.txt(i, -1) != "." and self.kind(i, 1) == IDENT:
                i = self._parse_type_decl(i, prefix, units, self._decl_first_index(i))
                continue
            if t == "{":
                close = self.matching_brace(i)
                self._scan_nested_types(i + 1, close, prefix, units)
                i = close + 1
                continue
            i += 1

    # ---- class bodies ---------------------------------------------------------

    def _build_class(
        self,
        name: str,
        qualified: str,
        body_open: int,
        body_close: int,
        first_line: int,
    ) -> SourceClass:
        attributes: List[AttributeDecl] = []
        nested: List[SourceClass] = []
        raw_methods: List[Tuple[str, bool, List[str], List[str], Tuple[int, int]]] = []
        has_static = False

        i = body_open + 1
        while i < body_close:
            t = self.txt(i)
            if t == ";":
                i += 1
                continue
            decl_start = i
            mods: Set[str] = set()
            while i < body_close:
                t = self.txt(i)
                if t == "@" and self.txt(i, 1) != "interface":
                    i = self.skip_annotation(i)
                elif t in MODIFIER_WORDS:
                    mods.add(t)
                    i += 1
                elif t == "non" and self.txt(i, 1) == "-" and self.txt(i, 2) == "sealed":
                    i += 3
                else:
                    break
            t = self.txt(i)
            if i >= body_close:
                break
            if t == "{":  # initializer block (static or instance)
                i = self.skip_balanced(i, "{", "}")
                continue
            if t in _TYPE_KEYWORDS or self._is_record_decl(i) or (
                t == "@" and self.txt(i, 1) == "interface"
            ):
                if t == "@":
                    i += 1  # at 'interface'
                i = self._parse_type_decl(i, qualified, nested, decl_start)
                continue
            member = self._parse_member(i, body_close, name)
            if member is None:
                i += 1
                continue
            i, kind_, mname, param_types, param_names, body_span = member
            if kind_ == "field":
                is_static = "static" in mods
                if is_static:
                    has_static = True
                for fname in param_types:  # declarator names for fields
                    if fname not in {a.name for a in attributes}:
                        attributes.append(AttributeDecl(fname, is_static))
            elif kind_ == "method":
                if "static" in mods:
                    has_static = True
                raw_methods.append((mname, "static" in mods, param_types, param_names, body_span))
            # constructors contribute nothing

        attr_names = {a.name for a in attributes}
        methods: List[MethodView] = []
        for mname, is_static, ptypes, pnames, body_span in raw_methods:
            if body_span == (0, 0):
                accessed: Set[str] = set()
                profile = DecisionProfile()
                events: List[Tuple[str, int]] = []
            else:
                body_tokens = self.toks[body_span[0]:body_span[1]]
                accessed, profile, events = analyze_body(
                    body_tokens, attr_names, pnames, mname
                )
            methods.append(
                MethodView(
                    name=mname,
                    is_static=is_static,
                    parameter_types=ptypes,
                    accessed_attributes=accessed & attr_names,
                    decision_profile=profile,
                    cognitive_events=events,
                )
            )

        last_line = self.line(body_close)
        loc, blank = count_loc_and_blank(self.source_text, (first_line, last_line))
        return SourceClass(
            name=name,
            qualified_name=qualified,
            attributes=attributes,
            methods=methods,
            has_static_member=has_static,
            line_span=(first_line, last_line),
            loc=loc,
            blank_lines=blank,
            nested=nested,
        )

    def _parse_member(self, i: int, end: int, class_name: str):
        """Classify and consume one field / method / constructor.

        Returns (next_index, kind, name, types, names, body_span) where for
        fields `types` carries the declarator names. None when the tokens
        cannot be understood (caller advances one token).
        """
        start = i
        if self.txt(i) == "<":  # generic method type parameters
            level = 0
            while i < end:
                if self.txt(i) == "<":
                    level += 1
                elif self.txt(i) == ">":
                    level -= 1
                    if level == 0:
                        i += 1
                        break
                i += 1
        # find the first structural delimiter at angle/bracket depth 0
        j = i
        angle = 0
        first_delim = None
        while j < end:
            t = self.txt(j)
            if t == "<":
                angle += 1
            elif t == ">":
                angle = max(0, angle - 1)
            elif angle == 0 and t in ("(", "=", ";", ",", "{", "}"):
                first_delim = t
                break
            j += 1
        if first_delim is None:
            return None
        if first_delim == "(":
            return self._parse_callable(start, i, j, end, class_name)
        if first_delim in ("=", ";", ","):
            return self._parse_field(i, j, end)
        return None

    def _parse_field(self, type_start: int, delim: int, end: int):
        # tokens[type_start:delim] = type tokens + first declarator name
        k = delim - 1
        while k > type_start and self.txt(k) == "]" and self.txt(k, -1) == "[":
            k -= 2
        if self.kind(k) != IDENT:
            return None
        names = [self.txt(k)]
        i = delim
        while i < end:
            t = self.txt(i)
            if t == ";":
                return (i + 1, "field", "", names, [], (0, 0))
            if t == "=":
                i = self._skip_initializer(i + 1, end)
                continue
            if t == ",":
                i += 1
                if self.kind(i) == IDENT:
                    names.append(self.txt(i))
                    i += 1
                continue
            i += 1
        return (end, "field", "", names, [], (0, 0))

    def _skip_initializer(self, i: int, end: int) -> int:
        """Skip an initializer expression up to a top-level ',' or ';'."""
        level = 0
        while i < end:
            t = self.txt(i)
            if t in ("(", "[", "{"):
                level += 1
            elif t in (")", "]", "}"):
                level -= 1
            elif level == 0 and t in (",", ";"):
                return i
            i += 1
        return i

    def _parse_callable(self, decl_start: int, head: int, paren: int, end: int, class_name: str):
        name_idx = paren - 1
        if self.kind(name_idx) != IDENT:
            return None
        mname = self.txt(name_idx)
        has_return_type = name_idx > head
        params_close = self.skip_balanced(paren, "(", ")") - 1
        param_types, param_names = self._parse_params(paren + 1, params_close)
        # throws clause, then body or ';'
        i = params_close + 1
        while i < end and self.txt(i) not in ("{", ";"):
            if self.txt(i) == "(":
                i = self.skip_balanced(i, "(", ")")
                continue
            i += 1
        if self.txt(i) == "{":
            body_close = self.matching_brace(i)
            body_span = (i + 1, body_close)
            nxt = body_close + 1
        else:
            body_span = (0, 0)
            nxt = i + 1
        if not has_return_type and mname == class_name:
            return (nxt, "ctor", mname, [], [], (0, 0))
        return (nxt, "method", mname, param_types, param_names, body_span)

    def _parse_params(self, i: int, close: int):
        """Parameter list between ( and ): normalized types + names."""
        types: List[str] = []
        names: List[str] = []
        seg_start = i
        level = 0
        angle = 0
        j = i
        while j <= close:
            t = self.txt(j) if j < close else ","
            if j < close and t in ("(", "["):
                level += 1
            elif j < close and t in (")", "]"):
                level -= 1
            elif j < close and t == "<":
                angle += 1
            elif j < close and t == ">":
                angle = max(0, angle - 1)
            if (t == "," and level == 0 and angle == 0) or j == close:
                seg = self._param_segment(seg_start, j)
                if seg is not None:
                    types.append(seg[0])
                    names.append(seg[1])
                seg_start = j + 1
            j += 1
        return types, names

    def _param_segment(self, i: int, end: int):
        """One parameter: [annotations] [final] Type name [ '[]'* ]."""
        while i < end and (self.txt(i) == "@" or self.txt(i) == "final"):
            if self.txt(i) == "@":
                i = self.skip_annotation(i)
            else:
                i += 1
        if i >= end:
            return None
        k = end - 1
        trailing = 0
        while k - 1 >= i and self.txt(k) == "]" and self.txt(k, -1) == "[":
            trailing += 1
            k -= 2
        if self.kind(k) != IDENT or k == i:
            # degenerate (no type, or not a name) — e.g. receiver `this`
            if self.kind(k) == IDENT and self.txt(k) == "this":
                return None
            if k == i and self.kind(k) == IDENT:
                return None
            return None
        name = self.txt(k)
        if name == "this":
            return None
        type_text = "".join(self.txt(p) for p in range(i, k))
        type_text += "[]" * trailing
        if not type_text:
            return None
        return (type_text, name)
