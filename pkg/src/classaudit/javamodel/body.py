"""Single-pass analysis of one method body's token stream.

One lenient recursive-descent walk produces three things at once:

* the set of owning-class attributes the body reads or writes,
* decision-point counts (if / loop / case / catch / ternary / ``&&``-``||``),
* cognitive events ``(kind, nesting_depth)`` for the readability metric.

Resolution is purely lexical and intra-class. A bare identifier counts as an
attribute access when it matches a declared attribute, is not qualified by
``.``/``::``/``new``, is not a call (`name(` is an invocation, fields and
methods live in separate namespaces), and is not shadowed by a parameter or
a local declared earlier in an enclosing scope. ``this.name`` always counts,
shadowed or not. Scoping is block-granular, no flow analysis.

Nesting-depth convention (pinned so hand oracles can match it): the method
body is depth 0; bodies of if/else branches, loops, switch blocks, catch
blocks, ternary branch operands, lambda bodies and anonymous/local class
bodies are one deeper. ``try``/``finally`` blocks, plain ``{}`` blocks, and
control-clause expressions stay at the construct's own depth.
"""

from typing import List, Optional, Sequence, Set, Tuple

from .model import (
    DecisionProfile,
    EVENT_BOOL_RUN,
    EVENT_CATCH,
    EVENT_ELSE,
    EVENT_ELSE_IF,
    EVENT_IF,
    EVENT_LOOP,
    EVENT_RECURSION,
    EVENT_SWITCH,
    EVENT_TERNARY,
)
from .tokens import IDENT, PRIMITIVE_TYPES, Token

_DECL_HEAD_SKIP = frozenset({"final"})
# Identifier may not be an access when directly preceded by one of these.
_QUALIFIER_PREV = frozenset({".", "::", "new", "@", "instanceof"})
_VALUE_KEYWORDS = frozenset({"null", "true", "false"})


def analyze_body(
    tokens: Sequence[Token],
    attr_names: Set[str],
    param_names: Sequence[str],
    method_name: str,
) -> Tuple[Set[str], DecisionProfile, List[Tuple[str, int]]]:
    """Analyze the tokens between a method's braces (braces excluded)."""
    walker = _BodyWalker(tokens, attr_names, param_names, method_name)
    walker.run()
    return walker.accessed, walker.profile, walker.events


def extract_attribute_accesses(
    tokens: Sequence[Token],
    attr_names: Set[str],
    param_names: Sequence[str] = (),
) -> Set[str]:
    """Attribute names the body touches, under the lexical shadowing rules."""
    accessed, _, _ = analyze_body(tokens, attr_names, param_names, "")
    return accessed


def build_decision_profile(
    tokens: Sequence[Token],
) -> Tuple[DecisionProfile, List[Tuple[str, int]]]:
    """Decision-point counts plus cognitive events for one body."""
    _, profile, events = analyze_body(tokens, set(), (), "")
    return profile, events


class _BodyWalker:
    def __init__(self, tokens, attr_names, param_names, method_name):
        self.toks = list(tokens)
        self.n = len(self.toks)
        self.i = 0
        self.attrs = set(attr_names)
        self.method_name = method_name
        self.scopes: List[Set[str]] = [set(param_names)]
        self.accessed: Set[str] = set()
        self.profile = DecisionProfile()
        self.events: List[Tuple[str, int]] = []
        self.last: Optional[Token] = None

    # ---- cursor helpers -------------------------------------------------

    def cur(self) -> Optional[Token]:
        return self.toks[self.i] if self.i < self.n else None

    def txt(self, k: int = 0) -> str:
        j = self.i + k
        return self.toks[j].text if 0 <= j < self.n else ""

    def kind(self, k: int = 0) -> str:
        j = self.i + k
        return self.toks[j].kind if 0 <= j < self.n else ""

    def eat(self) -> Optional[Token]:
        tok = self.cur()
        if tok is not None:
            self.last = tok
            self.i += 1
        return tok

    def eat_if(self, text: str) -> bool:
        if self.txt() == text:
            self.eat()
            return True
        return False

    # ---- scopes ----------------------------------------------------------

    def push_scope(self, names=()):
        self.scopes.append(set(names))

    def pop_scope(self):
        if len(self.scopes) > 1:
            self.scopes.pop()

    def declare(self, name: str):
        self.scopes[-1].add(name)

    def is_shadowed(self, name: str) -> bool:
        return any(name in scope for scope in self.scopes)

    # ---- entry -----------------------------------------------------------

    def run(self):
        while self.cur() is not None:
            if self.txt() == "}":
                self.eat()  # unbalanced close; tolerate
                continue
            self.parse_statement(0)

    # ---- statements -------------------------------------------------------

    def parse_block(self, depth: int):
        """Statements until the matching '}' (opening brace already eaten)."""
        while self.cur() is not None:
            if self.txt() == "}":
                self.eat()
                return
            self.parse_statement(depth)

    def embedded(self, depth: int):
        """Body of a control construct: block or single statement."""
        if self.txt() == "{":
            self.eat()
            self.push_scope()
            self.parse_block(depth)
            self.pop_scope()
        else:
            self.parse_statement(depth)

    def parse_statement(self, depth: int):
        t = self.txt()
        if t == ";":
            self.eat()
            return
        if t == "{":
            self.eat()
            self.push_scope()
            self.parse_block(depth)  # plain block, no nesting increment
            self.pop_scope()
            return
        if t == "if":
            self.parse_if(depth, is_else_if=False)
            return
        if t == "for":
            self.parse_for(depth)
            return
        if t == "while":
            self.eat()
            self.profile.loop_count += 1
            self.events.append((EVENT_LOOP, depth))
            self.parse_paren_expr(depth)
            self.embedded(depth + 1)
            return
        if t == "do":
            self.eat()
            self.profile.loop_count += 1
            self.events.append((EVENT_LOOP, depth))
            self.embedded(depth + 1)
            if self.eat_if("while"):  # tail condition, not a second loop
                self.parse_paren_expr(depth)
            self.eat_if(";")
            return
        if t == "switch":
            self.parse_switch(depth)
            return
        if t == "try":
            self.parse_try(depth)
            return
        if t == "synchronized":
            self.eat()
            self.parse_paren_expr(depth)
            if self.eat_if("{"):
                self.push_scope()
                self.parse_block(depth)
                self.pop_scope()
            return
        if t in ("return", "throw"):
            self.eat()
            if self.txt() != ";":
                self.parse_expr({";"}, depth)
            self.eat_if(";")
            return
        if t in ("break", "continue"):
            self.eat()
            if self.kind() == IDENT and self.txt() not in ("case", "default"):
                self.eat()  # jump label, never an attribute access
            self.eat_if(";")
            return
        if t == "assert":
            self.eat()
            self.parse_expr({";"}, depth)
            self.eat_if(";")
            return
        if t == "yield" and self.txt(1) != "=":
            self.eat()
            self.parse_expr({";"}, depth)
            self.eat_if(";")
            return
        if t in ("class", "interface", "enum") or self._record_decl_ahead():
            self.parse_local_type(depth)
            return
        if t == "@":
            self.eat()
            if self.kind() == IDENT:
                self.eat()
            if self.txt() == "(":
                self.skip_balanced("(", ")")
            return
        if self.kind() == IDENT and self.txt(1) == ":" and self.txt(2) != ":":
            # statement label such as `outer:`
            self.eat()
            self.eat()
            return
        # declaration or expression statement
        if self.try_parse_declaration(depth, terminators=(";",)):
            self.eat_if(";")
            return
        before = self.i
        self.parse_expr({";"}, depth)
        self.eat_if(";")
        if self.i == before:
            self.eat()  # guarantee progress on malformed input

    def parse_if(self, depth: int, is_else_if: bool):
        self.eat()  # 'if'
        self.profile.if_count += 1
        self.events.append((EVENT_ELSE_IF if is_else_if else EVENT_IF, depth))
        self.parse_paren_expr(depth)
        self.embedded(depth + 1)
        if self.eat_if("else"):
            if self.txt() == "if":
                self.parse_if(depth, is_else_if=True)
            else:
                self.events.append((EVENT_ELSE, depth))
                self.embedded(depth + 1)

    def parse_for(self, depth: int):
        self.eat()  # 'for'
        self.profile.loop_count += 1
        self.events.append((EVENT_LOOP, depth))
        if self.txt() != "(":
            self.embedded(depth + 1)
            return
        classic = self._for_control_has_semicolon()
        self.eat()  # '('
        self.push_scope()
        if classic:
            if not self.eat_if(";"):
                if not self.try_parse_declaration(depth, terminators=(";",)):
                    self.parse_expr({";"}, depth)
                self.eat_if(";")
            if self.txt() != ";":
                self.parse_expr({";"}, depth)
            self.eat_if(";")
            if self.txt() != ")":
                self.parse_expr({")"}, depth)
            self.eat_if(")")
        else:
            if self.try_parse_declaration(depth, terminators=(":",)):
                self.eat_if(":")
            self.parse_expr({")"}, depth)
            self.eat_if(")")
        self.embedded(depth + 1)
        self.pop_scope()

    def parse_switch(self, depth: int):
        self.eat()  # 'switch'
        self.events.append((EVENT_SWITCH, depth))
        self.parse_paren_expr(depth)
        if not self.eat_if("{"):
            return
        self.push_scope()
        while self.cur() is not None and self.txt() != "}":
            t = self.txt()
            if t == "case":
                self.eat()
                self.profile.case_count += 1
                self.parse_expr({":", "->"}, depth)
            elif t == "default":
                self.eat()
            elif t == ":":
                self.eat()
            elif t == "->":
                self.eat()
                if self.txt() == "{":
                    self.eat()
                    self.push_scope()
                    self.parse_block(depth + 1)
                    self.pop_scope()
                else:
                    self.parse_statement(depth + 1)
            else:
                self.parse_statement(depth + 1)
        self.eat_if("}")
        self.pop_scope()

    def parse_try(self, depth: int):
        self.eat()  # 'try'
        has_resources = False
        if self.txt() == "(":
            has_resources = True
            self.eat()
            self.push_scope()
            while self.cur() is not None and self.txt() != ")":
                if not self.try_parse_declaration(depth, terminators=(";", ")")):
                    self.parse_expr({";", ")"}, depth)
                self.eat_if(";")
            self.eat_if(")")
        if self.eat_if("{"):
            self.parse_block(depth)  # try body does not nest
        if has_resources:
            self.pop_scope()
        while self.txt() == "catch":
            self.eat()
            self.profile.catch_count += 1
            self.events.append((EVENT_CATCH, depth))
            self.push_scope()
            if self.eat_if("("):
                last_ident = None
                while self.cur() is not None and self.txt() != ")":
                    if self.kind() == IDENT:
                        last_ident = self.txt()
                    self.eat()
                self.eat_if(")")
                if last_ident:
                    self.declare(last_ident)
            if self.eat_if("{"):
                self.parse_block(depth + 1)
            self.pop_scope()
        if self.eat_if("finally"):
            if self.eat_if("{"):
                self.parse_block(depth)

    def parse_local_type(self, depth: int):
        """Local class/interface/enum/record: body is a nested region."""
        while self.cur() is not None and self.txt() != "{":
            if self.txt() == "(":  # record header
                self.skip_balanced("(", ")")
                continue
            self.eat()
        if self.eat_if("{"):
            self.push_scope()
            self.parse_block(depth + 1)
            self.pop_scope()

    # ---- expressions ------------------------------------------------------

    def parse_paren_expr(self, depth: int):
        if self.eat_if("("):
            self.parse_expr({")"}, depth)
            self.eat_if(")")

    def parse_expr(self, stop: Set[str], depth: int):
        """Consume an expression; returns with the stop token current.

        '}' and ';' are implicit hard stops unless explicitly requested.
        Each call frame is one run context for boolean-operator sequences.
        """
        last_bool = None
        while self.cur() is not None:
            t = self.txt()
            if t in stop or (t in ("}", ";") and t not in stop):
                return
            if t == "(":
                if self._try_lambda_params(depth, stop):
                    continue
                self.eat()
                self.parse_expr({")"}, depth)
                self.eat_if(")")
                continue
            if t == "[":
                self.eat()
                self.parse_expr({"]"}, depth)
                self.eat_if("]")
                continue
            if t == "{":
                if self.last is not None and self.last.text == ")":
                    # anonymous class body after `new T(...)`
                    self.eat()
                    self.push_scope()
                    self.parse_block(depth + 1)
                    self.pop_scope()
                else:
                    # array initializer or similar brace region
                    self.eat()
                    self.parse_expr({"}"}, depth)
                    self.eat_if("}")
                continue
            if t in ("&&", "||"):
                self.profile.short_circuit_count += 1
                if t != last_bool:
                    self.events.append((EVENT_BOOL_RUN, depth))
                    last_bool = t
                self.eat()
                continue
            if t == ",":
                last_bool = None
                self.eat()
                continue
            if t == "?":
                if self._is_wildcard():
                    self.eat()
                    continue
                self.profile.ternary_count += 1
                self.events.append((EVENT_TERNARY, depth))
                self.eat()
                self.parse_expr({":"}, depth + 1)
                self.eat_if(":")
                self.parse_expr(stop | {","}, depth + 1)
                if self.txt() == "," and "," not in stop:
                    last_bool = None
                    self.eat()
                    continue
                return
            if t == ":":
                last_bool = None
                self.eat()
                continue
            if t == "switch":
                self.parse_switch(depth)
                continue
            if t == "instanceof":
                self._parse_instanceof()
                continue
            if self.kind() == IDENT:
                self._expr_ident(depth, stop)
                continue
            self.eat()

    def _expr_ident(self, depth: int, stop: Set[str]):
        name = self.txt()
        if name == "this" and self.txt(1) == "." and self.kind(2) == IDENT:
            member = self.txt(2)
            if self.txt(3) == "(":
                if member == self.method_name:
                    self.events.append((EVENT_RECURSION, depth))
            elif member in self.attrs:
                self.accessed.add(member)
            self.eat()
            self.eat()
            self.eat()
            return
        if self.txt(1) == "->":
            # single-parameter lambda
            self.eat()
            self.eat()  # '->'
            self.push_scope([name])
            self._lambda_body(depth, stop)
            self.pop_scope()
            return
        prev = self.last.text if self.last is not None else ""
        if prev not in _QUALIFIER_PREV and name not in _VALUE_KEYWORDS:
            if self.txt(1) == "(":
                if name == self.method_name:
                    self.events.append((EVENT_RECURSION, depth))
            elif name in self.attrs and not self.is_shadowed(name):
                self.accessed.add(name)
        self.eat()

    def _lambda_body(self, depth: int, stop: Set[str]):
        if self.txt() == "{":
            self.eat()
            self.parse_block(depth + 1)
        else:
            self.parse_expr(stop | {","}, depth + 1)

    def _try_lambda_params(self, depth: int, stop: Set[str]) -> bool:
        """At '(': if the parenthesized group is a lambda parameter list,
        consume it plus the body and return True."""
        close = self._matching_paren(self.i)
        if close < 0 or close + 1 >= self.n or self.toks[close + 1].text != "->":
            return False
        params = []
        depth_par = 0
        depth_angle = 0
        seg_last_ident = None
        for j in range(self.i + 1, close):
            tok = self.toks[j]
            if tok.text in ("(", "["):
                depth_par += 1
            elif tok.text in (")", "]"):
                depth_par -= 1
            elif tok.text == "<":
                depth_angle += 1
            elif tok.text == ">":
                depth_angle = max(0, depth_angle - 1)
            elif tok.text == "," and depth_par == 0 and depth_angle == 0:
                if seg_last_ident:
                    params.append(seg_last_ident)
                seg_last_ident = None
            elif tok.kind == IDENT:
                seg_last_ident = tok.text
        if seg_last_ident:
            params.append(seg_last_ident)
        self.i = close + 1
        self.last = self.toks[close]
        self.eat()  # '->'
        self.push_scope(params)
        self._lambda_body(depth, stop)
        self.pop_scope()
        return True

    def _matching_paren(self, start: int) -> int:
        level = 0
        for j in range(start, self.n):
            t = self.toks[j].text
            if t == "(":
                level += 1
            elif t == ")":
                level -= 1
                if level == 0:
                    return j
        return -1

    def _is_wildcard(self) -> bool:
        prev = self.last.text if self.last is not None else ""
        nxt = self.txt(1)
        return prev in ("<", ",") and nxt in ("extends", "super", ">", ",")

    def _parse_instanceof(self):
        self.eat()  # 'instanceof'
        self.eat_if("final")
        if self.kind() == IDENT:
            self.eat()
            while self.txt() == "." and self.kind(1) == IDENT:
                self.eat()
                self.eat()
        if self.txt() == "<":
            self._skip_angles()
        while self.txt() == "[" and self.txt(1) == "]":
            self.eat()
            self.eat()
        if self.kind() == IDENT:  # pattern variable
            self.declare(self.txt())
            self.eat()

    # ---- declarations -----------------------------------------------------

    def try_parse_declaration(self, depth: int, terminators: Tuple[str, ...]) -> bool:
        """Parse `Type name [= init][, name2 ...]` if present.

        On success the cursor rests on the terminator (not consumed) and all
        declarator names are in scope. On failure the cursor is untouched.
        """
        save_i, save_last = self.i, self.last
        while self.txt() in _DECL_HEAD_SKIP:
            self.eat()
        if self.txt() == "@":  # local annotation
            self.eat()
            if self.kind() == IDENT:
                self.eat()
            if self.txt() == "(":
                self.skip_balanced("(", ")")
        ok = self._scan_type()
        if ok and self.kind() == IDENT and self.txt() not in PRIMITIVE_TYPES:
            name = self.txt()
            nxt = self.txt(1)
            allowed = set(terminators) | {"=", ","}
            if nxt in allowed or (nxt == "[" and self.txt(2) == "]"):
                self.eat()  # name
                while self.txt() == "[" and self.txt(1) == "]":
                    self.eat()
                    self.eat()
                self.declare(name)
                self._declarator_rest(depth, terminators)
                return True
        self.i, self.last = save_i, save_last
        return False

    def _declarator_rest(self, depth: int, terminators: Tuple[str, ...]):
        stops = set(terminators) | {","}
        while True:
            if self.txt() == "=":
                self.eat()
                self.parse_expr(stops, depth)
            if self.txt() == "," and "," not in terminators:
                self.eat()
                if self.kind() == IDENT:
                    self.declare(self.txt())
                    self.eat()
                    while self.txt() == "[" and self.txt(1) == "]":
                        self.eat()
                        self.eat()
                    continue
            return

    def _scan_type(self) -> bool:
        """Consume a type reference; False (cursor untouched) if absent."""
        save_i, save_last = self.i, self.last
        t = self.txt()
        if t in PRIMITIVE_TYPES or t == "var":
            self.eat()
        elif self.kind() == IDENT and t not in ("new", "this", "super"):
            self.eat()
            while self.txt() == "." and self.kind(1) == IDENT:
                self.eat()
                self.eat()
        else:
            return False
        if self.txt() == "<":
            if not self._skip_angles():
                self.i, self.last = save_i, save_last
                return False
        while self.txt() == "[" and self.txt(1) == "]":
            self.eat()
            self.eat()
        return True

    def _skip_angles(self) -> bool:
        """Consume a balanced <...> group; abort on expression-ish tokens."""
        save_i, save_last = self.i, self.last
        level = 0
        while self.cur() is not None:
            t = self.txt()
            if t == "<":
                level += 1
            elif t == ">":
                level -= 1
                if level == 0:
                    self.eat()
                    return True
            elif t in (";", "{", "}", ")", "(", "&&", "||", "+", "-", "*", "/"):
                break
            self.eat()
        self.i, self.last = save_i, save_last
        return False

    # ---- misc ---------------------------------------------------------------

    def skip_balanced(self, open_text: str, close_text: str):
        if self.txt() != open_text:
            return
        level = 0
        while self.cur() is not None:
            t = self.txt()
            if t == open_text:
                level += 1
            elif t == close_text:
                level -= 1
                self.eat()
                if level == 0:
                    return
                continue
            self.eat()

    def _record_decl_ahead(self) -> bool:
        return (
            self.txt() == "record"
            and self.kind(1) == IDENT
            and self.txt(2) == "("
        )

    def _for_control_has_semicolon(self) -> bool:
        """Distinguish classic from enhanced for by a top-level ';'."""
        level_par = 0
        level_brace = 0
        for j in range(self.i, self.n):
            t = self.toks[j].text
            if t == "(":
                level_par += 1
            elif t == ")":
                level_par -= 1
                if level_par == 0:
                    return False
            elif t == "{":
                level_brace += 1
            elif t == "}":
                level_brace -= 1
            elif t == ";" and level_par == 1 and level_brace == 0:
                return True
        return False
