"""Brute-force cyclomatic complexity oracle.

Builds an explicit control-flow graph from a hand-written mini-AST and
computes E - N + 2 by literally counting nodes and edges. Compound boolean
predicates are decomposed: a condition with k atomic predicates becomes a
chain of k two-way branch nodes. This is fully independent of the
production path, which never builds a graph at all.

Graphs are composed from fragments with one entry and an explicit exit.
Modeling choices mirror the documented production conventions: one switch
head out-edge per case group plus one for default/fall-out, one edge from
the try body to each handler, loops always branch (a `while (true)` still
has a condition node), and lambda bodies are inlined into the enclosing
method's flow.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple


@dataclass
class Graph:
    nodes: int = 0
    edges: List[Tuple[int, int]] = field(default_factory=list)

    def node(self) -> int:
        self.nodes += 1
        return self.nodes - 1

    def edge(self, a: int, b: int):
        self.edges.append((a, b))

    def complexity(self) -> int:
        return len(self.edges) - self.nodes + 2


# ---- mini-AST ----------------------------------------------------------------


@dataclass
class Stmt:
    """One basic statement; `preds` counts decomposed predicate atoms in its
    expression (ternary conditions and short-circuit atoms beyond the first
    operand each add a branch node)."""

    preds: int = 0


@dataclass
class If:
    atoms: int  # decomposed atomic predicates in the condition (>= 1)
    then: list
    els: Optional[list] = None


@dataclass
class While:
    atoms: int
    body: list


@dataclass
class DoWhile:
    body: list
    atoms: int = 1


@dataclass
class For:
    body: list
    atoms: int = 1  # implicit `true` for `for(;;)` still branches


@dataclass
class Foreach:
    body: list


@dataclass
class Switch:
    groups: List[list]  # one body per case group
    has_default: bool = False
    default_body: Optional[list] = None


@dataclass
class Try:
    body: list
    handlers: List[list] = field(default_factory=list)
    final: Optional[list] = None


def _predicate_chain(g: Graph, entry: int, atoms: int, true_target: int, false_target: int):
    """Short-circuit chain: each atom branches; last atom decides.

    Returns (first_cond, last_cond)."""
    prev = entry
    first = None
    for idx in range(atoms):
        cond = g.node()
        if first is None:
            first = cond
        g.edge(prev, cond)
        if idx == atoms - 1:
            g.edge(cond, true_target)
        g.edge(cond, false_target)
        prev = cond
    return first, prev


def _build_seq(g: Graph, entry: int, body: list) -> int:
    cur = entry
    for item in body:
        cur = _build(g, cur, item)
    return cur


def _build(g: Graph, entry: int, node) -> int:
    """Wire `node` after `entry`; returns the fragment's single out-node."""
    if isinstance(node, Stmt):
        cur = entry
        for _ in range(node.preds):
            cond = g.node()
            join = g.node()
            a = g.node()
            b = g.node()
            g.edge(cur, cond)
            g.edge(cond, a)
            g.edge(cond, b)
            g.edge(a, join)
            g.edge(b, join)
            cur = join
        stmt = g.node()
        g.edge(cur, stmt)
        return stmt
    if isinstance(node, If):
        join = g.node()
        then_entry = g.node()
        if node.els is not None:
            else_entry = g.node()
            _predicate_chain(g, entry, node.atoms, then_entry, else_entry)
            else_exit = _build_seq(g, else_entry, node.els)
            g.edge(else_exit, join)
        else:
            _predicate_chain(g, entry, node.atoms, then_entry, join)
        then_exit = _build_seq(g, then_entry, node.then)
        g.edge(then_exit, join)
        return join
    if isinstance(node, While):
        exit_node = g.node()
        body_entry = g.node()
        first_cond, _ = _predicate_chain(g, entry, node.atoms, body_entry, exit_node)
        body_exit = _build_seq(g, body_entry, node.body)
        g.edge(body_exit, first_cond)
        return exit_node
    if isinstance(node, DoWhile):
        body_entry = g.node()
        g.edge(entry, body_entry)
        body_exit = _build_seq(g, body_entry, node.body)
        exit_node = g.node()
        _predicate_chain(g, body_exit, node.atoms, body_entry, exit_node)
        return exit_node
    if isinstance(node, For):
        exit_node = g.node()
        body_entry = g.node()
        first_cond, _ = _predicate_chain(g, entry, node.atoms, body_entry, exit_node)
        body_exit = _build_seq(g, body_entry, node.body)
        g.edge(body_exit, first_cond)
        return exit_node
    if isinstance(node, Foreach):
        exit_node = g.node()
        body_entry = g.node()
        head = g.node()  # hasNext
        g.edge(entry, head)
        g.edge(head, body_entry)
        g.edge(head, exit_node)
        body_exit = _build_seq(g, body_entry, node.body)
        g.edge(body_exit, head)
        return exit_node
    if isinstance(node, Switch):
        head = g.node()
        g.edge(entry, head)
        join = g.node()
        for body in node.groups:
            body_entry = g.node()
            g.edge(head, body_entry)
            body_exit = _build_seq(g, body_entry, body)
            g.edge(body_exit, join)
        if node.has_default:
            d_entry = g.node()
            g.edge(head, d_entry)
            d_exit = _build_seq(g, d_entry, node.default_body or [])
            g.edge(d_exit, join)
        else:
            g.edge(head, join)  # implicit fall-out path
        return join
    if isinstance(node, Try):
        body_entry = g.node()
        g.edge(entry, body_entry)
        body_exit = _build_seq(g, body_entry, node.body)
        join = g.node()
        g.edge(body_exit, join)
        for handler in node.handlers:
            h_entry = g.node()
            g.edge(body_exit, h_entry)
            h_exit = _build_seq(g, h_entry, handler)
            g.edge(h_exit, join)
        if node.final is not None:
            return _build_seq(g, join, node.final)
        return join
    raise TypeError(f"unknown oracle node: {node!r}")


def oracle_cc(method_body: list) -> int:
    """E - N + 2 of the explicit graph for one method body."""
    g = Graph()
    entry = g.node()
    last = _build_seq(g, entry, method_body)
    exit_node = g.node()
    g.edge(last, exit_node)
    return g.complexity()
