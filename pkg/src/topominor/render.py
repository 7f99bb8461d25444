"""Graphviz DOT output for finite trees."""

from __future__ import annotations

from .finite_tree import FiniteTree, canonical_code


def _canonical_order(t: FiniteTree) -> FiniteTree:
    """Same tree with children sorted by canonical code, bottom-up."""
    memo: dict[int, FiniteTree] = {}
    stack = [(t, False)]
    while stack:
        node, done = stack.pop()
        if done:
            kids = sorted((memo[id(c)] for c in node.children), key=canonical_code)
            memo[id(node)] = FiniteTree(tuple(kids))
        elif id(node) not in memo:
            stack.append((node, True))
            stack.extend((c, False) for c in node.children)
    return memo[id(t)]


def emit_dot(t: FiniteTree, name: str = "T") -> str:
    """Deterministic digraph; node ids follow the preorder of the canonical form."""
    t = _canonical_order(t)
    lines = [f"digraph {name} {{", "  rankdir=TB;", '  node [shape=circle, label="", width=0.2];']
    edges = []
    counter = 0
    stack = [(t, None)]
    while stack:
        node, parent = stack.pop()
        idx = counter
        counter += 1
        lines.append(f"  n{idx};")
        if parent is not None:
            edges.append(f"  n{parent} -> n{idx};")
        stack.extend((c, idx) for c in reversed(node.children))
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
