"""Finite rooted unlabeled trees.

Child order is presentation only: equality, hashing and sorting all go through
the AHU canonical code, so two trees compare equal exactly when they are
isomorphic as rooted trees.  Traversals are iterative because subdivided
truncations of infinite trees produce paths thousands of nodes deep.
"""

from __future__ import annotations

import random
from typing import Iterable, Mapping, Sequence

from . import config
from .errors import ArgumentError, ParseError, ResourceError


class FiniteTree:
    __slots__ = ("children", "size", "height", "_code", "_hash")

    def __init__(self, children: Iterable["FiniteTree"] = ()):
        self.children = tuple(children)
        self.size = 1 + sum(c.size for c in self.children)
        self.height = 1 + max((c.height for c in self.children), default=-1)
        self._code = None
        self._hash = None

    def __eq__(self, other):
        if not isinstance(other, FiniteTree):
            return NotImplemented
        if self is other:
            return True
        if self.size != other.size or self.height != other.height:
            return False
        table: dict = {}
        return shape_id(self, table) == shape_id(other, table)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(canonical_code(self))
        return self._hash

    def __repr__(self):
        text = to_parens(self)
        if len(text) > 60:
            text = text[:57] + "..."
        return f"FiniteTree({text!r})"

    @property
    def degree(self) -> int:
        return len(self.children)


VERTEX = FiniteTree()


def _postorder(t: FiniteTree) -> list[FiniteTree]:
    out = []
    stack = [(t, False)]
    while stack:
        node, done = stack.pop()
        if done:
            out.append(node)
            continue
        stack.append((node, True))
        for c in reversed(node.children):
            stack.append((c, False))
    return out


def preorder(t: FiniteTree) -> tuple[list[FiniteTree], list[int]]:
    """Nodes in preorder (stored child order) and the parent index of each.

    Node identity is positional: two equal subtrees are distinct nodes.
    """
    nodes: list[FiniteTree] = []
    parents: list[int] = []
    stack = [(t, -1)]
    while stack:
        node, parent = stack.pop()
        idx = len(nodes)
        nodes.append(node)
        parents.append(parent)
        for c in reversed(node.children):
            stack.append((c, idx))
    return nodes, parents


def shape_id(t: FiniteTree, table: dict) -> int:
    """Intern every subtree of ``t`` into ``table``; isomorphic subtrees share ids."""
    ids: dict[int, int] = {}
    for node in _postorder(t):
        if id(node) in ids:
            continue
        key = tuple(sorted(ids[id(c)] for c in node.children))
        sid = table.get(key)
        if sid is None:
            sid = table[key] = len(table)
        ids[id(node)] = sid
    return ids[id(t)]


def canonical_code(t: FiniteTree) -> str:
    """AHU code: ``(`` + sorted child codes + ``)``."""
    if t._code is not None:
        return t._code
    for node in _postorder(t):
        if node._code is None:
            node._code = "(" + "".join(sorted(c._code for c in node.children)) + ")"
    return t._code


def is_isomorphic(a: FiniteTree, b: FiniteTree) -> bool:
    return a.size == b.size and canonical_code(a) == canonical_code(b)


def to_parens(t: FiniteTree) -> str:
    """Parenthesis string in stored child order (not necessarily canonical)."""
    out = []
    stack: list = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(")")
            continue
        out.append("(")
        stack.append(")")
        for c in reversed(item.children):
            stack.append(c)
    return "".join(out)


def from_parens(text: str) -> FiniteTree:
    """Parse parenthesis notation; children may appear in any order."""
    stack: list[list[FiniteTree]] = []
    root = None
    line, col = 1, 0
    for ch in text:
        col += 1
        if ch == "\n":
            line, col = line + 1, 0
            continue
        if ch.isspace():
            continue
        if root is not None:
            raise ParseError("trailing input after tree", line, col)
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if not stack:
                raise ParseError("unbalanced ')'", line, col)
            node = FiniteTree(stack.pop())
            if stack:
                stack[-1].append(node)
            else:
                root = node
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    if root is None:
        raise ParseError("incomplete tree", line, col + 1)
    return root


def from_parents(parents: Sequence[int]) -> FiniteTree:
    """Build a tree from a parent array (``-1`` marks the root, parents precede children)."""
    n = len(parents)
    kids: list[list[int]] = [[] for _ in range(n)]
    roots = [v for v, p in enumerate(parents) if p < 0]
    if len(roots) != 1:
        raise ArgumentError(f"need exactly one root, found {len(roots)}")
    root = roots[0]
    for v, p in enumerate(parents):
        if p >= n:
            raise ArgumentError(f"parent {p} of node {v} is out of range")
        if p >= 0:
            kids[p].append(v)
    built: list = [None] * n
    order = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(kids[v])
    if len(order) != n:
        raise ArgumentError("parent array has a cycle")
    for v in reversed(order):
        built[v] = FiniteTree(built[c] for c in kids[v])
    return built[root]


def path(n: int) -> FiniteTree:
    """Rooted path with ``n`` nodes, rooted at an end."""
    if n < 1:
        raise ArgumentError("path needs at least one node")
    t = VERTEX
    for _ in range(n - 1):
        t = FiniteTree((t,))
    return t


def star(n: int) -> FiniteTree:
    """V_n: a root with ``n`` leaf children."""
    return FiniteTree([VERTEX] * n)


def complete_binary(depth: int) -> FiniteTree:
    t = VERTEX
    for _ in range(depth):
        t = FiniteTree((t, t))
    return t


def random_tree(n: int, rng: random.Random) -> FiniteTree:
    """Random recursive tree on ``n`` nodes (not uniform over shapes)."""
    parents = [-1] + [rng.randrange(i) for i in range(1, n)]
    return from_parents(parents)


def enumerate_rooted_trees(n: int, bound: int | None = None) -> list[FiniteTree]:
    """One representative per isomorphism class of rooted trees with ``n`` nodes."""
    if bound is None:
        bound = config.max_nodes()
    if n < 1:
        raise ArgumentError("n must be positive")
    if n > bound:
        raise ResourceError(f"enumeration of {n}-node trees exceeds bound {bound}")
    by_size: dict[int, list[str]] = {1: ["()"]}
    for m in range(2, n + 1):
        items = [(k, code) for k in range(m - 1, 0, -1) for code in by_size[k]]
        found = set()

        def extend(start, remaining, chosen):
            if remaining == 0:
                found.add("(" + "".join(sorted(chosen)) + ")")
                return
            for i in range(start, len(items)):
                k, code = items[i]
                if k <= remaining:
                    chosen.append(code)
                    extend(i, remaining - k, chosen)
                    chosen.pop()

        extend(0, m - 1, [])
        by_size[m] = sorted(found)
    return [from_parens(code) for code in by_size[n]]


def subdivide(t: FiniteTree, lengths: Mapping[int, int]) -> FiniteTree:
    """Replace edges by paths.

    An edge is named by the preorder index of its lower endpoint (so valid
    keys are ``1..size-1``); length ``k`` turns the edge into a path of ``k``
    edges.
    """
    nodes, parents = preorder(t)
    for edge, k in lengths.items():
        if not (isinstance(edge, int) and 1 <= edge < len(nodes)):
            raise ArgumentError(f"unknown edge {edge!r}")
        if k < 1:
            raise ArgumentError(f"edge length must be positive, got {k}")
    kids: list[list[int]] = [[] for _ in nodes]
    for v, p in enumerate(parents):
        if p >= 0:
            kids[p].append(v)
    built: list = [None] * len(nodes)
    for v in reversed(range(len(nodes))):
        sub = []
        for c in kids[v]:
            piece = built[c]
            for _ in range(lengths.get(c, 1) - 1):
                piece = FiniteTree((piece,))
            sub.append(piece)
        built[v] = FiniteTree(sub)
    return built[0]


def collapse(t: FiniteTree) -> FiniteTree:
    """Suppress every non-root node with exactly one child."""
    out: dict[int, FiniteTree] = {}
    for node in _postorder(t):
        if id(node) in out:
            continue
        sub = []
        for c in node.children:
            while len(c.children) == 1:
                c = c.children[0]
            sub.append(out[id(c)])
        out[id(node)] = FiniteTree(sub)
    return out[id(t)]


def reroot(t: FiniteTree, v: int) -> FiniteTree:
    """The same unrooted tree, rooted at preorder node ``v``."""
    nodes, parents = preorder(t)
    if not 0 <= v < len(nodes):
        raise ArgumentError(f"no node {v}")
    adj: list[list[int]] = [[] for _ in nodes]
    for c, p in enumerate(parents):
        if p >= 0:
            adj[p].append(c)
            adj[c].append(p)
    new_parents = [-2] * len(nodes)
    new_parents[v] = -1
    order = [v]
    for u in order:
        for w in adj[u]:
            if new_parents[w] == -2:
                new_parents[w] = u
                order.append(w)
    relabel = {old: new for new, old in enumerate(order)}
    return from_parents([-1] + [relabel[new_parents[old]] for old in order[1:]])


def all_rootings(t: FiniteTree) -> list[FiniteTree]:
    """One rooted tree per vertex of ``t``, in preorder of ``t``."""
    return [reroot(t, v) for v in range(t.size)]
