"""Topological-minor decisions on finite rooted trees.

``t`` is a rooted topological minor of ``s`` when some subdivision of ``t``
sits inside ``s`` with every edge running away from the root.  By default the
root of ``t`` may land anywhere in ``s``; ``strict=True`` pins it to the root.

The decision procedure is the classical subtree-homeomorphism recursion:

* ``A(x, v)``: ``x`` embeds with its root exactly at ``v``.  Holds when the
  root subtrees of ``x`` can be matched injectively to children ``c`` of ``v``
  with ``B(x_i, c)``.
* ``B(x, v)``: ``A(x, v)`` or ``B(x, c)`` for some child ``c`` of ``v``.

Both predicates depend only on the isomorphism types of ``x`` and of the
subtree at ``v``, so everything is tabulated over interned shape ids.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import config
from .errors import ResourceError
from .finite_tree import FiniteTree, _postorder, all_rootings, canonical_code, preorder, subdivide
from .matching import has_perfect_left_matching, max_matching


class _Shapes:
    """Shared interning table: shape id -> (child ids, size, height)."""

    def __init__(self):
        self.key_to_id: dict = {}
        self.kids: list[tuple[int, ...]] = []
        self.size: list[int] = []
        self.height: list[int] = []
        self.node_id: dict[int, int] = {}

    def add(self, t: FiniteTree) -> int:
        for node in _postorder(t):
            if id(node) in self.node_id:
                continue
            kid_ids = tuple(sorted(self.node_id[id(c)] for c in node.children))
            sid = self.key_to_id.get(kid_ids)
            if sid is None:
                sid = self.key_to_id[kid_ids] = len(self.kids)
                self.kids.append(kid_ids)
                self.size.append(node.size)
                self.height.append(node.height)
            self.node_id[id(node)] = sid
        return self.node_id[id(t)]

    def closure(self, root: int) -> list[int]:
        seen = {root}
        stack = [root]
        while stack:
            for k in self.kids[stack.pop()]:
                if k not in seen:
                    seen.add(k)
                    stack.append(k)
        return sorted(seen)


class _Solver:
    def __init__(self, t: FiniteTree, s: FiniteTree):
        self.shapes = sh = _Shapes()
        self.t_root = sh.add(t)
        self.s_root = sh.add(s)
        pattern = sh.closure(self.t_root)
        self.A: dict[int, set[int]] = {}
        self.B: dict[int, set[int]] = {}
        # ids are assigned in postorder, so children are tabulated first
        for v in sh.closure(self.s_root):
            vk = sh.kids[v]
            a_set = set()
            for x in pattern:
                if sh.size[x] > sh.size[v] or sh.height[x] > sh.height[v]:
                    continue
                xk = sh.kids[x]
                if len(xk) > len(vk):
                    continue
                adj = [[j for j, c in enumerate(vk) if xi in self.B[c]] for xi in xk]
                if has_perfect_left_matching(adj, len(vk)) or not xk:
                    a_set.add(x)
            b_set = set(a_set)
            for c in vk:
                b_set |= self.B[c]
            self.A[v] = a_set
            self.B[v] = b_set

    def holds(self, strict: bool) -> bool:
        table = self.A if strict else self.B
        return self.t_root in table[self.s_root]


def rooted_minor(t: FiniteTree, s: FiniteTree, strict: bool = False) -> bool:
    """Decide whether ``t`` is a rooted topological minor of ``s``."""
    if t.size > s.size or t.height > s.height:
        return False
    return _Solver(t, s).holds(strict)


@dataclass
class EmbeddingWitness:
    """Node images and edge paths, all as preorder indices.

    ``paths[c]`` is the path in ``s`` from the image of ``c``'s parent to the
    image of ``c`` (both endpoints included).
    """

    node_map: dict[int, int] = field(default_factory=dict)
    paths: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def to_json(self):
        return {
            "node_map": {str(k): v for k, v in sorted(self.node_map.items())},
            "paths": {str(k): list(v) for k, v in sorted(self.paths.items())},
        }


def rooted_minor_witness(t: FiniteTree, s: FiniteTree, strict: bool = False) -> EmbeddingWitness | None:
    if t.size > s.size or t.height > s.height:
        return None
    solver = _Solver(t, s)
    if not solver.holds(strict):
        return None
    sh = solver.shapes
    t_nodes, t_par = preorder(t)
    s_nodes, s_par = preorder(s)
    t_kids: list[list[int]] = [[] for _ in t_nodes]
    for v, p in enumerate(t_par):
        if p >= 0:
            t_kids[p].append(v)
    s_kids: list[list[int]] = [[] for _ in s_nodes]
    for v, p in enumerate(s_par):
        if p >= 0:
            s_kids[p].append(v)

    def tid(i):
        return sh.node_id[id(t_nodes[i])]

    def sid(j):
        return sh.node_id[id(s_nodes[j])]

    def descend(x: int, v: int) -> list[int]:
        route = [v]
        while x not in solver.A[sid(v)]:
            v = next(c for c in s_kids[v] if x in solver.B[sid(c)])
            route.append(v)
        return route

    witness = EmbeddingWitness()
    start = descend(tid(0), 0)[-1]
    witness.node_map[0] = start
    stack = [0]
    while stack:
        i = stack.pop()
        v = witness.node_map[i]
        kids = t_kids[i]
        adj = [[j for j, c in enumerate(s_kids[v]) if tid(k) in solver.B[sid(c)]] for k in kids]
        match = max_matching(adj, len(s_kids[v]))
        for k, j in zip(kids, match):
            route = descend(tid(k), s_kids[v][j])
            witness.paths[k] = (v, *route)
            witness.node_map[k] = route[-1]
            stack.append(k)
    return witness


def check_witness(t: FiniteTree, s: FiniteTree, w: EmbeddingWitness, strict: bool = False) -> bool:
    """Verify a witness directly from the definition of a subdivided subgraph."""
    t_nodes, t_par = preorder(t)
    s_nodes, s_par = preorder(s)
    if set(w.node_map) != set(range(len(t_nodes))):
        return False
    if set(w.paths) != set(range(1, len(t_nodes))):
        return False
    if strict and w.node_map[0] != 0:
        return False
    used = list(w.node_map.values())
    for c in range(1, len(t_nodes)):
        route = w.paths[c]
        if len(route) < 2:
            return False
        if route[0] != w.node_map[t_par[c]] or route[-1] != w.node_map[c]:
            return False
        for a, b in zip(route, route[1:]):
            if not (0 <= b < len(s_nodes)) or s_par[b] != a:
                return False
        used.extend(route[1:-1])
    return len(used) == len(set(used))


def unrooted_minor(t: FiniteTree, s: FiniteTree) -> bool:
    """``t`` (keeping its root) fits into ``s`` rooted at some vertex."""
    if t.size > s.size:
        return False
    seen = set()
    for r in all_rootings(s):
        code = canonical_code(r)
        if code in seen:
            continue
        seen.add(code)
        if rooted_minor(t, r, strict=True):
            return True
    return False


def topo_equiv(t: FiniteTree, s: FiniteTree, strict: bool = False) -> bool:
    return rooted_minor(t, s, strict) and rooted_minor(s, t, strict)


# -- brute force oracle ------------------------------------------------------

def _compositions(total: int, parts: int):
    """All tuples of ``parts`` nonnegative ints summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 1 - prev - 1)
        yield tuple(out)


def _subgraph_at(g: FiniteTree, v: FiniteTree) -> bool:
    """Backtracking: ``g`` sits in ``v`` with roots identified and edges kept."""
    if len(g.children) > len(v.children):
        return False

    def assign(i, used):
        if i == len(g.children):
            return True
        for j, c in enumerate(v.children):
            if j in used:
                continue
            if _subgraph_at(g.children[i], c) and assign(i + 1, used | {j}):
                return True
        return False

    return assign(0, frozenset())


def brute_force_minor(t: FiniteTree, s: FiniteTree, strict: bool = False, bound: int | None = None) -> bool:
    """Enumerate every subdivision of ``t`` that fits by size and test each as a subgraph."""
    if bound is None:
        bound = config.brute_max()
    if s.size > bound:
        raise ResourceError(f"host tree has {s.size} nodes, brute-force bound is {bound}")
    hosts = [s] if strict else preorder(s)[0]
    edges = t.size - 1
    seen = set()
    for extra in range(0, s.size - t.size + 1):
        for comp in _compositions(extra, edges):
            g = subdivide(t, {e + 1: k + 1 for e, k in enumerate(comp)})
            code = canonical_code(g)
            if code in seen:
                continue
            seen.add(code)
            if any(_subgraph_at(g, v) for v in hosts):
                return True
    return False
