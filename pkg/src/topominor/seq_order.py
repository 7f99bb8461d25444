"""The domination order on eventually periodic sequences of finite trees.

``f <=* g`` when some strictly increasing ``k_0 < k_1 < ...`` has
``f(n) <= g(k_n)`` for every ``n``.  A caterpillar (a ray with ``f(n)`` hung
off node ``n`` by an edge) embeds in another exactly when its sequence is
``<=*``-below the other's, which is what makes this order useful.

Only eventually periodic sequences are represented, which keeps the order
decidable: the greedy matcher is deterministic in a finite state space.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Generic, TypeVar

from .embed import rooted_minor
from .errors import ArgumentError
from .finite_tree import VERTEX, FiniteTree, canonical_code

T = TypeVar("T")


@dataclass(frozen=True)
class EPSeq(Generic[T]):
    """``prefix`` followed by ``cycle`` repeated forever."""

    prefix: tuple = ()
    cycle: tuple = (VERTEX,)

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.cycle:
            raise ArgumentError("cycle must be nonempty")

    def phase(self, n: int) -> int:
        """Index into ``prefix + cycle`` of entry ``n``."""
        p = len(self.prefix)
        return n if n < p else p + (n - p) % len(self.cycle)

    def __getitem__(self, n: int):
        return (self.prefix + self.cycle)[self.phase(n)]

    @property
    def period_items(self) -> tuple:
        return self.prefix + self.cycle

    @classmethod
    def constant(cls, item) -> "EPSeq":
        return cls((), (item,))


@dataclass
class StarResult:
    """Outcome of the greedy matcher.

    ``witness`` lists the greedy indices ``k_0, k_1, ...`` up to the point
    where the state repeats (success) or the search fails.  ``failure`` is
    ``None`` on success, else ``{"kind": "cycle", "f_phase": i}`` when cycle
    entry ``i`` of ``f`` sits below no cycle entry of ``g``, or
    ``{"kind": "prefix", "f_index": n}`` when prefix entry ``n`` cannot be
    placed after the earlier ones.
    """

    holds: bool
    witness: list[int] = field(default_factory=list)
    failure: dict | None = None

    def to_json(self):
        out: dict[str, Any] = {"witness": self.witness}
        if self.failure is not None:
            out["failure"] = self.failure
        return out


def _relation(f: EPSeq, g: EPSeq, leq: Callable):
    items_f = f.period_items
    items_g = g.period_items
    cache: dict[tuple[int, int], bool] = {}

    def rel(i: int, j: int) -> bool:
        key = (i, j)
        if key not in cache:
            cache[key] = bool(leq(items_f[i], items_g[j]))
        return cache[key]

    return rel


def leq_star_result(f: EPSeq, g: EPSeq, leq: Callable = rooted_minor) -> StarResult:
    pf, cf = len(f.prefix), len(f.cycle)
    pg, cg = len(g.prefix), len(g.cycle)
    rel = _relation(f, g, leq)
    for i in range(pf, pf + cf):
        if not any(rel(i, j) for j in range(pg, pg + cg)):
            return StarResult(False, [], {"kind": "cycle", "f_phase": i - pf})

    witness: list[int] = []
    seen = set()
    n, k = 0, -1
    while True:
        state = (f.phase(n), g.phase(k) if k >= 0 else -1)
        if state in seen:
            return StarResult(True, witness)
        seen.add(state)
        start = k + 1
        stop = max(start, pg) + cg
        fi = f.phase(n)
        nxt = next((j for j in range(start, stop) if rel(fi, g.phase(j))), None)
        if nxt is None:
            return StarResult(False, witness, {"kind": "prefix", "f_index": n})
        witness.append(nxt)
        n, k = n + 1, nxt


def leq_star(f: EPSeq, g: EPSeq, leq: Callable = rooted_minor) -> bool:
    return leq_star_result(f, g, leq).holds


def equiv_star(f: EPSeq, g: EPSeq, leq: Callable = rooted_minor) -> bool:
    return leq_star(f, g, leq) and leq_star(g, f, leq)


def unrolling_bound(f: EPSeq, g: EPSeq) -> int:
    """Number of leading entries of ``f`` that settle ``f <=* g``."""
    return len(f.prefix) + len(f.cycle) * (len(g.prefix) + len(g.cycle) + 1)


def normalize(f: EPSeq) -> EPSeq:
    """A sound normal form: equal normal forms imply ``equiv_star``.

    The cycle shrinks to its maximal classes (sorted by canonical code), then
    trailing prefix entries that some cycle class dominates are dropped.  Only
    a trailing run can go: removing an earlier entry would leave the later
    prefix entries no room in front of them.
    """
    classes = {canonical_code(t): t for t in f.cycle}
    top = []
    for code, t in classes.items():
        if not any(c2 != code and rooted_minor(t, u) for c2, u in classes.items()):
            top.append((code, t))
    top.sort(key=lambda pair: pair[0])
    cycle = tuple(t for _, t in top)
    prefix = list(f.prefix)
    while prefix and any(rooted_minor(prefix[-1], c) for c in cycle):
        prefix.pop()
    return EPSeq(tuple(prefix), cycle)


def t_f_truncate(f: EPSeq, n: int) -> FiniteTree:
    """First ``n`` spine nodes of the caterpillar, each with ``f(i)`` hung by an edge."""
    if n < 1:
        raise ArgumentError("need at least one spine node")
    node = FiniteTree((f[n - 1],))
    for i in range(n - 2, -1, -1):
        node = FiniteTree((f[i], node))
    return node
