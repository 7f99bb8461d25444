"""Finitely presented locally finite infinite trees.

A presentation is one of

* ``Fin(tree)``: a finite rooted tree;
* ``SOrd(alpha)``: shorthand for the ordinal-indexed tree ``S(alpha)``;
* ``Spine(mode, gen, edge_lengths)``: a ray (the spine) whose ``n``-th node
  carries the ``n``-th attachment of ``gen``.  With ``mode="attach"`` the
  attachment root hangs from the spine node by a new edge; with ``"glue"`` the
  two are fused.  ``edge_lengths`` subdivides spine edge ``n -> n+1`` into a
  path with that many edges.

Generators: ``Periodic(prefix, cycle)`` with ``None`` marking an empty
attachment, ``OrdinalRamp(alpha)`` attaching ``S(fundamental(alpha, n))`` at
node ``n``, and ``VRamp()`` attaching the star ``V_{n+1}`` at node ``n``.

The root of a spine presentation is spine node 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Union

from . import config
from .errors import ArgumentError, ResourceError, UnsupportedError
from .finite_tree import VERTEX, FiniteTree, _postorder, star
from .natseq import ONES, NatSeqSpec, PeriodicNat, normalize_periodic
from .ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    fundamental,
    is_limit,
    ord_max,
    predecessor,
    succ,
)

ATTACH = "attach"
GLUE = "glue"


@dataclass(frozen=True)
class Fin:
    tree: FiniteTree


@dataclass(frozen=True)
class SOrd:
    alpha: Ordinal


@dataclass(frozen=True)
class Periodic:
    prefix: tuple = ()
    cycle: tuple = (None,)

    def __post_init__(self):
        if not self.cycle:
            raise ArgumentError("cycle must be nonempty")
        prefix, cycle = normalize_periodic(tuple(self.prefix), tuple(self.cycle))
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "cycle", cycle)

    def entry(self, n: int):
        p = len(self.prefix)
        return self.prefix[n] if n < p else self.cycle[(n - p) % len(self.cycle)]


@dataclass(frozen=True)
class OrdinalRamp:
    alpha: Ordinal

    def __post_init__(self):
        if not is_limit(self.alpha):
            raise ArgumentError(f"ordinal ramp needs a limit ordinal, got {self.alpha}")

    def entry(self, n: int):
        return SOrd(fundamental(self.alpha, n))


@dataclass(frozen=True)
class VRamp:
    def entry(self, n: int):
        return Fin(star(n + 1))


GenSeq = Union[Periodic, OrdinalRamp, VRamp]


@dataclass(frozen=True)
class Spine:
    mode: str
    gen: GenSeq
    edge_lengths: NatSeqSpec = ONES

    def __post_init__(self):
        if self.mode not in (ATTACH, GLUE):
            raise ArgumentError(f"mode must be attach or glue, got {self.mode!r}")
        gen = self.gen
        if isinstance(gen, Periodic):
            if self.mode == GLUE:
                # a glued single vertex adds nothing
                def clean(e):
                    return None if isinstance(e, Fin) and e.tree.size == 1 else e

                gen = Periodic(tuple(map(clean, gen.prefix)), tuple(map(clean, gen.cycle)))
                object.__setattr__(self, "gen", gen)
            if all(e is None for e in gen.prefix + gen.cycle):
                object.__setattr__(self, "mode", ATTACH)

    def entry(self, n: int):
        return self.gen.entry(n)


SpinedTree = Union[Fin, Spine, SOrd]


@dataclass(frozen=True)
class RayDescriptor:
    """A ray named by the attachment positions leading to its spine."""

    path: tuple[str, ...]
    order: Ordinal

    def __str__(self):
        return "/".join(self.path + ("spine",))


def ray() -> Spine:
    return Spine(ATTACH, Periodic((), (None,)))


def is_finite(t) -> bool:
    return t is None or isinstance(t, Fin) or (isinstance(t, SOrd) and t.alpha == ZERO)


# -- the S hierarchy -------------------------------------------------------------

def build_s(alpha: Ordinal) -> SpinedTree:
    """One level of ``S(alpha)``; nested levels stay as ``SOrd`` shorthand."""
    if alpha == ZERO:
        return Fin(VERTEX)
    if alpha == ONE:
        return ray()
    if is_limit(alpha):
        return Spine(ATTACH, OrdinalRamp(alpha))
    return Spine(ATTACH, Periodic((), (SOrd(predecessor(alpha)),)))


def expand(t):
    """Replace a top-level ``SOrd`` by its one-level presentation."""
    return build_s(t.alpha) if isinstance(t, SOrd) else t


# -- order and maximal rays ---------------------------------------------------

@lru_cache(maxsize=4096)
def order(t) -> Ordinal:
    """The largest ``alpha`` with ``S(alpha)`` a topological minor of ``t``."""
    if t is None or isinstance(t, Fin):
        return ZERO
    if isinstance(t, SOrd):
        return t.alpha
    return ord_max(spine_order(t), _max_attachment_order(t))


def spine_order(t: Spine) -> Ordinal:
    """Order carried by the spine ray itself."""
    gen = t.gen
    if isinstance(gen, Periodic):
        top = ZERO
        for e in gen.cycle:
            top = ord_max(top, order(e))
        return succ(top)
    if isinstance(gen, OrdinalRamp):
        return gen.alpha
    return ONE


def _max_attachment_order(t: Spine) -> Ordinal:
    gen = t.gen
    if isinstance(gen, Periodic):
        top = ZERO
        for e in gen.prefix + gen.cycle:
            top = ord_max(top, order(e))
        return top
    # ramp attachments all sit strictly below the spine order
    return ZERO


def maximal_rays(t) -> list[RayDescriptor]:
    """Rays whose order equals ``order(t)``; empty for finite trees."""
    if is_finite(t):
        return []
    t = expand(t)
    top = order(t)
    out = []
    if spine_order(t) == top:
        out.append(RayDescriptor((), top))
    gen = t.gen
    if isinstance(gen, Periodic):
        for i, e in enumerate(gen.prefix):
            if e is not None and order(e) == top:
                for r in maximal_rays(e):
                    out.append(RayDescriptor((f"prefix[{i}]",) + r.path, r.order))
    return out


def classify(t) -> tuple[Ordinal, int]:
    if is_finite(t):
        raise ArgumentError("classify needs an infinite tree")
    return order(t), len(maximal_rays(t))


# -- combs --------------------------------------------------------------------

def make_comb(n, hairy: bool) -> Spine:
    """Hairy n-comb: ``V_n`` attached at every node.  n-comb: ``V_{n-1}`` glued.

    ``n == "w"`` gives the omega variants with ``V_{k+1}`` at node ``k``.
    """
    mode = ATTACH if hairy else GLUE
    if n == "w" or n == OMEGA:
        return Spine(mode, VRamp())
    if not isinstance(n, int):
        raise ArgumentError(f"comb size must be an integer or 'w', got {n!r}")
    if hairy and n < 1:
        raise ArgumentError("hairy combs need n >= 1")
    if not hairy and n < 2:
        raise ArgumentError("combs need n >= 2")
    return Spine(mode, Periodic((), (Fin(star(n if hairy else n - 1)),)))


# -- branching bounds ---------------------------------------------------------

def _tree_max_children(tree: FiniteTree, skip_root: bool = False) -> int:
    return max(
        (len(node.children) for node in _postorder(tree) if not (skip_root and node is tree)),
        default=0,
    )


def root_children(t) -> int | None:
    """Number of children of the root (None: unbounded never happens here)."""
    if t is None:
        return 0
    if isinstance(t, Fin):
        return len(t.tree.children)
    if isinstance(t, SOrd):
        return 0 if t.alpha == ZERO else (1 if t.alpha == ONE else 2)
    return 1 + _hang_root_children(t.mode, t.entry(0))


def _hang_root_children(mode: str, e) -> int:
    if e is None:
        return 0
    return 1 if mode == ATTACH else root_children(e)


def max_children(t, skip_root: bool = False) -> int | None:
    """Largest number of children of any node (optionally ignoring the root).

    ``None`` means unbounded.
    """
    if t is None:
        return 0
    if isinstance(t, Fin):
        return _tree_max_children(t.tree, skip_root)
    if isinstance(t, SOrd):
        if t.alpha == ZERO:
            return 0
        return 1 if t.alpha == ONE else 2
    gen = t.gen
    if isinstance(gen, VRamp):
        return None
    if isinstance(gen, OrdinalRamp):
        return 2
    best = 1
    for idx, e in enumerate(gen.prefix + gen.cycle):
        at_root = idx == 0
        if not (skip_root and at_root):
            best = max(best, 1 + _hang_root_children(t.mode, e))
        if e is None:
            continue
        inner = max_children(e, skip_root=(t.mode == GLUE))
        if inner is None:
            return None
        best = max(best, inner)
    if skip_root and len(gen.prefix) == 0 and len(gen.cycle) > 0:
        # node 0 is a cycle entry that recurs further down
        best = max(best, 1 + _hang_root_children(t.mode, gen.cycle[0]))
    return best


# -- truncation ---------------------------------------------------------------

def truncate(t, spine_steps: int, depth: int, cap: int | None = None) -> FiniteTree:
    """Finite part of ``t``: ``spine_steps`` nodes per spine, spines nested ``depth`` deep.

    A spine reached with no depth left contributes just its root node.
    """
    if spine_steps < 1 or depth < 1:
        raise ArgumentError("spine_steps and depth must be positive")
    if cap is None:
        cap = config.truncation_cap()
    return _truncate(t, spine_steps, depth, cap)


def _check_cap(size: int, cap: int):
    if size > cap:
        raise ResourceError(f"truncation exceeds {cap} nodes")


def _truncate(t, k: int, d: int, cap: int) -> FiniteTree:
    if isinstance(t, Fin):
        _check_cap(t.tree.size, cap)
        return t.tree
    if isinstance(t, SOrd):
        return _truncate(build_s(t.alpha), k, d, cap)
    if d == 0:
        return VERTEX
    hangs: list[list[FiniteTree]] = []
    total = 0
    for n in range(k):
        e = t.entry(n)
        if e is None:
            hangs.append([])
            continue
        sub = _truncate(e, k, d - 1, cap)
        pieces = [sub] if t.mode == ATTACH else list(sub.children)
        total += sum(p.size for p in pieces)
        _check_cap(total, cap)
        hangs.append(pieces)
    node = FiniteTree(hangs[k - 1])
    size = total + 1
    for n in range(k - 2, -1, -1):
        link = node
        for _ in range(t.edge_lengths.value(n) - 1):
            link = FiniteTree((link,))
            size += 1
            _check_cap(size, cap)
        node = FiniteTree(hangs[n] + [link])
        size += 1
        _check_cap(size, cap)
    return node


# -- hanging sequences ----------------------------------------------------------

def hanging(mode: str, e) -> FiniteTree:
    """The finite tree at a spine node, excluding the spine continuation."""
    if e is None:
        return VERTEX
    tree = e.tree
    return FiniteTree((tree,)) if mode == ATTACH else tree


def _fin_entries(t) -> bool:
    return (
        isinstance(t, Spine)
        and isinstance(t.gen, Periodic)
        and all(e is None or isinstance(e, Fin) for e in t.gen.prefix + t.gen.cycle)
    )


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


def _expanded_window(t: Spine) -> tuple[int, int]:
    """Prefix length and period (in spine nodes) shared by entries and edge lengths."""
    lengths = t.edge_lengths
    p = max(len(t.gen.prefix), len(lengths.prefix))
    return p, _lcm(len(t.gen.cycle), len(lengths.cycle))


def hanging_sequence(t: Spine):
    """Hanging trees of every spine vertex, subdivision vertices included.

    Needs finite entries and periodic edge lengths; returns an ``EPSeq``.
    """
    from .seq_order import EPSeq

    if not _fin_entries(t) or not isinstance(t.edge_lengths, PeriodicNat):
        raise UnsupportedError("hanging sequences need finite entries and periodic lengths")
    p, c = _expanded_window(t)

    def block(n):
        return [hanging(t.mode, t.entry(n))] + [VERTEX] * (t.edge_lengths.value(n) - 1)

    prefix = [h for n in range(p) for h in block(n)]
    cycle = [h for n in range(p, p + c) for h in block(n)]
    return EPSeq(tuple(prefix), tuple(cycle))


# -- the minor decision -------------------------------------------------------

class Verdict(str, Enum):
    TRUE = "True"
    FALSE = "False"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass
class MinorResult:
    verdict: Verdict
    rule: str
    certificate: dict = field(default_factory=dict)

    def to_json(self):
        return {"verdict": str(self.verdict), "rule": self.rule, "certificate": self.certificate}


def _as_tree(t):
    if isinstance(t, SOrd) and t.alpha == ZERO:
        return Fin(VERTEX)
    return t


def sord_index(t) -> Ordinal | None:
    """``alpha`` when the presentation is recognizably equivalent to ``S(alpha)``.

    Recognized: ``SOrd``, the single vertex, an attach spine whose entries are
    recognized S-trees of index at least 1 (or empty) with every prefix index
    at most the largest cycle index, and ordinal ramps.  Edge lengths are free.
    """
    t = _as_tree(t)
    if isinstance(t, SOrd):
        return t.alpha
    if isinstance(t, Fin):
        return ZERO if t.tree.size == 1 else None
    if t.mode != ATTACH:
        return None
    gen = t.gen
    if isinstance(gen, OrdinalRamp):
        return gen.alpha
    if isinstance(gen, VRamp):
        return None

    def idx(e):
        if e is None:
            return ZERO
        i = sord_index(e)
        return i if i is not None and i >= ONE else None

    cyc = [idx(e) for e in gen.cycle]
    pre = [idx(e) for e in gen.prefix]
    if any(i is None for i in cyc + pre):
        return None
    top = max(cyc)
    if any(i > top for i in pre):
        return None
    return succ(top)


def _fin_vs_infinite(a: FiniteTree, b) -> MinorResult:
    from .embed import rooted_minor

    cap_b = max_children(b)
    need = _tree_max_children(a)
    if cap_b is not None and need > cap_b:
        return MinorResult(
            Verdict.FALSE, "degree", {"children_needed": need, "children_available": cap_b}
        )
    exact = _fin_entries(b) and isinstance(b.edge_lengths, PeriodicNat)
    if exact:
        p, c = _expanded_window(b)
        steps = p + c * a.size + 1
        tb = truncate(b, steps, 2)
        if rooted_minor(a, tb):
            return MinorResult(Verdict.TRUE, "truncation", {"spine_steps": steps, "depth": 2})
        # every embedding can be slid back to within this many spine nodes
        return MinorResult(Verdict.FALSE, "window", {"spine_steps": steps})
    top = a.size + 2
    for k in range(1, top + 1):
        try:
            tb = truncate(b, k, k)
        except ResourceError:
            break
        if rooted_minor(a, tb):
            return MinorResult(Verdict.TRUE, "truncation", {"spine_steps": k, "depth": k})
    return MinorResult(Verdict.UNKNOWN, "truncation-search", {"max_steps": top})


def _vramp_fits(a: Spine, b: Spine) -> bool:
    """Every hanging tree of ``a`` fits some (hence every later) hanging tree of ``b``."""
    from .embed import rooted_minor

    for e in a.gen.prefix + a.gen.cycle:
        h = hanging(a.mode, e)
        if not rooted_minor(h, hanging(b.mode, b.entry(h.size)), strict=True):
            return False
    return True


def _entry_leq_true(x, y) -> bool:
    if x is None:
        return True
    if y is None:
        return False
    return spined_minor(x, y) is Verdict.TRUE


def _periodic_lengths(t: Spine) -> bool:
    return isinstance(t.edge_lengths, PeriodicNat)


def _attach_greedy(a: Spine, b: Spine) -> bool:
    """Attach spines: match entries greedily, counting only proven embeddings."""
    from .seq_order import EPSeq, leq_star

    def seq(t):
        p, c = _expanded_window(t)

        def block(n):
            return [t.entry(n)] + [None] * (t.edge_lengths.value(n) - 1)

        return EPSeq(
            tuple(x for n in range(p) for x in block(n)),
            tuple(x for n in range(p, p + c) for x in block(n)),
        )

    return leq_star(seq(a), seq(b), leq=_entry_leq_true)


def spined_minor_result(a, b) -> MinorResult:
    """Three-valued ``a <=# b`` with the rule that decided it."""
    from .embed import rooted_minor, rooted_minor_witness
    from .seq_order import leq_star_result

    a, b = _as_tree(a), _as_tree(b)
    if isinstance(a, Fin) and isinstance(b, Fin):
        w = rooted_minor_witness(a.tree, b.tree)
        if w is None:
            return MinorResult(Verdict.FALSE, "finite")
        return MinorResult(Verdict.TRUE, "finite", {"witness": w.to_json()})
    if isinstance(b, Fin):
        return MinorResult(Verdict.FALSE, "infinite-into-finite")
    oa, ob = order(a), order(b)
    if oa > ob:
        return MinorResult(Verdict.FALSE, "order", {"order_a": str(oa), "order_b": str(ob)})
    alpha = sord_index(a)
    if alpha is not None:
        v = Verdict.TRUE if alpha <= ob else Verdict.FALSE
        return MinorResult(v, "s-hierarchy", {"alpha": str(alpha), "order_b": str(ob)})
    from . import family

    if isinstance(a, Fin):
        if family.is_order1_fragment(b):
            return family.order1_minor(a, b)
        return _fin_vs_infinite(a.tree, b)
    a, b = expand(a), expand(b)

    if _fin_entries(a) and _fin_entries(b) and _periodic_lengths(a) and _periodic_lengths(b):
        res = leq_star_result(
            hanging_sequence(a),
            hanging_sequence(b),
            leq=lambda x, y: rooted_minor(x, y, strict=True),
        )
        v = Verdict.TRUE if res.holds else Verdict.FALSE
        return MinorResult(v, "hanging-sequences", res.to_json())
    if isinstance(b.gen, VRamp) and (isinstance(a.gen, VRamp) or _fin_entries(a)):
        if isinstance(a.gen, VRamp):
            v = Verdict.TRUE if a.mode == b.mode else Verdict.FALSE
        else:
            v = Verdict.TRUE if _vramp_fits(a, b) else Verdict.FALSE
        return MinorResult(v, "v-ramp")
    if isinstance(a.gen, VRamp) and _fin_entries(b):
        return MinorResult(Verdict.FALSE, "v-ramp", {"reason": "unbounded hanging trees"})

    if family.is_order1_fragment(a) and family.is_order1_fragment(b):
        return family.order1_minor(a, b)
    if family.same_collapse(a, b):
        return MinorResult(Verdict.TRUE, "collapse")
    if (
        a.mode == ATTACH == b.mode
        and isinstance(a.gen, Periodic)
        and isinstance(b.gen, Periodic)
        and _periodic_lengths(a)
        and _periodic_lengths(b)
        and _attach_greedy(a, b)
    ):
        return MinorResult(Verdict.TRUE, "attachment-greedy")
    return MinorResult(Verdict.UNKNOWN, "none")


def spined_minor(a, b) -> Verdict:
    return spined_minor_result(a, b).verdict


def spined_equiv(a, b) -> Verdict:
    one = spined_minor(a, b)
    if one is Verdict.FALSE:
        return one
    two = spined_minor(b, a)
    if two is Verdict.FALSE:
        return two
    return Verdict.TRUE if one is two is Verdict.TRUE else Verdict.UNKNOWN


# -- comb-tracing rays ----------------------------------------------------------

def _qualifies(mode: str, e, alpha) -> bool:
    """Whether attachment ``e`` lets a comb of index ``alpha`` use this spine node."""
    if e is None:
        return False
    inner = max_children(e, skip_root=(mode == GLUE))
    at_node = 1 if mode == ATTACH else root_children(e)
    if alpha == "w":
        return inner is None
    # hairy alpha-comb: a node with alpha children off the spine
    if inner is None or inner >= alpha:
        return True
    # (alpha-1)-comb: alpha-2 extra children at the spine node
    return at_node >= alpha - 2


def t_star(t, alpha):
    """Sub-presentation spanned by rays that trace a hairy alpha-comb or an (alpha-1)-comb.

    ``alpha`` is an integer at least 3 or ``"w"``.  Returns None when no ray
    qualifies.
    """
    if alpha != "w" and (not isinstance(alpha, int) or alpha < 3):
        raise ArgumentError(f"alpha must be an integer >= 3 or 'w', got {alpha!r}")
    if t is None:
        return None
    t = _as_tree(t)
    if isinstance(t, Fin):
        return None
    t = expand(t)
    if isinstance(t.gen, OrdinalRamp):
        raise UnsupportedError("t_star does not handle ordinal ramps")
    if isinstance(t.gen, VRamp):
        return Spine(ATTACH, Periodic((), (None,)), t.edge_lengths)
    gen = t.gen
    spine_ok = any(_qualifies(t.mode, e, alpha) for e in gen.cycle)
    prefix = tuple(t_star(e, alpha) for e in gen.prefix)
    cycle = tuple(t_star(e, alpha) for e in gen.cycle)
    if spine_ok or any(e is not None for e in cycle):
        return Spine(t.mode, Periodic(prefix, cycle), t.edge_lengths)
    if any(e is not None for e in prefix):
        return Spine(t.mode, Periodic(prefix, (None,)), t.edge_lengths)
    return None
