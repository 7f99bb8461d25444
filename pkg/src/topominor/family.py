"""Subdivision families, collapse, and the order-1 canonical form.

Subdividing the spine edges of a presentation never changes its topological
type once every attachment recurs further out, yet different subdivision
patterns give non-isomorphic trees.  Prime-power edge lengths make that
concrete: ``PrimePowers(p)`` and ``PrimePowers(q)`` share no value for
``p != q``.

Trees of order at most 1 built from a finite core plus finitely many rays are
classified up to equivalence by a marked canonical code.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .embed import rooted_minor, unrooted_minor
from .errors import ArgumentError
from .finite_tree import FiniteTree, all_rootings, canonical_code, path
from .natseq import ONES, PeriodicNat, PrimePowers, in_range, is_prime, primes
from .ordinal import ONE, Ordinal
from .spined import (
    ATTACH,
    MinorResult,
    Periodic,
    SOrd,
    Spine,
    Verdict,
    Fin,
    _as_tree,
    expand,
    maximal_rays,
    order,
    spined_minor,
)


def _periodic_spine(t) -> Spine:
    t = expand(_as_tree(t))
    if not (isinstance(t, Spine) and isinstance(t.gen, Periodic)):
        raise ArgumentError("expected a spine with a periodic generator")
    return t


# -- collapse and ray conditions ------------------------------------------------

def collapse_presentation(t) -> Spine:
    """Drop spine nodes with empty attachments and reset every edge length to 1."""
    t = _periodic_spine(t)
    prefix = tuple(e for e in t.gen.prefix if e is not None)
    cycle = tuple(e for e in t.gen.cycle if e is not None) or (None,)
    return Spine(t.mode, Periodic(prefix, cycle), ONES)


def _dominated(mode: str, x, y) -> bool:
    """Hanging tree of ``x`` embeds root-to-root in the hanging tree of ``y``."""
    if y is None:
        return False
    if x == y:
        return True
    if isinstance(x, Fin) and isinstance(y, Fin):
        return rooted_minor(x.tree, y.tree, strict=(mode != ATTACH))
    if mode == ATTACH:
        return spined_minor(x, y) is Verdict.TRUE
    return False


def check_ray_conditions(t) -> bool:
    """Every prefix attachment is dominated by some later attachment.

    Cycle attachments recur, so only the prefix needs checking.
    """
    t = _periodic_spine(t)
    items = t.gen.prefix + t.gen.cycle
    for i, e in enumerate(t.gen.prefix):
        if e is not None and not any(_dominated(t.mode, e, y) for y in items[i + 1 :]):
            return False
    return True


def same_collapse(a, b) -> bool:
    """Both are subdivisions of one presentation that absorbs its own subdivisions."""
    try:
        ca, cb = collapse_presentation(a), collapse_presentation(b)
    except ArgumentError:
        return False
    return ca == cb and check_ray_conditions(ca)


def s_f(base, f) -> Spine:
    """``base`` with spine edge ``n -> n+1`` replaced by a path of ``f(n)`` edges."""
    base = _periodic_spine(base)
    if collapse_presentation(base) != base:
        raise ArgumentError("s_f needs a collapsed presentation")
    if not check_ray_conditions(base):
        raise ArgumentError("s_f needs every prefix attachment to recur further out")
    return dataclasses.replace(base, edge_lengths=f)


# -- isomorphism certificates ---------------------------------------------------

class IsoVerdict(str, Enum):
    ISO = "Iso"
    NONISO = "NonIso"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


def _rigid_pair(a, b) -> bool:
    """Same collapsed base with no empty attachments and the spine as its only maximal ray.

    An isomorphism then fixes the spine, and the branch points along it sit
    at the partial sums of the edge lengths.
    """
    if not (isinstance(a, Spine) and isinstance(b, Spine)):
        return False
    if not (isinstance(a.gen, Periodic) and isinstance(b.gen, Periodic)):
        return False
    if dataclasses.replace(a, edge_lengths=ONES) != dataclasses.replace(b, edge_lengths=ONES):
        return False
    if any(e is None for e in a.gen.prefix + a.gen.cycle):
        return False
    return [r.path for r in maximal_rays(a)] == [()]


def _samples(spec, k: int = 5) -> list[int]:
    return [spec.value(n) for n in range(k)]


def _iso_certificate(fa, fb) -> dict | None:
    if isinstance(fa, PrimePowers) and isinstance(fb, PrimePowers):
        if fa.p != fb.p:
            return {"kind": "distinct-primes", "p": fa.p, "q": fb.p, "samples": _samples(fa)}
        return None
    if isinstance(fa, PrimePowers) or isinstance(fb, PrimePowers):
        pp, per = (fa, fb) if isinstance(fa, PrimePowers) else (fb, fa)
        top = max(per.prefix + per.cycle)
        vals = [v for v in (pp.value(n) for n in range(top + 5)) if v > top][:5]
        side = "a" if pp is fa else "b"
        return {"kind": "unbounded-vs-periodic", "unbounded_side": side, "bound": top, "samples": vals}
    for side, x, y in (("a", fa, fb), ("b", fb, fa)):
        for v in x.cycle:
            if not in_range(y, v):
                return {"kind": "recurring-value", "side": side, "value": v}
    window = max(len(fa.prefix), len(fb.prefix)) + len(fa.cycle) * len(fb.cycle)
    for i in range(window):
        if fa.value(i) != fb.value(i):
            return {"kind": "length-mismatch", "index": i, "a": fa.value(i), "b": fb.value(i)}
    return None


def presentation_iso(a, b) -> tuple[IsoVerdict, dict | None]:
    a, b = _as_tree(a), _as_tree(b)
    if isinstance(a, Fin) and isinstance(b, Fin):
        return (IsoVerdict.ISO if a.tree == b.tree else IsoVerdict.NONISO), None
    if a == b:
        return IsoVerdict.ISO, None
    if _rigid_pair(a, b):
        cert = _iso_certificate(a.edge_lengths, b.edge_lengths)
        if cert is not None:
            return IsoVerdict.NONISO, cert
    return IsoVerdict.UNKNOWN, None


def verify_iso_certificate(a, b, cert: dict) -> bool:
    """Re-check a NonIso certificate from scratch."""
    if not _rigid_pair(a, b):
        return False
    fa, fb = a.edge_lengths, b.edge_lengths
    kind = cert.get("kind")
    if kind == "distinct-primes":
        p, q = cert["p"], cert["q"]
        if not (isinstance(fa, PrimePowers) and isinstance(fb, PrimePowers)):
            return False
        if (fa.p, fb.p) != (p, q) or p == q or not (is_prime(p) and is_prime(q)):
            return False
        # p^i = q^j has no solution with i, j >= 1 by unique factorization
        return all(in_range(fa, v) and not in_range(fb, v) for v in cert["samples"])
    if kind == "unbounded-vs-periodic":
        pp, per = (fa, fb) if cert["unbounded_side"] == "a" else (fb, fa)
        if not (isinstance(pp, PrimePowers) and isinstance(per, PeriodicNat)):
            return False
        bound = cert["bound"]
        if max(per.prefix + per.cycle) != bound:
            return False
        return bool(cert["samples"]) and all(v > bound and in_range(pp, v) for v in cert["samples"])
    if kind == "recurring-value":
        x, y = (fa, fb) if cert["side"] == "a" else (fb, fa)
        v = cert["value"]
        return isinstance(x, PeriodicNat) and v in x.cycle and not in_range(y, v)
    if kind == "length-mismatch":
        i = cert["index"]
        return fa.value(i) == cert["a"] != cert["b"] == fb.value(i)
    return False


def family_generate(base, n: int) -> list[Spine]:
    """``n`` pairwise equivalent, pairwise non-isomorphic subdivisions of ``base``."""
    if n < 1:
        raise ArgumentError("n must be positive")
    if order(base) < Ordinal.of(2):
        raise ArgumentError("family_generate needs a base of order at least 2")
    return [s_f(base, PrimePowers(p)) for p in primes(n)]


# -- order-1 canonical form -------------------------------------------------------

RAY = "R"


def is_order1_fragment(t) -> bool:
    """A finite core with finitely many rays hanging off it."""
    t = _as_tree(t)
    if t is None or isinstance(t, Fin):
        return True
    if isinstance(t, SOrd):
        return t.alpha == ONE
    if not isinstance(t.gen, Periodic) or any(e is not None for e in t.gen.cycle):
        return False
    return all(is_order1_fragment(e) for e in t.gen.prefix)


def _marked(t):
    """Nested child lists with ``RAY`` leaves for the rays."""
    t = expand(_as_tree(t))
    if isinstance(t, Fin):
        return _from_tree(t.tree)
    p = len(t.gen.prefix)
    if p == 0:
        return [RAY]

    def hang(n):
        e = t.gen.prefix[n]
        if e is None:
            return []
        m = _marked(e)
        return [m] if t.mode == ATTACH else list(m)

    node = hang(p - 1) + [RAY]
    for n in range(p - 2, -1, -1):
        link = node
        for _ in range(t.edge_lengths.value(n) - 1):
            link = [link]
        node = hang(n) + [link]
    return node


def _from_tree(tree: FiniteTree):
    return [_from_tree(c) for c in tree.children]


def _absorb(node, is_root: bool):
    """Fold non-root nodes whose only child is a ray into that ray."""
    if node == RAY:
        return RAY
    kids = [_absorb(c, False) for c in node]
    if not is_root and kids == [RAY]:
        return RAY
    return kids


def _code(node) -> str:
    if node == RAY:
        return RAY
    return "(" + "".join(sorted(_code(c) for c in node)) + ")"


def _core_size(node) -> int:
    return 0 if node == RAY else 1 + sum(_core_size(c) for c in node)


def _materialize(node, ray_len: int) -> FiniteTree:
    if node == RAY:
        return path(ray_len)
    return FiniteTree(tuple(_materialize(c, ray_len) for c in node))


@dataclass(frozen=True, eq=False)
class Order1Form:
    """Core tree plus the core nodes (preorder indices) where rays start."""

    core: FiniteTree
    ray_attach: tuple[int, ...]
    key: str

    def __eq__(self, other):
        return isinstance(other, Order1Form) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def to_json(self):
        from .finite_tree import to_parens

        return {"core": to_parens(self.core), "ray_attach": list(self.ray_attach)}


def _canonical_marked(t):
    if not is_order1_fragment(t):
        raise ArgumentError("not a finite core with finitely many rays")
    return _absorb(_marked(t), True)


def order1_canonical(t) -> Order1Form:
    if order(_as_tree(t)) > ONE:
        raise ArgumentError("order1_canonical needs order at most 1")
    node = _canonical_marked(t)
    attach: list[int] = []
    counter = [0]

    def build(n) -> FiniteTree:
        idx = counter[0]
        counter[0] += 1
        kids = sorted(n, key=_code)
        attach.extend(idx for c in kids if c == RAY)
        return FiniteTree(tuple(build(c) for c in kids if c != RAY))

    core = build(node)
    return Order1Form(core, tuple(sorted(attach)), _code(node))


def order1_minor(a, b) -> MinorResult:
    """Exact test: rays become paths too long to hide inside the other core."""
    ma, mb = _canonical_marked(a), _canonical_marked(b)
    ca, cb = _core_size(ma), _core_size(mb)
    la = cb + 2
    lb = la + ca + cb + 2
    ok = rooted_minor(_materialize(ma, la), _materialize(mb, lb))
    cert = {"ray_length_a": la, "ray_length_b": lb}
    return MinorResult(Verdict.TRUE if ok else Verdict.FALSE, "core-and-rays", cert)


# -- root independence at finite scale ------------------------------------------

@lru_cache(maxsize=None)
def _unrooted_by_code(tc: str, sc: str) -> bool:
    return unrooted_minor(_TREES[tc], _TREES[sc])


_TREES: dict[str, FiniteTree] = {}


def _cached_unrooted(t: FiniteTree, s: FiniteTree) -> bool:
    tc, sc = canonical_code(t), canonical_code(s)
    _TREES.setdefault(tc, t)
    _TREES.setdefault(sc, s)
    return _unrooted_by_code(tc, sc)


def reroot_invariance_check(t: FiniteTree, others=None) -> bool:
    """``unrooted_minor`` gives one verdict for every rooting of both arguments."""
    from .finite_tree import enumerate_rooted_trees

    if others is None:
        others = [s for n in range(1, t.size + 1) for s in enumerate_rooted_trees(n)]
    t_roots = all_rootings(t)
    for s in others:
        s_roots = all_rootings(s)
        forward = {_cached_unrooted(x, y) for x in t_roots for y in s_roots}
        back = {_cached_unrooted(y, x) for x in t_roots for y in s_roots}
        if len(forward) > 1 or len(back) > 1:
            return False
    return True
