"""Independent reference procedures used to cross-check the fast paths.

Nothing here shares code with the routines it checks: counts come from the
classical generating-function recurrence, isomorphism from backtracking over
child assignments, and ``<=*`` from exhaustive dynamic programming over an
unrolled window.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .finite_tree import FiniteTree


def rooted_tree_counts(n_max: int) -> list[int]:
    """Number of unlabeled rooted trees on 1..n_max nodes (OEIS A000081)."""
    a = [0, 1]
    for n in range(1, n_max):
        total = Fraction(0)
        for k in range(1, n + 1):
            s = sum(d * a[d] for d in range(1, k + 1) if k % d == 0)
            total += s * a[n - k + 1]
        a.append(int(total / n))
    return a[1 : n_max + 1]


def backtrack_isomorphic(a: FiniteTree, b: FiniteTree) -> bool:
    """Rooted isomorphism by trying every child bijection."""
    if a.size != b.size or len(a.children) != len(b.children):
        return False

    def assign(i, used):
        if i == len(a.children):
            return True
        for j, c in enumerate(b.children):
            if j not in used and backtrack_isomorphic(a.children[i], c):
                if assign(i + 1, used | {j}):
                    return True
        return False

    return assign(0, frozenset())


def bounded_leq_star(f, g, leq) -> bool:
    """Exhaustive search for an increasing matching of a finite window.

    With ``N = |pf| + |cf|(|pg| + |cg| + 1)`` every cycle entry of ``f`` shows
    up more than ``|pg|`` times among the first ``N`` entries, so a matching of
    that window forces each cycle class of ``f`` under some cycle class of
    ``g`` and therefore extends forever.  The least matching never needs a
    ``g`` index past ``|pg| + |cg|(N + 1)``.
    """
    pf, cf = len(f.prefix), len(f.cycle)
    pg, cg = len(g.prefix), len(g.cycle)
    n_window = pf + cf * (pg + cg + 1)
    limit = pg + cg * (n_window + 1)
    fs = [f[n] for n in range(n_window)]
    gs = [g[k] for k in range(limit)]
    rel: dict[tuple[int, int], bool] = {}

    def ok(n, k):
        key = (id(fs[n]), id(gs[k]))
        if key not in rel:
            rel[key] = bool(leq(fs[n], gs[k]))
        return rel[key]

    @lru_cache(maxsize=None)
    def reach(n, k):
        # can entries n.. be placed at indices >= k?
        if n == n_window:
            return True
        for j in range(k, limit - (n_window - n) + 1):
            if ok(n, j) and reach(n + 1, j + 1):
                return True
        return False

    return reach(0, 0)
