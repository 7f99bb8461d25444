"""Acceptance checks, runnable from the test suite and from ``topominor selftest``.

Each check returns a :class:`Check` with a pass flag and a short detail
string.  Random inputs come from fixed seeds so runs are reproducible.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .dsl import (
    CombE,
    EmptyE,
    FinE,
    NatSeqE,
    PPowE,
    RampE,
    SeqE,
    SfE,
    SOrdE,
    SpineE,
    VRampE,
    parse,
    print_expr,
)
from .embed import brute_force_minor, rooted_minor, topo_equiv
from .family import (
    IsoVerdict,
    collapse_presentation,
    family_generate,
    order1_canonical,
    presentation_iso,
    reroot_invariance_check,
    verify_iso_certificate,
)
from .finite_tree import (
    VERTEX,
    FiniteTree,
    complete_binary,
    enumerate_rooted_trees,
    is_isomorphic,
    path,
    random_tree,
    star,
)
from .natseq import PeriodicNat, primes
from .oracles import bounded_leq_star, rooted_tree_counts
from .ordinal import ZERO, Ordinal, compare, parse_ordinal
from .render import emit_dot
from .seq_order import EPSeq, leq_star_result, t_f_truncate
from .spined import (
    ATTACH,
    GLUE,
    Fin,
    Periodic,
    SOrd,
    Spine,
    Verdict,
    VRamp,
    build_s,
    make_comb,
    order,
    spined_minor,
    t_star,
    truncate,
)


@dataclass
class Check:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d} {self.name}: {self.detail}"


def trees_upto(n: int) -> list[FiniteTree]:
    return [t for k in range(1, n + 1) for t in enumerate_rooted_trees(k)]


# -- random generators ------------------------------------------------------------


def random_epseq(rng: random.Random, max_nodes: int = 5) -> EPSeq:
    def tree():
        return random_tree(rng.randint(1, max_nodes), rng)

    prefix = tuple(tree() for _ in range(rng.randint(0, 2)))
    cycle = tuple(tree() for _ in range(rng.randint(1, 3)))
    return EPSeq(prefix, cycle)


def drop_leaf(t: FiniteTree, rng: random.Random) -> FiniteTree:
    """A root-preserving minor of ``t``: one leaf removed (a single vertex stays)."""
    if t.size == 1:
        return t
    i = rng.randrange(len(t.children))
    kid = t.children[i]
    rest = t.children[:i] + t.children[i + 1 :]
    if kid.size == 1:
        return FiniteTree(rest)
    return FiniteTree(rest + (drop_leaf(kid, rng),))


def random_lengths(rng: random.Random) -> PeriodicNat:
    if rng.random() < 0.5:
        return PeriodicNat((), (1,))
    prefix = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 2)))
    cycle = tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 2)))
    return PeriodicNat(prefix, cycle)


def random_presentation(rng: random.Random, depth: int = 2):
    """A presentation built from finite trees, periodic spines, V-ramps and finite S indices."""
    roll = rng.random()
    if depth == 0 or roll < 0.3:
        return Fin(random_tree(rng.randint(1, 5), rng))
    if roll < 0.4:
        return SOrd(Ordinal.of(rng.randint(1, 3)))
    mode = rng.choice([ATTACH, GLUE])
    if roll < 0.5:
        return Spine(mode, VRamp(), random_lengths(rng))

    def entry():
        if rng.random() < 0.25:
            return None
        if rng.random() < 0.6:
            return Fin(star(rng.randint(1, 6)) if rng.random() < 0.5 else random_tree(rng.randint(1, 6), rng))
        return random_presentation(rng, depth - 1)

    prefix = tuple(entry() for _ in range(rng.randint(0, 2)))
    cycle = tuple(entry() for _ in range(rng.randint(1, 3)))
    return Spine(mode, Periodic(prefix, cycle), random_lengths(rng))


def random_denseable(rng: random.Random):
    """A periodic spine whose prefix attachments all recur further out, with gaps."""
    mode = rng.choice([ATTACH, GLUE])

    def cycle_entry():
        r = rng.random()
        if r < 0.6:
            return Fin(random_tree(rng.randint(2, 6), rng))
        if r < 0.8:
            return SOrd(Ordinal.of(rng.randint(1, 2)))
        return make_comb(rng.randint(2, 4), rng.random() < 0.5)

    cycle = [cycle_entry() for _ in range(rng.randint(1, 3))]

    def prefix_entry():
        if rng.random() < 0.3:
            return None
        e = rng.choice(cycle)
        if isinstance(e, Fin) and rng.random() < 0.5:
            return Fin(drop_leaf(e.tree, rng))
        return e

    prefix = [prefix_entry() for _ in range(rng.randint(0, 3))]
    for _ in range(rng.randint(0, 2)):
        cycle.insert(rng.randint(0, len(cycle)), None)
    return Spine(mode, Periodic(tuple(prefix), tuple(cycle)), random_lengths(rng))


def random_order1(rng: random.Random, depth: int = 2):
    """A finite core with a few rays, drawn from a small pool so that equal forms recur."""
    roll = rng.random()
    if depth == 0 or roll < 0.25:
        return Fin(random_tree(rng.randint(1, 3), rng))
    if roll < 0.35:
        return SOrd(Ordinal.of(1))
    mode = rng.choice([ATTACH, GLUE])

    def entry():
        return None if rng.random() < 0.35 else random_order1(rng, depth - 1)

    prefix = tuple(entry() for _ in range(rng.randint(0, 2)))
    lengths = PeriodicNat(tuple(rng.randint(1, 2) for _ in range(len(prefix))), (rng.randint(1, 3),))
    return Spine(mode, Periodic(prefix, (None,)), lengths)


def random_ordinal(rng: random.Random) -> Ordinal:
    terms = []
    exp = rng.randint(0, 3)
    while exp >= 0 and (not terms or rng.random() < 0.6):
        terms.append((exp, rng.randint(1, 3)))
        exp -= rng.randint(1, 2)
    return Ordinal(tuple(terms))


def random_expr(rng: random.Random, depth: int = 3):
    roll = rng.random()
    if depth == 0 or roll < 0.25:
        return FinE(random_tree(rng.randint(1, 6), rng))
    if roll < 0.35:
        return SOrdE(random_ordinal(rng))
    if roll < 0.45:
        hairy = rng.random() < 0.5
        n = "w" if rng.random() < 0.2 else rng.randint(1 if hairy else 2, 9)
        return CombE(hairy, n)
    if roll < 0.55:
        trees = lambda k: tuple(FinE(random_tree(rng.randint(1, 5), rng)) for _ in range(k))
        return SeqE(trees(rng.randint(0, 2)), trees(rng.randint(1, 3)))
    mode = rng.choice([ATTACH, GLUE])
    if roll < 0.6:
        terms = tuple(t for t in random_ordinal(rng).terms if t[0] > 0)
        return RampE(mode, Ordinal(terms or ((1, 2),)))
    if roll < 0.65:
        return VRampE(mode)

    def entry():
        if rng.random() < 0.2:
            return EmptyE()
        e = random_expr(rng, depth - 1)
        return e if not isinstance(e, SeqE) else FinE(VERTEX)

    spine = SpineE(
        mode,
        tuple(entry() for _ in range(rng.randint(0, 2))),
        tuple(entry() for _ in range(rng.randint(1, 3))),
    )
    if roll < 0.85:
        return spine
    if rng.random() < 0.5:
        return SfE(spine, PPowE(rng.choice(primes(6))))
    ints = lambda k: tuple(rng.randint(1, 9) for _ in range(k))
    return SfE(spine, NatSeqE(ints(rng.randint(0, 2)), ints(rng.randint(1, 3))))


def add_whitespace(text: str, rng: random.Random) -> str:
    out = []
    for ch in text:
        if ch in "()[]:;,+*^" and rng.random() < 0.3:
            out.append(rng.choice([" ", "\n", "  ", "\t"]))
        out.append(ch)
    return "".join(out)


def strip_ws(text: str) -> str:
    return "".join(text.split())


# -- the criteria ---------------------------------------------------------------------


def check_01() -> Check:
    ts = trees_upto(7)
    bad = sum(rooted_minor(a, b) != brute_force_minor(a, b, bound=7) for a in ts for b in ts)
    return Check(1, "rooted_minor vs brute force, <= 7 nodes", bad == 0, f"{len(ts) ** 2} pairs, {bad} disagreements")


def check_02() -> Check:
    ts = trees_upto(8)
    bad = sum(topo_equiv(a, b) != is_isomorphic(a, b) for a in ts for b in ts)
    return Check(2, "equivalence = isomorphism, <= 8 nodes", bad == 0, f"{len(ts)} trees, {bad} disagreements")


def check_03() -> Check:
    expected = [1, 1, 2, 4, 9, 20, 48, 115, 286]
    oracle = rooted_tree_counts(9)
    got = [len(enumerate_rooted_trees(n)) for n in range(1, 10)]
    ok = got == oracle == expected
    return Check(3, "enumeration counts n = 1..9", ok, f"enumerated {got}, oracle {oracle}")


def check_04() -> Check:
    rng = random.Random(4)
    bad = 0
    trues = 0
    for _ in range(500):
        f, g = random_epseq(rng), random_epseq(rng)
        fast = leq_star_result(f, g).holds
        trues += fast
        bad += fast != bounded_leq_star(f, g, rooted_minor)
    return Check(4, "leq_star vs bounded matching oracle", bad == 0, f"500 pairs ({trues} true), {bad} disagreements")


def greedy_span(g: EPSeq, n: int) -> int:
    """Spine nodes of ``T_g`` that hold the first ``n`` greedy matches.

    Each greedy step lands within ``len(g.cycle)`` places of the previous
    one once past the prefix.
    """
    return len(g.prefix) + n * (len(g.cycle) + 1)


def _truncations_embed(f: EPSeq, g: EPSeq) -> bool:
    return all(
        rooted_minor(t_f_truncate(f, n), t_f_truncate(g, greedy_span(g, n)))
        for n in range(1, 6)
    )


def _certificate_holds(f: EPSeq, g: EPSeq, failure: dict) -> bool:
    if failure["kind"] == "cycle":
        x = f.cycle[failure["f_phase"]]
        return not any(rooted_minor(x, y) for y in g.cycle)
    return not bounded_leq_star(f, g, rooted_minor)


def check_05() -> Check:
    rng = random.Random(5)
    pos, neg = [], []
    while len(pos) < 200 or len(neg) < 50:
        f = random_epseq(rng, 4)
        g = random_epseq(rng, 5)
        res = leq_star_result(f, g)
        if res.holds and len(pos) < 200:
            pos.append((f, g))
        elif not res.holds and len(neg) < 50:
            neg.append((f, g, res.failure))
    bad_pos = sum(not _truncations_embed(f, g) for f, g in pos)
    bad_neg = sum(not _certificate_holds(f, g, fail) for f, g, fail in neg)
    kinds = sorted({fail["kind"] for _, _, fail in neg})
    ok = bad_pos == 0 and bad_neg == 0
    return Check(5, "caterpillar truncations and failure certificates", ok,
                 f"{bad_pos}/200 embedding failures, {bad_neg}/50 certificate failures (kinds {kinds})")


S_INDICES = ["1", "2", "3", "w", "w+1", "w*2", "w^2", "w^2+w+1"]


def check_06() -> Check:
    alphas = [parse_ordinal(x) for x in S_INDICES]
    bad_order = [str(a) for a in alphas if order(build_s(a)) != a]
    bad_pairs = [
        (str(a), str(b))
        for a in alphas
        for b in alphas
        if (spined_minor(SOrd(a), SOrd(b)) is Verdict.TRUE) != (compare(a, b) <= 0)
    ]
    ok = not bad_order and not bad_pairs
    return Check(6, "S hierarchy order and embeddings", ok, f"order mismatches {bad_order}, pair mismatches {bad_pairs}")


def check_07() -> Check:
    bad = []
    depths = {}
    binaries = [complete_binary(d) for d in range(13)]
    for text in ["1", "2", "3", "w"]:
        alpha = parse_ordinal(text)
        for k in range(1, 5):
            t = truncate(build_s(alpha), k, k)
            d = next((d for d in range(13) if rooted_minor(t, binaries[d])), None)
            if d is None:
                bad.append((text, k))
            depths[(text, k)] = d
    worst = max(d for d in depths.values() if d is not None)
    return Check(7, "S truncations inside complete binary trees", not bad, f"failures {bad}, deepest needed {worst}")


def check_08() -> Check:
    bad = []
    for n in range(2, 7):
        for m in range(2, 7):
            for hairy in (True, False):
                v = spined_minor(make_comb(n, hairy), make_comb(m, hairy))
                if n <= m and v is not Verdict.TRUE:
                    bad.append((n, m, hairy, str(v)))
                if n > m and v is Verdict.TRUE:
                    bad.append((n, m, hairy, str(v)))
        for hairy in (True, False):
            if spined_minor(make_comb(n, hairy), make_comb("w", hairy)) is not Verdict.TRUE:
                bad.append((n, "w", hairy))
    return Check(8, "comb lattice", not bad, f"violations {bad}")


def _o(t) -> Ordinal:
    return ZERO if t is None else order(t)


def check_09() -> Check:
    rng = random.Random(9)
    bad = 0
    present = 0
    for _ in range(100):
        t = random_presentation(rng)
        stars = {a: t_star(t, a) for a in [3, 4, 5, 6, "w"]}
        present += stars[3] is not None
        for n in range(4, 7):
            bad += compare(_o(stars[n]), _o(stars[n - 1])) > 0
        for n in range(3, 7):
            bad += compare(_o(stars["w"]), _o(stars[n])) > 0
    return Check(9, "T* monotonicity", bad == 0, f"100 presentations ({present} with T*_3), {bad} violations")


def check_10() -> Check:
    start = time.perf_counter()
    base = Spine(ATTACH, Periodic((Fin(path(2)),), (SOrd(Ordinal.of(1)), Fin(path(3)))))
    fam = family_generate(base, 20)
    bad = 0
    pairs = 0
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            pairs += 1
            a, b = fam[i], fam[j]
            both = spined_minor(a, b) is Verdict.TRUE and spined_minor(b, a) is Verdict.TRUE
            v, cert = presentation_iso(a, b)
            ok = both and v is IsoVerdict.NONISO and verify_iso_certificate(a, b, cert)
            bad += not ok
    secs = time.perf_counter() - start
    ok = len(fam) == 20 and pairs == 190 and bad == 0 and secs < 60
    return Check(10, "subdivision family of size 20", ok, f"{pairs} pairs, {bad} failures, {secs:.1f}s")


def check_11() -> Check:
    rng = random.Random(11)
    bad = 0
    rules = set()
    from .spined import spined_minor_result

    for _ in range(100):
        t = random_denseable(rng)
        c = collapse_presentation(t)
        r1, r2 = spined_minor_result(t, c), spined_minor_result(c, t)
        rules |= {r1.rule, r2.rule}
        bad += not (r1.verdict is Verdict.TRUE and r2.verdict is Verdict.TRUE)
    return Check(11, "collapse equivalence", bad == 0, f"100 presentations, {bad} failures, rules {sorted(rules)}")


def check_12() -> Check:
    rng = random.Random(12)
    items = [random_order1(rng) for _ in range(100)]
    forms = [order1_canonical(t) for t in items]
    bad = 0
    equal_pairs = 0
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            same = forms[i] == forms[j]
            equal_pairs += same
            equiv = (
                spined_minor(items[i], items[j]) is Verdict.TRUE
                and spined_minor(items[j], items[i]) is Verdict.TRUE
            )
            bad += same != equiv
    return Check(12, "order-1 canonical form", bad == 0,
                 f"100 presentations, {len(set(forms))} forms, {equal_pairs} equal pairs, {bad} disagreements")


def check_13() -> Check:
    ts = trees_upto(6)
    bad = sum(not reroot_invariance_check(t, ts) for t in ts)
    return Check(13, "re-rooting invariance, <= 6 nodes", bad == 0, f"{len(ts)} trees, {bad} failures")


def check_14() -> Check:
    rng = random.Random(14)
    bad = 0
    for _ in range(1000):
        e = random_expr(rng)
        text = print_expr(e)
        noisy = add_whitespace(text, rng)
        back = parse(noisy)
        if back != e or strip_ws(print_expr(back)) != strip_ws(noisy):
            bad += 1
    dot_bad = 0
    for _ in range(20):
        t = random_tree(rng.randint(1, 12), rng)
        first = emit_dot(t)
        if any(emit_dot(t) != first for _ in range(3)):
            dot_bad += 1
    ok = bad == 0 and dot_bad == 0
    return Check(14, "parser round trip and DOT determinism", ok, f"{bad}/1000 round-trip failures, {dot_bad}/20 DOT mismatches")


CHECKS = [check_01, check_02, check_03, check_04, check_05, check_06, check_07,
          check_08, check_09, check_10, check_11, check_12, check_13, check_14]


def run_all(only=None) -> list[Check]:
    out = []
    for fn in CHECKS:
        number = int(fn.__name__.split("_")[1])
        if only and number not in only:
            continue
        out.append(fn())
    return out
