import random

import pytest
from hypothesis import given, settings, strategies as st

from topominor.acceptance import random_epseq, random_presentation
from topominor.embed import rooted_minor
from topominor.errors import ArgumentError, ResourceError, UnsupportedError
from topominor.finite_tree import VERTEX, FiniteTree, path, star
from topominor.natseq import PeriodicNat, PrimePowers
from topominor.ordinal import OMEGA, ONE, ZERO, Ordinal, parse_ordinal
from topominor.seq_order import leq_star
from topominor.spined import (
    ATTACH,
    GLUE,
    Fin,
    OrdinalRamp,
    Periodic,
    SOrd,
    Spine,
    Verdict,
    VRamp,
    build_s,
    classify,
    make_comb,
    max_children,
    maximal_rays,
    order,
    ray,
    sord_index,
    spined_equiv,
    spined_minor,
    spined_minor_result,
    t_star,
    truncate,
)

seeds = st.integers(0, 2**32 - 1)
TWO = Ordinal.of(2)


def caterpillar(f):
    return Spine(ATTACH, Periodic(tuple(map(Fin, f.prefix)), tuple(map(Fin, f.cycle))))


def test_build_s_shapes():
    assert build_s(ZERO) == Fin(VERTEX)
    assert build_s(ONE) == ray()
    assert build_s(TWO) == Spine(ATTACH, Periodic((), (SOrd(ONE),)))
    assert build_s(OMEGA).gen == OrdinalRamp(OMEGA)


@pytest.mark.parametrize("text", ["1", "2", "3", "w", "w+1", "w*2", "w^2", "w^2+w+1"])
def test_order_of_s(text):
    a = parse_ordinal(text)
    assert order(build_s(a)) == a
    assert order(SOrd(a)) == a


def test_order_examples():
    assert order(Fin(star(3))) == ZERO
    assert order(Spine(ATTACH, Periodic((), (Fin(star(2)),)))) == ONE
    for n in range(2, 7):
        for hairy in (True, False):
            assert order(make_comb(n, hairy)) == ONE
    assert order(make_comb("w", True)) == ONE
    # a prefix attachment of high order counts, but only once
    t = Spine(ATTACH, Periodic((SOrd(TWO),), (None,)))
    assert order(t) == TWO


@settings(max_examples=100)
@given(seeds)
def test_order_ignores_mode_and_lengths(seed):
    rng = random.Random(seed)
    t = random_presentation(rng)
    if not isinstance(t, Spine):
        return
    for mode in (ATTACH, GLUE):
        for lengths in (PeriodicNat((), (1,)), PeriodicNat((2,), (3, 1)), PrimePowers(5)):
            assert order(Spine(mode, t.gen, lengths)) == order(t)


def test_maximal_rays():
    assert [r.path for r in maximal_rays(build_s(TWO))] == [()]
    assert maximal_rays(Fin(star(2))) == []
    two_rays = Spine(ATTACH, Periodic((), (SOrd(ONE), SOrd(ONE))))
    assert len(maximal_rays(two_rays)) == 1 and order(two_rays) == TWO
    forked = Spine(ATTACH, Periodic((SOrd(ONE),), (None,)))
    assert [str(r) for r in maximal_rays(forked)] == ["spine", "prefix[0]/spine"]


def test_classify():
    assert classify(build_s(Ordinal.of(3))) == (Ordinal.of(3), 1)
    assert classify(make_comb(2, False)) == (ONE, 1)
    assert classify(Spine(ATTACH, Periodic((SOrd(ONE),), (None,))))[1] == 2
    with pytest.raises(ArgumentError):
        classify(Fin(star(2)))


def test_make_comb():
    assert make_comb(2, False) == Spine(GLUE, Periodic((), (Fin(star(1)),)))
    assert make_comb(3, True).gen.cycle == (Fin(star(3)),)
    assert make_comb("w", False).gen == VRamp()
    for bad in [(0, True), (1, False), ("x", True)]:
        with pytest.raises(ArgumentError):
            make_comb(*bad)


def test_glued_vertex_is_empty():
    t = Spine(GLUE, Periodic((), (Fin(VERTEX),)))
    assert t == ray()


def test_truncate_examples():
    assert truncate(build_s(ONE), 4, 1) == path(4)
    assert truncate(build_s(ONE), 5, 3) == path(5)
    assert truncate(build_s(TWO), 2, 2).size == 6
    # with no depth left the attached rays shrink to single vertices
    assert truncate(build_s(TWO), 3, 1) == FiniteTree((VERTEX, FiniteTree((VERTEX, FiniteTree((VERTEX,))))))
    comb = truncate(make_comb(3, False), 2, 2)
    assert comb == FiniteTree((VERTEX, VERTEX, FiniteTree((VERTEX, VERTEX))))
    doubled = Spine(ATTACH, Periodic(), PeriodicNat((), (2,)))
    assert truncate(doubled, 4, 1) == path(7)
    with pytest.raises(ResourceError):
        truncate(build_s(OMEGA), 12, 12, cap=500)
    with pytest.raises(ArgumentError):
        truncate(build_s(ONE), 0, 1)


@settings(max_examples=60)
@given(seeds, st.integers(1, 3), st.integers(1, 3))
def test_truncate_monotone(seed, k, d):
    t = random_presentation(random.Random(seed))
    small = truncate(t, k, d)
    assert rooted_minor(small, truncate(t, k + 1, d), strict=True)
    assert rooted_minor(small, truncate(t, k, d + 1), strict=True)


def test_s_hierarchy_minor():
    assert spined_minor(build_s(TWO), build_s(OMEGA)) is Verdict.TRUE
    assert spined_minor(build_s(OMEGA), build_s(TWO)) is Verdict.FALSE
    assert sord_index(Spine(ATTACH, Periodic((SOrd(ONE),), (SOrd(TWO),)))) == Ordinal.of(3)
    assert sord_index(make_comb(2, True)) is None


@settings(max_examples=200)
@given(seeds)
def test_caterpillars_follow_leq_star(seed):
    rng = random.Random(seed)
    f, g = random_epseq(rng), random_epseq(rng)
    expected = Verdict.TRUE if leq_star(f, g) else Verdict.FALSE
    assert spined_minor(caterpillar(f), caterpillar(g)) is expected


def test_combs():
    for n in range(2, 7):
        for m in range(2, 7):
            for hairy in (True, False):
                v = spined_minor(make_comb(n, hairy), make_comb(m, hairy))
                assert (v is Verdict.TRUE) == (n <= m)
        for hairy in (True, False):
            assert spined_minor(make_comb(n, hairy), make_comb("w", hairy)) is Verdict.TRUE
            assert spined_minor(make_comb("w", hairy), make_comb(n, hairy)) is Verdict.FALSE
    # a glued star needs a branch point on the spine; hairs cannot supply it
    assert spined_minor(make_comb(3, False), make_comb(6, True)) is Verdict.FALSE
    assert spined_minor(make_comb(3, True), make_comb(6, False)) is Verdict.FALSE


def test_finite_into_infinite():
    assert spined_minor(Fin(star(2)), build_s(TWO)) is Verdict.TRUE
    res = spined_minor_result(Fin(star(3)), build_s(OMEGA))
    assert res.verdict is Verdict.FALSE and res.rule == "degree"
    assert spined_minor(build_s(ONE), Fin(path(9))) is Verdict.FALSE
    assert spined_minor(Fin(star(5)), make_comb(6, False)) is Verdict.TRUE
    assert spined_minor(Fin(star(6)), make_comb(6, False)) is Verdict.TRUE
    res = spined_minor_result(Fin(star(7)), make_comb(6, False))
    assert res.verdict is Verdict.FALSE and res.rule == "degree"


def test_equiv():
    assert spined_equiv(SOrd(TWO), build_s(TWO)) is Verdict.TRUE
    assert spined_equiv(SOrd(TWO), SOrd(ONE)) is Verdict.FALSE


def _embeds_somewhere(x, b, ms):
    for m in ms:
        try:
            if rooted_minor(x, truncate(b, m, m)):
                return True
        except ResourceError:
            return None
    return False


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_verdicts_match_truncation_evidence(seed):
    rng = random.Random(seed)
    a, b = random_presentation(rng, 1), random_presentation(rng, 1)
    v = spined_minor(a, b)
    if v is Verdict.TRUE:
        # subdivided edges of a stretch the window b needs
        for k in (1, 2, 3):
            assert _embeds_somewhere(truncate(a, k, k), b, range(1, 25)) is not False
    elif v is Verdict.FALSE:
        for k in range(1, 13):
            try:
                found = _embeds_somewhere(truncate(a, k, k), b, [12])
            except ResourceError:
                return
            if found is not True:
                return
        pytest.fail("every truncation of a embeds")


def test_t_star_examples():
    assert t_star(make_comb(2, False), 3) == ray()
    assert t_star(build_s(ONE), 3) is None
    assert t_star(Fin(star(5)), 3) is None
    assert t_star(make_comb(4, True), 4) == ray()
    assert t_star(make_comb(3, True), 4) is None
    assert t_star(make_comb(3, True), "w") is None
    assert t_star(make_comb("w", True), "w") == ray()
    with pytest.raises(UnsupportedError):
        t_star(build_s(OMEGA), 3)
    with pytest.raises(ArgumentError):
        t_star(ray(), 2)


def test_t_star_nested():
    inner = make_comb(3, False)
    t = Spine(ATTACH, Periodic((inner,), (None,)))
    got = t_star(t, 4)
    assert got == Spine(ATTACH, Periodic((ray(),), (None,)))
    assert order(got) <= order(t)


def test_max_children():
    assert max_children(make_comb("w", True)) is None
    assert max_children(make_comb(4, False)) == 4
    assert max_children(build_s(OMEGA)) == 2
