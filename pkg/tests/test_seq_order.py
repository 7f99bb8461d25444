import random

import pytest
from hypothesis import given, settings, strategies as st

from topominor.acceptance import greedy_span, random_epseq
from topominor.embed import rooted_minor
from topominor.errors import ArgumentError
from topominor.finite_tree import VERTEX, path, star
from topominor.oracles import bounded_leq_star
from topominor.seq_order import (
    EPSeq,
    equiv_star,
    leq_star,
    leq_star_result,
    normalize,
    t_f_truncate,
    unrolling_bound,
)

seeds = st.integers(0, 2**32 - 1)


def test_examples():
    ones = EPSeq.constant(star(1))
    twos = EPSeq.constant(star(2))
    assert leq_star(ones, twos)
    assert not leq_star(twos, ones)
    # one big entry up front cannot be matched by a constant small tail
    f = EPSeq((star(3),), (VERTEX,))
    assert not leq_star(f, twos)
    assert leq_star(f, EPSeq((), (star(3), VERTEX)))


def test_failure_kinds():
    res = leq_star_result(EPSeq.constant(star(2)), EPSeq.constant(star(1)))
    assert res.failure == {"kind": "cycle", "f_phase": 0}
    res = leq_star_result(EPSeq((star(3), star(3)), (VERTEX,)), EPSeq((star(3),), (VERTEX,)))
    assert res.failure["kind"] == "prefix"


def test_cycle_required():
    with pytest.raises(ArgumentError):
        EPSeq((VERTEX,), ())


@settings(max_examples=300)
@given(seeds)
def test_agrees_with_window_oracle(seed):
    rng = random.Random(seed)
    f, g = random_epseq(rng), random_epseq(rng)
    assert leq_star(f, g) == bounded_leq_star(f, g, rooted_minor)


@settings(max_examples=100)
@given(seeds)
def test_transitive(seed):
    rng = random.Random(seed)
    f, g, h = (random_epseq(rng, 4) for _ in range(3))
    if leq_star(f, g) and leq_star(g, h):
        assert leq_star(f, h)


@settings(max_examples=200)
@given(seeds)
def test_normalize_is_equivalent(seed):
    f = random_epseq(random.Random(seed))
    n = normalize(f)
    assert equiv_star(f, n)
    assert normalize(n) == n


def test_normalize_keeps_needed_prefix():
    # dropping the first prefix entry would leave the second no room in front
    f = EPSeq((star(1), star(3)), (star(2),))
    n = normalize(f)
    assert equiv_star(f, n)
    assert n.prefix == (star(1), star(3))


@settings(max_examples=100)
@given(seeds)
def test_truncations_follow_the_order(seed):
    rng = random.Random(seed)
    f, g = random_epseq(rng, 4), random_epseq(rng, 5)
    if leq_star(f, g):
        for n in range(1, 5):
            assert rooted_minor(t_f_truncate(f, n), t_f_truncate(g, greedy_span(g, n)))


def test_truncate_shape():
    t = t_f_truncate(EPSeq.constant(VERTEX), 3)
    assert t.size == 6
    assert t_f_truncate(EPSeq.constant(path(2)), 1).size == 3
    with pytest.raises(ArgumentError):
        t_f_truncate(EPSeq.constant(VERTEX), 0)


def test_unrolling_bound():
    f = EPSeq((VERTEX,), (VERTEX, VERTEX))
    g = EPSeq((), (VERTEX,))
    assert unrolling_bound(f, g) == 1 + 2 * 2
