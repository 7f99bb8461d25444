import random

import pytest
from hypothesis import given, settings, strategies as st

from topominor.acceptance import add_whitespace, random_expr, random_presentation, strip_ws
from topominor.dsl import (
    CombE,
    FinE,
    RampE,
    SOrdE,
    SfE,
    evaluate,
    parse,
    parse_value,
    print_expr,
    to_expr,
    to_text_value,
)
from topominor.errors import ParseError
from topominor.finite_tree import VERTEX, star
from topominor.natseq import PeriodicNat, PrimePowers
from topominor.ordinal import Ordinal
from topominor.seq_order import EPSeq
from topominor.spined import ATTACH, GLUE, Fin, Periodic, SOrd, Spine, VRamp

seeds = st.integers(0, 2**32 - 1)


def test_parse_examples():
    assert parse("(()())") == FinE(star(2))
    assert parse_value("(()())") == Fin(star(2))
    e = parse("S(w*2+1)")
    assert isinstance(e, SOrdE) and e.alpha.terms == ((1, 2), (0, 1))
    assert parse_value("hairycomb(3)") == Spine(ATTACH, Periodic((), (Fin(star(3)),)))
    assert parse("comb(w)") == CombE(False, "w")


def test_sequences_and_spines():
    assert parse_value("seq(prefix: [()]; cycle: [(()), ()])") == EPSeq((VERTEX,), (star(1), VERTEX))
    v = parse_value("spine[glue](prefix: [(())]; cycle: [empty, S(2)])")
    assert v == Spine(GLUE, Periodic((Fin(star(1)),), (None, SOrd(Ordinal.of(2)))))
    assert parse_value("spine[attach](vramp)") == Spine(ATTACH, VRamp())
    assert isinstance(parse("spine[glue](ramp: w^2)"), RampE)


def test_sf():
    v = parse_value("sf(S(w), ppow(5))")
    assert v.edge_lengths == PrimePowers(5)
    v = parse_value("sf(hairycomb(2), natseq(prefix: [3]; cycle: [1, 2]))")
    assert v.edge_lengths == PeriodicNat((3,), (1, 2))


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("(()", 1, 4),
        ("S(w*)", 1, 5),
        ("spine[attach](prefix: []; cycle: [()]\n  x", 2, 3),
        ("(()) ()", 1, 6),
        ("S(w) $", 1, 6),
    ],
)
def test_syntax_errors_located(text, line, col):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, col)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("spine[attach](ramp: w+1)", "w+1"),
        ("sf(S(w), ppow(4))", "4"),
        ("spine[attach](prefix: []; cycle: [])", "[]"),
        ("sf((), ppow(2))", "()"),
        ("sf(S(w), natseq(prefix: []; cycle: [0]))", "0"),
        ("comb(1)", "1"),
    ],
)
def test_semantic_errors_carry_span(text, fragment):
    with pytest.raises(ParseError) as info:
        parse(text)
    lo, hi = info.value.span
    assert fragment in text[lo:hi]


@settings(max_examples=300)
@given(seeds)
def test_round_trip(seed):
    rng = random.Random(seed)
    e = random_expr(rng)
    text = print_expr(e)
    assert parse(text) == e
    messy = add_whitespace(text, rng)
    assert parse(messy) == e
    assert strip_ws(print_expr(parse(messy))) == strip_ws(messy)


@settings(max_examples=200)
@given(seeds)
def test_value_round_trip(seed):
    v = random_presentation(random.Random(seed), 2)
    assert parse_value(to_text_value(v)) == v


def test_to_expr_sf():
    v = parse_value("sf(S(w), ppow(3))")
    e = to_expr(v)
    assert isinstance(e, SfE)
    assert evaluate(e) == v


def test_sf_of_finite_ordinal_rejected():
    with pytest.raises(ParseError):
        parse("sf(S(0), ppow(2))")
