import pytest
from hypothesis import given, settings

from topominor.embed import (
    brute_force_minor,
    check_witness,
    rooted_minor,
    rooted_minor_witness,
    topo_equiv,
    unrooted_minor,
)
from topominor.errors import ResourceError
from topominor.finite_tree import VERTEX, complete_binary, from_parens, path, star

from conftest import trees


def test_examples():
    assert rooted_minor(path(2), path(3))
    assert not rooted_minor(path(3), path(2))
    assert rooted_minor(star(2), from_parens("((())(()))"))
    assert not rooted_minor(star(3), complete_binary(4))
    assert rooted_minor(VERTEX, VERTEX)


def test_strict_pins_root():
    s = from_parens("((()()))")
    assert rooted_minor(star(2), s)
    # the root with one child can only reach the branch point via a subdivided edge
    assert not rooted_minor(star(2), s, strict=True)
    assert rooted_minor(path(2), s, strict=True)


def test_unrooted_ignores_roots():
    # V_2 rooted at a leaf is a path
    assert unrooted_minor(path(3), star(2))
    assert unrooted_minor(star(2), path(3))
    assert not unrooted_minor(star(3), path(10))


@settings(max_examples=300)
@given(trees(6), trees(7))
def test_agrees_with_brute_force(t, s):
    for strict in (False, True):
        assert rooted_minor(t, s, strict) == brute_force_minor(t, s, strict)


@settings(max_examples=200)
@given(trees(7), trees(9))
def test_witness_is_valid(t, s):
    for strict in (False, True):
        w = rooted_minor_witness(t, s, strict)
        assert (w is not None) == rooted_minor(t, s, strict)
        if w is not None:
            assert check_witness(t, s, w, strict)


@given(trees(6), trees(6), trees(6))
def test_transitive(a, b, c):
    if rooted_minor(a, b) and rooted_minor(b, c):
        assert rooted_minor(a, c)


@given(trees(8))
def test_reflexive(t):
    assert rooted_minor(t, t, strict=True)
    assert topo_equiv(t, t)


def test_witness_json():
    w = rooted_minor_witness(star(2), from_parens("((())())"), strict=True)
    data = w.to_json()
    assert set(data) == {"node_map", "paths"}


def test_brute_force_bound():
    with pytest.raises(ResourceError):
        brute_force_minor(VERTEX, path(20), bound=10)
