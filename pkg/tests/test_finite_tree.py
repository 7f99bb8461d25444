
import pytest
from hypothesis import given, settings, strategies as st

from topominor.errors import ArgumentError, ParseError, ResourceError
from topominor.finite_tree import (
    VERTEX,
    FiniteTree,
    all_rootings,
    canonical_code,
    collapse,
    complete_binary,
    enumerate_rooted_trees,
    from_parens,
    from_parents,
    is_isomorphic,
    path,
    preorder,
    reroot,
    star,
    subdivide,
    to_parens,
)
from topominor.oracles import backtrack_isomorphic, rooted_tree_counts

from conftest import trees


def test_parens_examples():
    assert from_parens("()") == VERTEX
    v2 = from_parens("(()())")
    assert v2.size == 3 and len(v2.children) == 2
    assert to_parens(star(2)) == "(()())"
    assert from_parens(" ( ( ) ) ") == path(2)


@pytest.mark.parametrize("text", ["", "(", "())", "(x)", "()()"])
def test_parens_errors(text):
    with pytest.raises(ParseError):
        from_parens(text)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        from_parens("(()\n)x")
    assert info.value.line == 2


def test_from_parents():
    assert from_parents([-1, 0, 0]) == star(2)
    assert from_parents([-1, 0, 1]) == path(3)
    for bad in ([-1, -1], [-1, 5], [1, 2, 1]):
        with pytest.raises(ArgumentError):
            from_parents(bad)


def test_constructors():
    assert path(1) == VERTEX
    assert path(4).height == 3
    assert star(3).size == 4
    assert complete_binary(3).size == 15
    assert complete_binary(0) == VERTEX


def test_equality_is_isomorphism():
    a = from_parens("((())())")
    b = from_parens("(()(()))")
    assert a == b and hash(a) == hash(b)
    assert canonical_code(a) == canonical_code(b)
    assert a != from_parens("((()()))")


@given(trees(8), trees(8))
def test_isomorphism_matches_backtracking(a, b):
    assert is_isomorphic(a, b) == backtrack_isomorphic(a, b)


@given(trees(10))
def test_parens_round_trip(t):
    assert from_parens(to_parens(t)) == t


@given(trees(10), st.randoms(use_true_random=False))
def test_code_ignores_child_order(t, r):
    def shuffled(node):
        kids = [shuffled(c) for c in node.children]
        r.shuffle(kids)
        return FiniteTree(tuple(kids))

    assert canonical_code(shuffled(t)) == canonical_code(t)


def test_enumeration_counts_match_oracle():
    assert rooted_tree_counts(10) == [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]
    for n in range(1, 9):
        ts = enumerate_rooted_trees(n)
        assert len(ts) == rooted_tree_counts(n)[-1]
        assert len({canonical_code(t) for t in ts}) == len(ts)
        assert all(t.size == n for t in ts)


def test_enumeration_bound():
    with pytest.raises(ResourceError):
        enumerate_rooted_trees(6, bound=5)


def test_subdivide():
    t = subdivide(star(2), {1: 3})
    assert t.size == 5
    assert t == from_parens("(((()))())")
    assert subdivide(star(2), {}) == star(2)
    with pytest.raises(ArgumentError):
        subdivide(star(2), {5: 2})
    with pytest.raises(ArgumentError):
        subdivide(star(2), {1: 0})


def test_collapse_keeps_root():
    assert collapse(path(5)) == path(2)
    assert collapse(from_parens("(((()())))")) == from_parens("((()()))")
    assert collapse(star(3)) == star(3)


@given(trees(8))
def test_collapse_idempotent_and_undone_by_subdivision(t):
    c = collapse(t)
    assert collapse(c) == c
    nodes, _ = preorder(t)
    assert collapse(subdivide(t, {i: 2 for i in range(1, t.size)})) == c


def test_reroot_and_rootings():
    p = path(3)
    assert reroot(p, 1) == star(2)
    assert len(all_rootings(p)) == 3
    assert len(set(all_rootings(p))) == 2
    assert len(set(all_rootings(star(3)))) == 2
    with pytest.raises(ArgumentError):
        reroot(p, 7)


@settings(max_examples=50)
@given(trees(7))
def test_rootings_share_size(t):
    for r in all_rootings(t):
        assert r.size == t.size
