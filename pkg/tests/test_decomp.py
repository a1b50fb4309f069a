import pytest

from mimlab.decomp import (
    BranchDecomposition,
    caterpillar_from_order,
    cuts,
    enumerate_decompositions,
    subtree_leaf_sets,
    validate,
)
from mimlab.errors import (
    GraphFormatError,
    LabelMismatch,
    LimitExceeded,
    NotAPermutation,
    NotBinary,
)
from mimlab.graph import Graph, complete, path


def test_validate_ok():
    t = caterpillar_from_order(range(4))
    assert validate(t, path(4)) is None


def test_validate_label_mismatch():
    t = caterpillar_from_order(range(4))
    with pytest.raises(LabelMismatch):
        validate(t, path(5))


def test_validate_not_binary():
    t = BranchDecomposition((0, 1, 2))
    with pytest.raises(NotBinary):
        validate(t, path(3))


def test_cuts_p3_caterpillar():
    g = path(3)
    t = caterpillar_from_order([0, 1, 2])
    a_sides = {c.a_side for c in cuts(t, g)}
    assert a_sides == {
        frozenset({0}),
        frozenset({1}),
        frozenset({2}),
        frozenset({0, 1}),
        frozenset({0, 1, 2}),
    }


def test_cuts_n2():
    g = Graph(2, [(0, 1)])
    t = BranchDecomposition((0, 1))
    assert {c.a_side for c in cuts(t, g)} == {
        frozenset({0}),
        frozenset({1}),
        frozenset({0, 1}),
    }


def test_root_cut_is_trivial():
    g = path(4)
    t = caterpillar_from_order(range(4))
    root_cut = cuts(t, g)[-1]
    assert root_cut.a_side == frozenset(range(4))
    assert root_cut.cut_edges == ()


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_cut_count_is_2n_minus_1(n):
    g = Graph(n)
    t = caterpillar_from_order(range(n))
    assert len(cuts(t, g)) == 2 * n - 1


def test_parent_a_side_is_union_of_children():
    t = BranchDecomposition(((0, 1), (2, (3, 4))))
    sets = subtree_leaf_sets(t)
    assert sets[-1] == frozenset(range(5))
    # postorder: children appear before their parent and union up
    assert frozenset({3, 4}) in sets and frozenset({2, 3, 4}) in sets


def test_caterpillar_p4_cut_edges():
    g = path(4)
    t = caterpillar_from_order(range(4))
    for c in cuts(t, g):
        if c.a_side not in ({frozenset(range(4))},) and len(c.a_side) < 4:
            assert len(c.cut_edges) <= 2


def test_caterpillar_rejects_non_permutation():
    with pytest.raises(NotAPermutation):
        caterpillar_from_order([0, 1, 1])
    with pytest.raises(NotAPermutation):
        caterpillar_from_order([1])


@pytest.mark.parametrize("n,count", [(2, 1), (3, 3), (4, 15), (5, 105), (6, 945)])
def test_enumeration_counts(n, count):
    ts = list(enumerate_decompositions(n))
    assert len(ts) == count
    # pairwise distinct after canonicalization
    assert len({t.to_text() for t in ts}) == count


def test_enumeration_limit():
    with pytest.raises(LimitExceeded):
        next(enumerate_decompositions(10))
    # but an explicit limit override works
    assert sum(1 for _ in enumerate_decompositions(4, limit=10)) == 15


def test_enumerated_trees_are_valid():
    g = complete(5)
    for t in enumerate_decompositions(5):
        validate(t, g)


class TestSerialization:
    def test_canonical_child_order(self):
        a = BranchDecomposition(((2, 3), (0, 1)))
        b = BranchDecomposition(((1, 0), (3, 2)))
        assert a == b
        assert a.to_text() == "((0 1) (2 3))"

    def test_roundtrip(self):
        for t in enumerate_decompositions(5):
            assert BranchDecomposition.from_text(t.to_text()) == t

    @pytest.mark.parametrize("text", ["((0 1)", "0 1)", "((0 x) 2)", "(0 1) 2"])
    def test_rejects_malformed(self, text):
        with pytest.raises(GraphFormatError):
            BranchDecomposition.from_text(text)
