"""Branch decompositions: rooted binary trees whose leaves are the vertices.

A tree node is either an int (leaf label) or a tuple of child nodes.
Decompositions are canonicalized on construction: at every internal node
the child with the smaller minimum leaf label comes first, so equality is
syntactic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    GraphFormatError,
    InvalidParameter,
    LabelMismatch,
    LimitExceeded,
    NotAPermutation,
    NotBinary,
)

DEFAULT_ENUM_LIMIT = 9


def _min_leaf(node):
    while isinstance(node, tuple):
        node = node[0]
    return node


def _canon(node):
    if not isinstance(node, tuple):
        return node
    children = tuple(sorted((_canon(c) for c in node), key=_min_leaf))
    return children


class BranchDecomposition:
    __slots__ = ("root",)

    def __init__(self, root):
        self.root = _canon(root)

    def leaves(self):
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, tuple):
                stack.extend(reversed(node))
            else:
                out.append(node)
        return out

    def to_text(self):
        def render(node):
            if isinstance(node, tuple):
                return "(" + " ".join(render(c) for c in node) + ")"
            return str(node)

        return render(self.root)

    @classmethod
    def from_text(cls, text):
        tokens = text.replace("(", " ( ").replace(")", " ) ").split()
        pos = 0

        def parse():
            nonlocal pos
            if pos >= len(tokens):
                raise GraphFormatError("unexpected end of decomposition text")
            tok = tokens[pos]
            pos += 1
            if tok == "(":
                children = []
                while pos < len(tokens) and tokens[pos] != ")":
                    children.append(parse())
                if pos >= len(tokens):
                    raise GraphFormatError("unbalanced parentheses")
                pos += 1
                return tuple(children)
            if tok == ")":
                raise GraphFormatError("unexpected ')'")
            try:
                return int(tok)
            except ValueError:
                raise GraphFormatError(f"bad leaf label {tok!r}") from None

        root = parse()
        if pos != len(tokens):
            raise GraphFormatError("trailing tokens in decomposition text")
        return cls(root)

    def __eq__(self, other):
        return isinstance(other, BranchDecomposition) and self.root == other.root

    def __hash__(self):
        return hash(self.root)

    def __repr__(self):
        return f"BranchDecomposition({self.to_text()})"


@dataclass(frozen=True)
class Cut:
    """Vertex set under one tree node plus the edges leaving it."""

    a_side: frozenset
    cut_edges: tuple


def validate(t: BranchDecomposition, g):
    """Check tree shape and leaf bijection; raise on the first violation."""
    labels = []

    def walk(node):
        if isinstance(node, tuple):
            if len(node) != 2:
                raise NotBinary(f"internal node with {len(node)} children")
            walk(node[0])
            walk(node[1])
        else:
            labels.append(node)

    walk(t.root)
    if sorted(labels) != list(range(g.n)):
        raise LabelMismatch(
            f"leaves {sorted(labels)} are not a bijection onto 0..{g.n - 1}"
        )


def subtree_leaf_sets(t: BranchDecomposition):
    """Leaf set of every node, in postorder (root last)."""
    out = []

    def walk(node):
        if isinstance(node, tuple):
            acc = frozenset()
            for c in node:
                acc |= walk(c)
        else:
            acc = frozenset((node,))
        out.append(acc)
        return acc

    walk(t.root)
    return out


def cuts(t: BranchDecomposition, g):
    """One Cut per tree node (postorder; the root's cut is (V, empty))."""
    validate(t, g)
    out = []
    for a in subtree_leaf_sets(t):
        ce = tuple(e for e in g.sorted_edges() if (e[0] in a) != (e[1] in a))
        out.append(Cut(a, ce))
    return out


def caterpillar_from_order(order) -> BranchDecomposition:
    """Left-deep decomposition whose spine leaf order equals `order`."""
    order = list(order)
    n = len(order)
    if n < 2 or sorted(order) != list(range(n)):
        raise NotAPermutation(f"{order} is not a permutation of 0..n-1 with n >= 2")
    node = (order[0], order[1])
    for v in order[2:]:
        node = (node, v)
    return BranchDecomposition(node)


def _insertions(node, leaf):
    # Attach `leaf` as sibling of every node (including the whole tree).
    yield (node, leaf)
    if isinstance(node, tuple):
        left, right = node
        for sub in _insertions(left, leaf):
            yield (sub, right)
        for sub in _insertions(right, leaf):
            yield (left, sub)


def enumerate_decompositions(n, limit=DEFAULT_ENUM_LIMIT):
    """Yield every rooted binary tree with leaves 0..n-1 exactly once.

    Generated by leaf insertion: leaf k can be attached at any of the
    2k-3 nodes of a tree on k-1 leaves, which realizes the (2n-3)!! count.
    """
    if n < 2:
        raise InvalidParameter("enumeration needs n >= 2")
    if n > limit:
        raise LimitExceeded(f"n={n} exceeds enumeration limit {limit}")

    def rec(k):
        if k == 2:
            yield (0, 1)
            return
        for t in rec(k - 1):
            yield from _insertions(t, k - 1)

    for root in rec(n):
        yield BranchDecomposition(root)
