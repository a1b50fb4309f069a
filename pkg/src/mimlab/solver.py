"""Exact induced matchings across cuts, mim-width, treewidth, and the
degeneracy-based lower bound.

The exact mim-width solver minimizes over all branch decompositions via a
dynamic program over vertex subsets: the best achievable width for a
subtree with leaf set S is

    f(S) = max(cutvalue(S), min over bipartitions S = T + (S-T) of
               max(f(T), f(S-T)))

which ranges over exactly the subtrees realizable by rooted binary trees,
so f(V) equals the minimum over all (2n-3)!! decompositions (the tests
cross-check this against explicit enumeration). Cut values are memoized by
vertex-set key and shared between the exact and heuristic solvers.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .decomp import BranchDecomposition, Cut, caterpillar_from_order, subtree_leaf_sets
from .errors import LimitExceeded
from .graph import Graph, degeneracy

DEFAULT_EXACT_LIMIT = 9
DEFAULT_TW_LIMIT = 16


@dataclass(frozen=True)
class InducedMatching:
    """A set of cut edges that is an induced matching of G[A, A-bar]."""

    a_side: frozenset
    edges: tuple


@dataclass(frozen=True)
class WidthReport:
    value: int
    mode: str  # "exact" or "upper"
    decomposition: BranchDecomposition
    critical_cut: Cut
    witness_matching: InducedMatching

    def to_json(self):
        return json.dumps(
            {
                "value": self.value,
                "mode": self.mode,
                "decomposition": (
                    self.decomposition.to_text() if self.decomposition else None
                ),
                "critical_cut_a_side": (
                    sorted(self.critical_cut.a_side) if self.critical_cut else None
                ),
                "matching_edges": (
                    [list(e) for e in self.witness_matching.edges]
                    if self.witness_matching
                    else None
                ),
            }
        )


@dataclass(frozen=True)
class TreewidthReport:
    value: int
    elimination_order: tuple


@dataclass(frozen=True)
class Eq1Bound:
    """Lower bound tw / (3 (d+1)) on mim-width, as an exact rational."""

    ratio: Fraction
    integer_bound: int
    treewidth: int
    degeneracy: int


def verify_induced_matching(g: Graph, matching: InducedMatching) -> bool:
    """Independent validity check: edges cross the cut, are pairwise
    vertex-disjoint, and no cut edge joins two distinct matching edges."""
    a = matching.a_side
    cut_set = {e for e in g.edges if (e[0] in a) != (e[1] in a)}
    seen = set()
    for e in matching.edges:
        u, v = min(e), max(e)
        if (u, v) not in cut_set:
            return False
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    for i, e in enumerate(matching.edges):
        for f in matching.edges[i + 1 :]:
            for p in e:
                for q in f:
                    if p != q and ((min(p, q), max(p, q)) in cut_set):
                        return False
    return True


class _CutSolver:
    """Per-graph memoized exact solver for cut mim-values (bitmask keyed)."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.edge_list = g.sorted_edges()
        self.memo = {}

    def cut_edges(self, mask):
        return [
            e
            for e in self.edge_list
            if ((mask >> e[0]) & 1) != ((mask >> e[1]) & 1)
        ]

    def value(self, mask):
        key = min(mask, self.full ^ mask)
        got = self.memo.get(key)
        if got is None:
            got = self._max_induced_matching(self.cut_edges(mask))[0]
            self.memo[key] = got
        return got

    def matching(self, mask) -> InducedMatching:
        ce = self.cut_edges(mask)
        _, chosen = self._max_induced_matching(ce)
        a = frozenset(v for v in range(self.n) if (mask >> v) & 1)
        return InducedMatching(a, tuple(ce[i] for i in chosen))

    def _max_induced_matching(self, ce):
        """Maximum induced matching among cut edges `ce`; exact via
        branch-and-bound maximum independent set on the conflict graph."""
        m = len(ce)
        if m == 0:
            return 0, ()
        cut_set = set(ce)
        conflict = [0] * m
        for i in range(m):
            ui, vi = ce[i]
            for j in range(i + 1, m):
                uj, vj = ce[j]
                if (
                    ui == uj
                    or ui == vj
                    or vi == uj
                    or vi == vj
                    or (min(ui, uj), max(ui, uj)) in cut_set
                    or (min(ui, vj), max(ui, vj)) in cut_set
                    or (min(vi, uj), max(vi, uj)) in cut_set
                    or (min(vi, vj), max(vi, vj)) in cut_set
                ):
                    conflict[i] |= 1 << j
                    conflict[j] |= 1 << i

        # Greedy initial solution: repeatedly take a min-conflict edge.
        cand = (1 << m) - 1
        greedy = []
        while cand:
            v = min(
                (i for i in range(m) if (cand >> i) & 1),
                key=lambda i: (conflict[i] & cand).bit_count(),
            )
            greedy.append(v)
            cand &= ~(conflict[v] | (1 << v))
        best_size = len(greedy)
        best_set = greedy

        def rec(cand, cur, cur_size):
            nonlocal best_size, best_set
            if cand == 0:
                if cur_size > best_size:
                    best_size = cur_size
                    best_set = list(cur)
                return
            if cur_size + cand.bit_count() <= best_size:
                return
            # Min-degree pivot: some optimal solution contains a member of
            # its closed conflict neighborhood, so branch only over those.
            pivot = min(
                (i for i in range(m) if (cand >> i) & 1),
                key=lambda i: (conflict[i] & cand).bit_count(),
            )
            branch = conflict[pivot] & cand
            options = [pivot] + [i for i in range(m) if (branch >> i) & 1]
            for u in options:
                cur.append(u)
                rec(cand & ~(conflict[u] | (1 << u)), cur, cur_size + 1)
                cur.pop()

        rec((1 << m) - 1, [], 0)
        return best_size, tuple(sorted(best_set))


def max_induced_matching_cut(g: Graph, a) -> InducedMatching:
    """Maximum induced matching of the bipartite cut graph G[A, A-bar]."""
    mask = 0
    for v in a:
        mask |= 1 << v
    return _CutSolver(g).matching(mask)


def _mask_to_set(mask, n):
    return frozenset(v for v in range(n) if (mask >> v) & 1)


def _critical(cs, decomposition):
    """Locate the cut of maximum mim-value in a decomposition; ties broken
    by the lexicographically smallest sorted a_side."""
    best = None
    for a in subtree_leaf_sets(decomposition):
        mask = 0
        for v in a:
            mask |= 1 << v
        val = cs.value(mask)
        key = (-val, tuple(sorted(a)))
        if best is None or key < best[0]:
            best = (key, mask)
    _, mask = best
    a = _mask_to_set(mask, cs.n)
    cut = Cut(a, tuple(cs.cut_edges(mask)))
    return cut, cs.matching(mask)


def mimw_exact(g: Graph, limit=DEFAULT_EXACT_LIMIT) -> WidthReport:
    """Exact mim-width with a witness decomposition and critical cut.

    Convention: graphs with n <= 1 have no branch decomposition and get
    width 0 with an empty witness.
    """
    n = g.n
    if n > limit:
        raise LimitExceeded(f"n={n} exceeds exact mim-width limit {limit}")
    if n <= 1:
        return WidthReport(0, "exact", None, None, None)
    cs = _CutSolver(g)
    full = cs.full
    f = {}
    choice = {}
    masks_by_pc = [[] for _ in range(n + 1)]
    for mask in range(1, full + 1):
        masks_by_pc[mask.bit_count()].append(mask)
    for s in masks_by_pc[1]:
        f[s] = cs.value(s)
    for pc in range(2, n + 1):
        for s in masks_by_pc[pc]:
            low = s & -s
            rest = s ^ low
            best = None
            best_t = None
            sub = rest
            while True:
                sub = (sub - 1) & rest
                t = low | sub
                inner = max(f[t], f[s ^ t])
                if best is None or inner < best:
                    best = inner
                    best_t = t
                if sub == 0:
                    break
            f[s] = max(cs.value(s), best)
            choice[s] = best_t

    def build(s):
        if s.bit_count() == 1:
            return s.bit_length() - 1
        t = choice[s]
        return (build(t), build(s ^ t))

    t = BranchDecomposition(build(full))
    value = f[full]
    if value == 0:
        cut = Cut(_mask_to_set(full, n), ())
        return WidthReport(0, "exact", t, cut, InducedMatching(cut.a_side, ()))
    cut, matching = _critical(cs, t)
    return WidthReport(value, "exact", t, cut, matching)


def _order_width(cs, order):
    n = cs.n
    worst = 0
    mask = 0
    for i, v in enumerate(order):
        worst = max(worst, cs.value(1 << v))
        mask |= 1 << v
        if i >= 1:
            worst = max(worst, cs.value(mask))
    return worst


def mimw_upper(
    g: Graph, restarts=8, local_search=True, seed=0, cut_solver=None
) -> WidthReport:
    """Heuristic upper bound: best caterpillar among the identity order and
    seeded random orders, then adjacent-transposition hill climbing."""
    n = g.n
    if n <= 1:
        return WidthReport(0, "upper", None, None, None)
    cs = cut_solver if cut_solver is not None else _CutSolver(g)
    rng = random.Random(seed)
    orders = [list(range(n))]
    for _ in range(restarts):
        orders.append(rng.sample(range(n), n))
    best_order = min(orders, key=lambda o: _order_width(cs, o))
    best_w = _order_width(cs, best_order)
    if local_search:
        improved = True
        while improved and best_w > 0:
            improved = False
            for i in range(n - 1):
                cand = list(best_order)
                cand[i], cand[i + 1] = cand[i + 1], cand[i]
                w = _order_width(cs, cand)
                if w < best_w:
                    best_order, best_w = cand, w
                    improved = True
                    break
    t = caterpillar_from_order(best_order)
    if best_w == 0:
        cut = Cut(frozenset(range(n)), ())
        return WidthReport(0, "upper", t, cut, InducedMatching(cut.a_side, ()))
    cut, matching = _critical(cs, t)
    return WidthReport(best_w, "upper", t, cut, matching)


def treewidth_exact(g: Graph, limit=DEFAULT_TW_LIMIT) -> TreewidthReport:
    """Exact treewidth by dynamic programming over vertex subsets along
    elimination orders (Held-Karp-style recurrence), with a witness order."""
    n = g.n
    if n > limit:
        raise LimitExceeded(f"n={n} exceeds treewidth limit {limit}")
    if n == 0:
        return TreewidthReport(0, ())
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    def q(t_mask, v):
        # Number of vertices outside t_mask (and != v) reachable from v
        # through already-eliminated vertices.
        reach = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & t_mask & ~reach
            reach |= frontier
        out = 0
        r = reach
        while r:
            low = r & -r
            out |= adj[low.bit_length() - 1]
            r ^= low
        return (out & ~t_mask & ~(1 << v)).bit_count()

    full = (1 << n) - 1
    f = {0: 0}
    choice = {}
    masks_by_pc = [[] for _ in range(n + 1)]
    for mask in range(1, full + 1):
        masks_by_pc[mask.bit_count()].append(mask)
    for pc in range(1, n + 1):
        for s in masks_by_pc[pc]:
            best = None
            best_v = None
            rem = s
            while rem:
                low = rem & -rem
                v = low.bit_length() - 1
                rem ^= low
                t_mask = s ^ low
                val = max(f[t_mask], q(t_mask, v))
                if best is None or val < best:
                    best = val
                    best_v = v
            f[s] = best
            choice[s] = best_v
    order = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1 << v
    order.reverse()
    return TreewidthReport(f[full], tuple(order))


def mimw_lower_eq1(g: Graph, tw_limit=DEFAULT_TW_LIMIT) -> Eq1Bound:
    """Lower bound mimw(G) >= tw(G) / (3 (d+1)) for d-degenerate G."""
    tw = treewidth_exact(g, tw_limit).value
    d = degeneracy(g).d
    ratio = Fraction(tw, 3 * (d + 1))
    return Eq1Bound(ratio, math.ceil(ratio), tw, d)
