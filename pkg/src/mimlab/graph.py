"""Simple undirected graphs on vertices 0..n-1, generators, and file I/O.

All values are immutable after construction and generators are pure
functions of their arguments (including the seed), so everything here can
be shared freely across threads.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GraphFormatError, InvalidParameter, OddCycleFound


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise InvalidParameter(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph. Vertices are the dense range 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n, edges=()):
        if n < 0:
            raise InvalidParameter("vertex count must be non-negative")
        es = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u},{v}) outside [0,{n})")
            es.add(_norm_edge(u, v))
        self.n = n
        self.edges = frozenset(es)
        self._adj = None

    @property
    def m(self):
        return len(self.edges)

    @property
    def adj(self):
        """Tuple of neighbor frozensets, indexed by vertex."""
        if self._adj is None:
            nbrs = [set() for _ in range(self.n)]
            for u, v in self.edges:
                nbrs[u].add(v)
                nbrs[v].add(u)
            self._adj = tuple(frozenset(s) for s in nbrs)
        return self._adj

    def has_edge(self, u, v):
        if u == v:
            return False
        return ((u, v) if u < v else (v, u)) in self.edges

    def degree(self, v):
        return len(self.adj[v])

    def sorted_edges(self):
        return sorted(self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class BipartiteGraph:
    """A graph together with a certified two-coloring (classes X and Y)."""

    __slots__ = ("graph", "x_class", "y_class")

    def __init__(self, graph, x_class, y_class):
        x = frozenset(x_class)
        y = frozenset(y_class)
        if x & y:
            raise InvalidParameter("color classes overlap")
        if x | y != frozenset(range(graph.n)):
            raise InvalidParameter("color classes do not cover all vertices")
        for u, v in graph.edges:
            if (u in x) == (v in x):
                raise InvalidParameter(f"edge ({u},{v}) inside one color class")
        self.graph = graph
        self.x_class = x
        self.y_class = y

    @property
    def n(self):
        return self.graph.n

    def __eq__(self, other):
        return (
            isinstance(other, BipartiteGraph)
            and self.graph == other.graph
            and self.x_class == other.x_class
        )

    def __hash__(self):
        return hash((self.graph, self.x_class))

    def __repr__(self):
        return f"BipartiteGraph(n={self.n}, |X|={len(self.x_class)}, |Y|={len(self.y_class)})"


@dataclass(frozen=True)
class DegeneracyResult:
    d: int
    order: tuple


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in g.edges
    ]
    return Graph(g.n, edges)


def subdivide_all_edges(g: Graph) -> BipartiteGraph:
    """Replace every edge by a path of length 2.

    Original vertices keep their indices and become class X; the i-th edge
    in sorted order becomes the new degree-2 vertex g.n + i in class Y.
    """
    n = g.n
    es = g.sorted_edges()
    new_edges = []
    for i, (u, v) in enumerate(es):
        w = n + i
        new_edges.append((u, w))
        new_edges.append((v, w))
    sub = Graph(n + len(es), new_edges)
    return BipartiteGraph(sub, range(n), range(n, n + len(es)))


def two_color(g: Graph) -> BipartiteGraph:
    """Two-color g, or raise OddCycleFound with an odd cycle certificate.

    The X class is the side containing the lowest-indexed vertex of each
    connected component; isolated vertices default to X.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            nq = []
            for u in queue:
                for w in sorted(g.adj[u]):
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        parent[w] = u
                        depth[w] = depth[u] + 1
                        nq.append(w)
                    elif color[w] == color[u]:
                        raise OddCycleFound(_odd_cycle(u, w, parent, depth))
            queue = nq
    x = [v for v in range(g.n) if color[v] == 0]
    y = [v for v in range(g.n) if color[v] == 1]
    return BipartiteGraph(g, x, y)


def _odd_cycle(u, w, parent, depth):
    # Walk both endpoints of the conflict edge up to their lowest common
    # ancestor in the BFS forest; the two paths plus the edge form the cycle.
    pu, pw = [u], [w]
    while depth[pu[-1]] > depth[pw[-1]]:
        pu.append(parent[pu[-1]])
    while depth[pw[-1]] > depth[pu[-1]]:
        pw.append(parent[pw[-1]])
    while pu[-1] != pw[-1]:
        pu.append(parent[pu[-1]])
        pw.append(parent[pw[-1]])
    return pu + pw[-2::-1]


def degeneracy(g: Graph) -> DegeneracyResult:
    """Degeneracy via repeated minimum-degree removal (lowest index first)."""
    remaining = set(range(g.n))
    deg = {v: g.degree(v) for v in remaining}
    order = []
    d = 0
    while remaining:
        v = min(remaining, key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        order.append(v)
        remaining.remove(v)
        for w in g.adj[v]:
            if w in remaining:
                deg[w] -= 1
    return DegeneracyResult(d, tuple(order))


# ---------------------------------------------------------------------------
# generators


def grid(rows, cols) -> Graph:
    if rows < 1 or cols < 1:
        raise InvalidParameter("grid dimensions must be positive")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def cycle(n) -> Graph:
    if n < 3:
        raise InvalidParameter("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n) -> Graph:
    if n < 1:
        raise InvalidParameter("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a, b) -> BipartiteGraph:
    if a < 0 or b < 0:
        raise InvalidParameter("class sizes must be non-negative")
    g = Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])
    return BipartiteGraph(g, range(a), range(a, a + b))


def random_bipartite(nx, ny, p, seed) -> BipartiteGraph:
    if not 0.0 <= p <= 1.0:
        raise InvalidParameter("edge probability must be in [0,1]")
    if nx < 0 or ny < 0:
        raise InvalidParameter("class sizes must be non-negative")
    rng = random.Random(seed)
    edges = [
        (u, nx + v)
        for u in range(nx)
        for v in range(ny)
        if rng.random() < p
    ]
    g = Graph(nx + ny, edges)
    return BipartiteGraph(g, range(nx), range(nx, nx + ny))


def random_cubic(n, seed) -> Graph:
    """Seeded 3-regular simple graph via the configuration model.

    Stub pairings with loops or parallel edges are fully resampled until a
    simple graph appears.
    """
    if n < 4 or n % 2 != 0:
        raise InvalidParameter("random_cubic needs even n >= 4")
    rng = random.Random(seed)
    while True:
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            e = (u, v) if u < v else (v, u)
            if e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return Graph(n, edges)


# ---------------------------------------------------------------------------
# text format: `graph <n> <m>`, then m sorted `<u> <v>` lines (u < v),
# optionally a final `bip <x_class indices>` line.


def graph_to_text(g: Graph) -> str:
    lines = [f"graph {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def bipartite_to_text(b: BipartiteGraph) -> str:
    bip = " ".join(str(v) for v in sorted(b.x_class))
    return graph_to_text(b.graph) + ("bip " + bip).rstrip() + "\n"


def parse_graph_text(text):
    """Parse the edge-list format; returns Graph, or BipartiteGraph if a
    `bip` line is present. Accepts unsorted edge lines."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "graph":
        raise GraphFormatError(f"bad header line: {lines[0]!r}")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError:
        raise GraphFormatError(f"bad header line: {lines[0]!r}") from None
    if len(lines) < 1 + m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1 : 1 + m]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line: {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"bad edge line: {ln!r}") from None
    try:
        g = Graph(n, edges)
    except InvalidParameter as exc:
        raise GraphFormatError(str(exc)) from None
    if g.m != m:
        raise GraphFormatError("duplicate edges in file")
    rest = lines[1 + m :]
    if not rest:
        return g
    if len(rest) != 1 or rest[0].split()[0] != "bip":
        raise GraphFormatError(f"unexpected trailing lines: {rest!r}")
    try:
        x = [int(t) for t in rest[0].split()[1:]]
    except ValueError:
        raise GraphFormatError(f"bad bip line: {rest[0]!r}") from None
    try:
        return BipartiteGraph(g, x, set(range(n)) - set(x))
    except InvalidParameter as exc:
        raise GraphFormatError(str(exc)) from None


def save_graph(obj, filename):
    text = bipartite_to_text(obj) if isinstance(obj, BipartiteGraph) else graph_to_text(obj)
    with open(filename, "w") as f:
        f.write(text)


def load_graph(filename):
    with open(filename) as f:
        return parse_graph_text(f.read())
