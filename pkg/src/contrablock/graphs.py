"""Simple undirected graphs, edge contraction, and basic structure queries.

Vertices are the integers 0..n-1.  Edges are unordered pairs stored as
(min, max) tuples.  All values are immutable after construction, so they can
be shared freely between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed graph text; ``line`` is the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Loopless simple graph with per-vertex neighbor sets."""

    n: int
    edges: frozenset[Edge]
    adj: tuple[frozenset[int], ...]

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        norm: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range in edge ({u}, {v})")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            e = _norm(u, v)
            if e in norm:
                raise ValueError(f"duplicate edge {e}")
            norm.add(e)
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(n, frozenset(norm), tuple(frozenset(s) for s in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def vertices(self) -> range:
        return range(self.n)


@dataclass(frozen=True)
class ContractionResult:
    """Quotient graph plus the total map from old vertices to new ones."""

    quotient: Graph
    vmap: tuple[int, ...]

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.quotient.n)]
        for old, new in enumerate(self.vmap):
            out[new].append(old)
        return out


def parse_graph(text: str) -> Graph:
    """Parse the plain text format: '# comment' lines, then 'n m', then m 'u v' lines."""
    n = m = -1
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n < 0:
            if len(parts) != 2:
                raise GraphFormatError("expected header 'n m'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError("non-integer header field", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative count in header", lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError("expected edge 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("non-integer vertex", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        e = _norm(u, v)
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e[0]} {e[1]}", lineno)
        seen.add(e)
        edges.append(e)
    if n < 0:
        raise GraphFormatError("missing header 'n m'")
    if len(edges) != m:
        raise GraphFormatError(f"header announced {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def contract_set(g: Graph, contracted) -> ContractionResult:
    """Contract a set of edges; merged classes are renumbered by their minimum
    original vertex, so the result is independent of input order."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in contracted:
        e = _norm(u, v)
        if e not in g.edges:
            raise ValueError(f"edge {e} not in graph")
        ru, rv = find(e[0]), find(e[1])
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    roots = sorted({find(v) for v in range(g.n)})
    index = {r: i for i, r in enumerate(roots)}
    vmap = tuple(index[find(v)] for v in range(g.n))
    qedges = {_norm(vmap[u], vmap[v]) for u, v in g.edges if vmap[u] != vmap[v]}
    return ContractionResult(Graph.from_edges(len(roots), qedges), vmap)


def contract_edge(g: Graph, e: Edge) -> ContractionResult:
    return contract_set(g, [e])


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by their minimum vertex."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in sorted(g.adj[v]):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def bipartition(g: Graph, allowed=None) -> tuple[list[int], list[int]] | None:
    """A proper two-sided split (L, R), or None if the graph is odd.

    The odd-cycle witness paired with a None answer is produced by
    shortest_odd_cycle.  ``allowed`` restricts the check to an induced
    vertex subset.
    """
    verts = sorted(allowed) if allowed is not None else range(g.n)
    alive = set(verts)
    color: dict[int, int] = {}
    for s in verts:
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in sorted(g.adj[v]):
                if w not in alive:
                    continue
                if w not in color:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    left = sorted(v for v in verts if color[v] == 0)
    right = sorted(v for v in verts if color[v] == 1)
    return left, right


def _cut_to_simple_odd_cycle(walk: list[int]) -> list[int]:
    # Closed odd walk -> simple odd cycle contained in it.
    while True:
        pos: dict[int, int] = {}
        split = None
        for i, v in enumerate(walk):
            if v in pos:
                split = (pos[v], i)
                break
            pos[v] = i
        if split is None:
            return walk
        i, j = split
        inner = walk[i:j]
        outer = walk[:i] + walk[j:]
        walk = inner if len(inner) % 2 == 1 else outer


def shortest_odd_cycle(g: Graph, allowed=None) -> list[int] | None:
    """A shortest odd cycle as a vertex list (consecutive and wrap-around
    entries adjacent), or None when the graph is bipartite."""
    alive = set(allowed) if allowed is not None else set(range(g.n))
    best: tuple[int, list[int]] | None = None
    for s in sorted(alive):
        dist = {s: 0}
        par = {s: -1}
        queue = deque([s])
        order = []
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g.adj[v]):
                if w in alive and w not in dist:
                    dist[w] = dist[v] + 1
                    par[w] = v
                    queue.append(w)
        for v in order:
            for w in sorted(g.adj[v]):
                if w not in dist or w <= v:
                    continue
                if (dist[v] + dist[w]) % 2 == 0:
                    length = dist[v] + dist[w] + 1
                    if best is None or length < best[0]:
                        up, down = [], []
                        x = v
                        while x != -1:
                            up.append(x)
                            x = par[x]
                        x = w
                        while x != -1:
                            down.append(x)
                            x = par[x]
                        # closed walk: s..v along the tree, edge vw, w..back to s
                        walk = up[::-1] + down[:-1]
                        cyc = _cut_to_simple_odd_cycle(walk)
                        best = (len(cyc), cyc)
        if best is not None and best[0] == 3:
            break
    return best[1] if best is not None else None


def is_star(g: Graph) -> bool:
    """True iff the (connected) graph has an edge and one vertex meets them all."""
    if len(connected_components(g)) != 1:
        raise ValueError("is_star requires a connected graph")
    return g.m >= 1 and max(g.degree(v) for v in range(g.n)) == g.m


def shortest_path(g: Graph, u: int, v: int) -> list[int] | None:
    """Minimum-length path from u to v, BFS tie-broken by smallest neighbor."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("endpoint out of range")
    if u == v:
        return [u]
    par = {u: -1}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in sorted(g.adj[x]):
            if w not in par:
                par[w] = x
                if w == v:
                    path = [v]
                    while path[-1] != u:
                        path.append(par[path[-1]])
                    return path[::-1]
                queue.append(w)
    return None


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices``; returns (subgraph, new-to-old map)."""
    old = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(old)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph.from_edges(len(old), edges), old


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    return Graph.from_edges(a.n + b.n, edges)


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def subdivide_edges(g: Graph) -> Graph:
    """Subdivide every edge once; original vertices keep their indices and
    subdivision vertices are appended in sorted edge order."""
    edges = []
    nxt = g.n
    for u, v in g.sorted_edges():
        edges.append((u, nxt))
        edges.append((nxt, v))
        nxt += 1
    return Graph.from_edges(nxt, edges)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_two_connected(g: Graph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    for v in range(g.n):
        rest = [x for x in range(g.n) if x != v]
        sub, _ = induced_subgraph(g, rest)
        if not is_connected(sub):
            return False
    return True
