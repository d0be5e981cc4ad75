"""Exact pattern-hitting solvers.

A HitFamily pairs a containment relation with either explicit pattern graphs
or one of three symbolic families: "single-edge" (vertex cover),
"all-cycles" (feedback vertex set), "odd-cycles" (odd cycle transversal).
Symbolic families get dedicated solvers; explicit ones go through generic
occurrence search with branching on the occurrence's vertices.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .graphs import (
    Edge,
    Graph,
    contract_set,
    is_connected,
    shortest_odd_cycle,
)
from .vertex_cover import vc_branching

RELATIONS = ("subgraph", "induced-subgraph", "minor", "topological-minor")
SYMBOLIC_FAMILIES = ("single-edge", "all-cycles", "odd-cycles")


def _check_relation(relation: str) -> str:
    if relation not in RELATIONS:
        raise ValueError(f"unknown containment relation {relation!r}")
    return relation


@dataclass(frozen=True)
class HitFamily:
    relation: str
    patterns: tuple[Graph, ...] | str

    def __post_init__(self):
        _check_relation(self.relation)
        if isinstance(self.patterns, str):
            if self.patterns not in SYMBOLIC_FAMILIES:
                raise ValueError(f"unknown symbolic family {self.patterns!r}")
        else:
            object.__setattr__(self, "patterns", tuple(self.patterns))
            if not self.patterns:
                raise ValueError("explicit family needs at least one pattern")
            for h in self.patterns:
                if h.n == 0 or not is_connected(h):
                    raise ValueError("patterns must be connected and nonempty")

    @property
    def symbolic(self) -> bool:
        return isinstance(self.patterns, str)

    @staticmethod
    def vertex_cover() -> "HitFamily":
        return HitFamily("subgraph", "single-edge")

    @staticmethod
    def feedback_vertex_set() -> "HitFamily":
        return HitFamily("subgraph", "all-cycles")

    @staticmethod
    def odd_cycle_transversal() -> "HitFamily":
        return HitFamily("subgraph", "odd-cycles")

    @staticmethod
    def explicit(patterns, relation: str) -> "HitFamily":
        return HitFamily(relation, tuple(patterns))


@dataclass(frozen=True)
class Occurrence:
    """One model of a pattern inside a host graph.

    ``vertices`` is the sorted set of all host vertices the model touches;
    a hitting set must meet it.  ``mapping`` holds the relation-specific
    model: image tuple (subgraph, induced), branch sets (minor), or
    (branch vertices, paths) for topological minors.
    """

    relation: str
    vertices: tuple[int, ...]
    mapping: tuple


def _pattern_order(h: Graph) -> list[int]:
    """BFS order, so each vertex after the first root touches an earlier one."""
    order: list[int] = []
    seen: set[int] = set()
    for root in range(h.n):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(h.adj[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def _subgraph_occ(g: Graph, h: Graph, induced: bool, allowed) -> tuple[int, ...] | None:
    hosts = frozenset(range(g.n)) if allowed is None else frozenset(allowed)
    order = _pattern_order(h)
    image: dict[int, int] = {}
    used: set[int] = set()

    def degree_in(v: int) -> int:
        return len(g.adj[v] & hosts)

    def place(i: int) -> bool:
        if i == len(order):
            return True
        pv = order[i]
        anchors = [image[q] for q in h.adj[pv] if q in image]
        candidates = sorted(g.adj[anchors[0]] & hosts) if anchors else sorted(hosts)
        for hv in candidates:
            if hv in used or degree_in(hv) < h.degree(pv):
                continue
            ok = True
            for q, iq in image.items():
                adjacent = hv in g.adj[iq]
                if q in h.adj[pv]:
                    if not adjacent:
                        ok = False
                        break
                elif induced and adjacent:
                    ok = False
                    break
            if not ok:
                continue
            image[pv] = hv
            used.add(hv)
            if place(i + 1):
                return True
            del image[pv]
            used.remove(hv)
        return False

    if place(0):
        return tuple(image[v] for v in range(h.n))
    return None


def _connected_sets(g: Graph, free: frozenset[int], max_size: int):
    """Every connected subset of ``free`` exactly once, smallest-root first."""
    if max_size < 1:
        return
    for root in sorted(free):
        pool = frozenset(x for x in free if x > root)
        yield from _grow_set(g, frozenset([root]), sorted(g.adj[root] & pool), frozenset(), pool, max_size)


def _grow_set(g, current, ext, banned, pool, max_size):
    yield current
    if len(current) >= max_size:
        return
    for idx, v in enumerate(ext):
        new_banned = banned | frozenset(ext[:idx])
        fresh = sorted(
            w
            for w in g.adj[v]
            if w in pool and w not in current and w not in new_banned and w not in ext
        )
        yield from _grow_set(g, current | {v}, ext[idx + 1 :] + fresh, new_banned, pool, max_size)


def _minor_occ(g: Graph, h: Graph, allowed) -> tuple[frozenset[int], ...] | None:
    hosts = frozenset(range(g.n)) if allowed is None else frozenset(allowed)
    if h.n > len(hosts):
        return None
    order = _pattern_order(h)
    sets: dict[int, frozenset[int]] = {}
    used: set[int] = set()

    def place(i: int) -> bool:
        if i == len(order):
            return True
        pv = order[i]
        earlier = [q for q in h.adj[pv] if q in sets]
        free = hosts - used
        max_size = len(free) - (len(order) - i - 1)
        for branch in _connected_sets(g, frozenset(free), max_size):
            if all(any(g.adj[x] & sets[q] for x in branch) for q in earlier):
                sets[pv] = branch
                used.update(branch)
                if place(i + 1):
                    return True
                del sets[pv]
                used.difference_update(branch)
        return False

    if place(0):
        return tuple(sets[v] for v in range(h.n))
    return None


def _simple_paths(g: Graph, a: int, b: int, blocked: frozenset[int], hosts: frozenset[int]):
    """Simple a..b paths whose internal vertices avoid ``blocked``."""

    path = [a]
    on_path = {a}

    def walk(v: int):
        for w in sorted(g.adj[v]):
            if w == b:
                yield path + [b]
                continue
            if w in on_path or w in blocked or w not in hosts:
                continue
            path.append(w)
            on_path.add(w)
            yield from walk(w)
            path.pop()
            on_path.remove(w)

    yield from walk(a)


def _topo_occ(g: Graph, h: Graph, allowed):
    hosts = frozenset(range(g.n)) if allowed is None else frozenset(allowed)
    if h.n > len(hosts):
        return None
    pedges = h.sorted_edges()
    branch: dict[int, int] = {}

    def place(i: int):
        if i == h.n:
            return route(0, frozenset(), ())
        for hv in sorted(hosts):
            if hv in branch.values():
                continue
            if len(g.adj[hv] & hosts) < h.degree(i):
                continue
            branch[i] = hv
            res = place(i + 1)
            if res is not None:
                return res
            del branch[i]
        return None

    def route(j: int, internals: frozenset[int], paths: tuple):
        if j == len(pedges):
            return paths
        a, b = pedges[j]
        blocked = frozenset(branch.values()) - {branch[a], branch[b]}
        for path in _simple_paths(g, branch[a], branch[b], blocked | internals, hosts):
            inner = frozenset(path[1:-1])
            res = route(j + 1, internals | inner, paths + (tuple(path),))
            if res is not None:
                return res
        return None

    paths = place(0)
    if paths is None:
        return None
    branches = tuple(branch[v] for v in range(h.n))
    return branches, paths


def contains(g: Graph, h: Graph, relation: str, allowed=None) -> Occurrence | None:
    """First occurrence of h inside g under the relation, or None.

    Search is deterministic: pattern vertices in BFS order, host candidates
    ascending.  ``allowed`` restricts the host to an induced vertex subset.
    """
    relation = _check_relation(relation)
    if relation in ("subgraph", "induced-subgraph"):
        mapping = _subgraph_occ(g, h, relation == "induced-subgraph", allowed)
        if mapping is None:
            return None
        return Occurrence(relation, tuple(sorted(set(mapping))), mapping)
    if relation == "minor":
        sets = _minor_occ(g, h, allowed)
        if sets is None:
            return None
        verts = sorted(v for s in sets for v in s)
        return Occurrence(relation, tuple(verts), sets)
    found = _topo_occ(g, h, allowed)
    if found is None:
        return None
    branches, paths = found
    verts = sorted(set(branches) | {v for p in paths for v in p})
    return Occurrence(relation, tuple(verts), (branches, paths))


def _family_occurrence(g: Graph, fam: HitFamily, allowed) -> Occurrence | None:
    for h in fam.patterns:
        occ = contains(g, h, fam.relation, allowed)
        if occ is not None:
            return occ
    return None


def _warn_if_not_antichain(fam: HitFamily) -> None:
    pats = fam.patterns
    for i, big in enumerate(pats):
        for j, small in enumerate(pats):
            if i != j and contains(big, small, fam.relation) is not None:
                warnings.warn(
                    f"pattern {j} is contained in pattern {i} under {fam.relation}; "
                    "the family is not an antichain",
                    stacklevel=3,
                )
                return


def _alive_components(g: Graph, alive: frozenset[int]) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps: list[frozenset[int]] = []
    for s in sorted(alive):
        if s in seen:
            continue
        seen.add(s)
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w in alive and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def _packing_lb(g: Graph, fam: HitFamily, alive: frozenset[int], stop_at: int) -> int:
    """Greedy count of vertex-disjoint occurrences: a lower bound on the
    hitting number, capped at ``stop_at``."""
    count = 0
    current = set(alive)
    while count < stop_at:
        occ = _family_occurrence(g, fam, frozenset(current))
        if occ is None:
            break
        current.difference_update(occ.vertices)
        count += 1
    return count


def _hit_component(g, fam, comp: frozenset[int], cap: int, memo) -> tuple[int, frozenset[int]] | None:
    entry = memo.get(comp)
    if entry is not None and entry[0] == "exact":
        return (entry[1], entry[2]) if entry[1] <= cap else None
    if cap < 0:
        return None
    occ = _family_occurrence(g, fam, comp)
    if occ is None:
        memo[comp] = ("exact", 0, frozenset())
        return 0, frozenset()
    lb = entry[1] if entry is not None else None
    if lb is None:
        lb = _packing_lb(g, fam, comp, cap + 1)
        memo[comp] = ("lb", lb)
    if lb > cap:
        return None
    best: tuple[int, frozenset[int]] | None = None
    for v in occ.vertices:
        allowance = (best[0] - 2) if best is not None else (cap - 1)
        sub = _hit_solve(g, fam, comp - {v}, allowance, memo)
        if sub is not None:
            candidate = (sub[0] + 1, sub[1] | {v})
            if best is None or candidate[0] < best[0]:
                best = candidate
    if best is None:
        stored = memo.get(comp)
        known = stored[1] if stored is not None and stored[0] == "lb" else 0
        memo[comp] = ("lb", max(known, cap + 1))
        return None
    memo[comp] = ("exact", best[0], best[1])
    return best


def _hit_solve(g, fam, alive: frozenset[int], cap: int, memo) -> tuple[int, frozenset[int]] | None:
    if cap < 0:
        return None
    comps = _alive_components(g, alive)
    if not comps:
        return 0, frozenset()
    if len(comps) == 1:
        return _hit_component(g, fam, comps[0], cap, memo)
    lbs = []
    for comp in comps:
        entry = memo.get(comp)
        if entry is not None:
            lbs.append(entry[1])
        else:
            lbs.append(1 if _family_occurrence(g, fam, comp) is not None else 0)
    if sum(lbs) > cap:
        return None
    total = 0
    picks: set[int] = set()
    for i, comp in enumerate(comps):
        rest = sum(lbs[i + 1 :])
        res = _hit_component(g, fam, comp, cap - total - rest, memo)
        if res is None:
            return None
        total += res[0]
        picks |= res[1]
    if total > cap:
        return None
    return total, frozenset(picks)


def min_transversal(g: Graph, fam: HitFamily, budget: int | None = None):
    """Minimum vertex set whose deletion removes every pattern occurrence;
    (size, set), or None iff a budget is given and the optimum exceeds it."""
    if fam.symbolic:
        if fam.patterns == "single-edge":
            r = vc_branching(g, budget)
            return (r.size, r.cover) if r is not None else None
        if fam.patterns == "all-cycles":
            return feedback_vertex_set(g, budget)
        return odd_cycle_transversal(g, budget)
    _warn_if_not_antichain(fam)
    cap = g.n if budget is None else min(budget, g.n)
    memo: dict = {}
    res = _hit_solve(g, fam, frozenset(range(g.n)), cap, memo)
    if res is None:
        return None
    size, picks = res
    assert _family_occurrence(g, fam, frozenset(range(g.n)) - picks) is None
    return size, frozenset(picks)


# -- dedicated feedback vertex set solver ------------------------------------
#
# Internal multigraph with the standard reductions: drop degree <= 1, bypass
# degree-2 vertices (merging their two edges; a resulting loop forces its
# vertex, a parallel pair forces an endpoint choice into the branching), then
# branch on a maximum-degree vertex in/out.  The gadget instances this must
# handle are dominated by degree-2 vertices, so reduction does most the work.


def _mg_from_graph(g: Graph) -> dict[int, dict[int, int]]:
    adj: dict[int, dict[int, int]] = {v: {} for v in range(g.n)}
    for u, v in g.edges:
        adj[u][v] = 1
        adj[v][u] = 1
    return adj


def _mg_copy(adj):
    return {v: dict(ns) for v, ns in adj.items()}


def _mg_delete(adj, v) -> None:
    for w in adj[v]:
        if w != v:
            del adj[w][v]
    del adj[v]


def _mg_degree(adj, v) -> int:
    return sum(c for w, c in adj[v].items() if w != v) + 2 * adj[v].get(v, 0)


def _mg_reduce(adj, forbidden) -> set[int] | None:
    """Exhaustive degree reductions; returns forced solution vertices, or
    None when a loop sits on a forbidden vertex (branch infeasible)."""
    forced: set[int] = set()
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if adj[v].get(v, 0):
                if v in forbidden:
                    return None
                forced.add(v)
                _mg_delete(adj, v)
                changed = True
                break
            deg = _mg_degree(adj, v)
            if deg <= 1:
                _mg_delete(adj, v)
                changed = True
                break
            if deg == 2:
                ends: list[int] = []
                for w, c in adj[v].items():
                    ends.extend([w] * c)
                u, w = ends
                if v not in forbidden and u in forbidden and w in forbidden:
                    # bypassing commits to a solution without v, which needs a
                    # free endpoint to swap onto; leave v to the branching
                    continue
                _mg_delete(adj, v)
                if u == w:
                    adj[u][u] = 1
                else:
                    mult = min(2, adj[u].get(w, 0) + 1)
                    adj[u][w] = mult
                    adj[w][u] = mult
                changed = True
                break
    return forced


def _mg_components(adj) -> list[dict[int, dict[int, int]]]:
    seen: set[int] = set()
    comps = []
    for s in sorted(adj):
        if s in seen:
            continue
        seen.add(s)
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append({v: dict(adj[v]) for v in sorted(comp)})
    return comps


def _mg_find_cycle(adj) -> list[int] | None:
    for v in sorted(adj):
        if adj[v].get(v, 0):
            return [v]
    for v in sorted(adj):
        for w, c in sorted(adj[v].items()):
            if w > v and c >= 2:
                return [v, w]
    seen: set[int] = set()
    for s in sorted(adj):
        if s in seen:
            continue
        parent = {s: -1}
        stack = [(s, -1)]
        while stack:
            v, par = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            parent[v] = par
            for w in sorted(adj[v]):
                if w == par:
                    continue
                if w in parent and w in seen:
                    cycle = [v]
                    x = v
                    while x != w and parent[x] != -1:
                        x = parent[x]
                        cycle.append(x)
                    if cycle[-1] == w:
                        return cycle
                    continue
                if w not in seen:
                    stack.append((w, v))
    return None


def _mg_packing_lb(adj) -> int:
    work = _mg_copy(adj)
    count = 0
    while True:
        cycle = _mg_find_cycle(work)
        if cycle is None:
            return count
        for v in cycle:
            _mg_delete(work, v)
        count += 1


def _fvs_solve(adj, forbidden: frozenset[int], cap: int) -> tuple[int, set[int]] | None:
    if cap < 0:
        return None
    adj = _mg_copy(adj)
    forced = _mg_reduce(adj, forbidden)
    if forced is None or len(forced) > cap:
        return None
    total = len(forced)
    picks = set(forced)
    if not adj:
        return total, picks

    comps = _mg_components(adj)
    if len(comps) > 1:
        lbs = [_mg_packing_lb(c) for c in comps]
        if total + sum(lbs) > cap:
            return None
        for i, comp in enumerate(comps):
            res = _fvs_solve(comp, forbidden, cap - total - sum(lbs[i + 1 :]))
            if res is None:
                return None
            total += res[0]
            picks |= res[1]
        return (total, picks) if total <= cap else None

    rem = cap - total
    if _mg_packing_lb(adj) > rem:
        return None

    pair = None
    for v in sorted(adj):
        for w, c in sorted(adj[v].items()):
            if w > v and c >= 2:
                pair = (v, w)
                break
        if pair:
            break

    best: tuple[int, set[int]] | None = None

    def consider(res, extra_vertex=None):
        nonlocal best
        if res is None:
            return
        size, chosen = res
        if extra_vertex is not None:
            size += 1
            chosen = chosen | {extra_vertex}
        if best is None or size < best[0]:
            best = (size, chosen)

    def allowance() -> int:
        return rem if best is None else best[0] - 1

    if pair is not None:
        for x in pair:
            if x in forbidden:
                continue
            child = _mg_copy(adj)
            _mg_delete(child, x)
            consider(_fvs_solve(child, forbidden, allowance() - 1), x)
    else:
        candidates = [v for v in adj if v not in forbidden]
        if not candidates:
            return None
        v = max(sorted(candidates), key=lambda x: _mg_degree(adj, x))
        child = _mg_copy(adj)
        _mg_delete(child, v)
        consider(_fvs_solve(child, forbidden, allowance() - 1), v)
        consider(_fvs_solve(adj, forbidden | {v}, allowance()))

    if best is None:
        return None
    return total + best[0], picks | best[1]


def feedback_vertex_set(g: Graph, budget: int | None = None):
    """Minimum vertex set meeting every cycle; (size, set), or None iff a
    budget is given and the optimum exceeds it."""
    cap = g.n if budget is None else min(budget, g.n)
    res = _fvs_solve(_mg_from_graph(g), frozenset(), cap)
    if res is None:
        return None
    return res[0], frozenset(res[1])


def odd_cycle_transversal(g: Graph, budget: int | None = None):
    """Minimum vertex set whose deletion leaves a bipartite graph, by
    iterative deepening over the vertices of a shortest odd cycle."""
    hi = g.n if budget is None else min(budget, g.n)
    for k in range(hi + 1):
        visited: set[frozenset[int]] = set()
        res = _oct_decide(g, frozenset(range(g.n)), k, visited)
        if res is not None:
            return len(res), frozenset(res)
    return None


def _oct_decide(g, alive: frozenset[int], k: int, visited) -> set[int] | None:
    cycle = shortest_odd_cycle(g, alive)
    if cycle is None:
        return set()
    if k == 0 or alive in visited:
        return None
    visited.add(alive)
    for v in cycle:
        res = _oct_decide(g, alive - {v}, k - 1, visited)
        if res is not None:
            res.add(v)
            return res
    return None


def drop_given_edge(g: Graph, e, fam: HitFamily) -> bool:
    """Does contracting this one edge lower the hitting number?"""
    base = min_transversal(g, fam)
    assert base is not None
    size = base[0]
    if size == 0:
        return False
    quotient = contract_set(g, [tuple(e)]).quotient
    return min_transversal(quotient, fam, budget=size - 1) is not None


def find_dropping_edge(g: Graph, fam: HitFamily) -> Edge | None:
    """Lexicographically first edge whose contraction lowers the hitting
    number, or None when no edge does."""
    base = min_transversal(g, fam)
    assert base is not None
    size = base[0]
    if size == 0:
        return None
    for e in g.sorted_edges():
        quotient = contract_set(g, [e]).quotient
        if min_transversal(quotient, fam, budget=size - 1) is not None:
            return e
    return None
