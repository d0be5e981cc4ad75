import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contrablock.graphs import (
    Graph,
    GraphFormatError,
    bipartition,
    complete_graph,
    connected_components,
    contract_edge,
    contract_set,
    cycle_graph,
    disjoint_union,
    is_star,
    parse_graph,
    path_graph,
    serialize_graph,
    shortest_odd_cycle,
    shortest_path,
    star_graph,
    subdivide_edges,
)

from .conftest import random_graph


def edge_subsets(draw_edges):
    return st.lists(st.sampled_from(draw_edges), unique=True) if draw_edges else st.just([])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(slots), unique=True)) if slots else []
    return Graph.from_edges(n, edges)


class TestParsing:
    def test_triangle(self):
        g = parse_graph("3 3\n0 1\n1 2\n0 2\n")
        assert g.n == 3 and g.edges == frozenset({(0, 1), (1, 2), (0, 2)})

    def test_single_vertex(self):
        g = parse_graph("1 0\n")
        assert g.n == 1 and g.m == 0

    def test_c4(self):
        g = parse_graph("4 4\n0 1\n1 2\n2 3\n0 3\n")
        assert g.n == 4 and g.m == 4 and g.degree(0) == 2

    def test_comments_ignored(self):
        g = parse_graph("# hello\n3 1\n# mid\n0 2\n")
        assert g.m == 1

    @pytest.mark.parametrize(
        "text,line",
        [
            ("3\n", 1),
            ("3 1\n0 9\n", 2),
            ("3 1\n1 1\n", 2),
            ("3 2\n0 1\n1 0\n", 3),
            ("3 2\n0 1\nx y\n", 3),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(GraphFormatError) as err:
            parse_graph(text)
        assert err.value.line == line

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphFormatError):
            parse_graph("3 2\n0 1\n")

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_round_trip(self, g):
        text = serialize_graph(g)
        assert serialize_graph(parse_graph(text)) == text


class TestContraction:
    def test_c4_single_edge_gives_triangle(self):
        res = contract_edge(cycle_graph(4), (0, 1))
        assert res.quotient.n == 3 and res.quotient.m == 3

    def test_spanning_tree_of_triangle_gives_point(self):
        res = contract_set(complete_graph(3), [(0, 1), (1, 2)])
        assert res.quotient.n == 1 and res.quotient.m == 0

    def test_empty_set_is_identity(self):
        g = cycle_graph(5)
        res = contract_set(g, [])
        assert res.quotient.edges == g.edges and res.vmap == tuple(range(5))

    def test_non_edge_rejected(self):
        with pytest.raises(ValueError):
            contract_set(path_graph(3), [(0, 2)])

    def test_vmap_surjective_and_class_rule(self):
        g = cycle_graph(6)
        res = contract_set(g, [(0, 1), (3, 4)])
        assert sorted(set(res.vmap)) == list(range(res.quotient.n))
        # classes renumbered by minimum original vertex
        classes = res.classes()
        assert [min(c) for c in classes] == sorted(min(c) for c in classes)

    @given(graphs(), st.randoms(use_true_random=False))
    @settings(max_examples=60, deadline=None)
    def test_order_independence(self, g, rnd):
        edges = g.sorted_edges()
        if not edges:
            return
        f = rnd.sample(edges, rnd.randint(1, len(edges)))
        bulk = contract_set(g, f)

        for _ in range(2):
            order = f[:]
            rnd.shuffle(order)
            cur, vmap = g, list(range(g.n))
            for u, v in order:
                a, b = vmap[u], vmap[v]
                if a == b:
                    continue
                step = contract_edge(cur, (min(a, b), max(a, b)))
                cur = step.quotient
                vmap = [step.vmap[x] for x in vmap]
            # sequential contraction yields the same partition, hence the
            # same graph up to the deterministic relabeling
            assert vmap == list(bulk.vmap)
            assert cur.edges == bulk.quotient.edges

    @given(graphs(), st.randoms(use_true_random=False))
    @settings(max_examples=60, deadline=None)
    def test_quotient_size_formula(self, g, rnd):
        edges = g.sorted_edges()
        f = rnd.sample(edges, rnd.randint(0, len(edges))) if edges else []
        res = contract_set(g, f)
        touched = {v for e in f for v in e}
        n_classes = len({res.vmap[v] for v in touched})
        assert res.quotient.n == g.n - len(touched) + n_classes


class TestStructureQueries:
    def test_components(self):
        g = disjoint_union(complete_graph(3), complete_graph(3))
        assert connected_components(g) == [[0, 1, 2], [3, 4, 5]]
        assert connected_components(Graph.from_edges(4, [])) == [[0], [1], [2], [3]]
        assert len(connected_components(cycle_graph(5))) == 1

    def test_bipartition(self):
        assert bipartition(cycle_graph(4)) == ([0, 2], [1, 3])
        assert bipartition(cycle_graph(5)) is None
        assert bipartition(Graph.from_edges(3, [])) == ([0, 1, 2], [])

    def test_odd_cycle_witness_pairs_with_bipartition(self):
        rng = random.Random(5)
        for _ in range(80):
            g = random_graph(rng, rng.randint(1, 8), 0.5)
            cycle = shortest_odd_cycle(g)
            if bipartition(g) is None:
                assert cycle is not None and len(cycle) % 2 == 1
                assert len(set(cycle)) == len(cycle)
                for i, v in enumerate(cycle):
                    assert g.has_edge(v, cycle[(i + 1) % len(cycle)])
            else:
                assert cycle is None

    def test_is_star(self):
        assert is_star(path_graph(2))
        assert is_star(star_graph(3))
        assert not is_star(path_graph(4))
        with pytest.raises(ValueError):
            is_star(disjoint_union(path_graph(2), path_graph(2)))

    def test_shortest_path(self):
        g = path_graph(4)
        assert shortest_path(g, 0, 3) == [0, 1, 2, 3]
        assert shortest_path(g, 0, 0) == [0]
        assert shortest_path(disjoint_union(path_graph(2), path_graph(2)), 0, 3) is None

    def test_shortest_path_prefers_smallest_neighbor(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        assert shortest_path(g, 0, 3) == [0, 1, 3]

    def test_subdivide_k4(self):
        assert subdivide_edges(complete_graph(4)).n == 10
