import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symbreak.graph import (Graph, GraphFormatError, bfs_levels, components, complete_graph,
                            cycle_graph, induced_subgraph, line_graph, parse_edge_list,
                            parse_graph, parse_graph6, path_graph, spider_graph, star_graph,
                            write_graph6)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


class TestEdgeList:
    def test_path(self):
        g = parse_edge_list("3 2\n0 1\n1 2")
        assert g.n == 3 and g.edges == ((0, 1), (1, 2))
        assert g == path_graph(3)

    def test_cycle(self):
        assert parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0") == cycle_graph(4)

    def test_loop_rejected(self):
        with pytest.raises(GraphFormatError, match="loop"):
            parse_edge_list("2 1\n0 0")

    @pytest.mark.parametrize("text", ["3 1\n0 5", "3 1\n0 x", "3 2\n0 1", "3 1\n0 1 2", ""])
    def test_malformed(self, text):
        with pytest.raises(GraphFormatError):
            parse_edge_list(text)

    def test_duplicates_collapsed_with_flag(self):
        g = parse_edge_list("# lazy file\n3 3\n0 1\n1 0\n1 2\n")
        assert g.edges == ((0, 1), (1, 2))
        assert g.duplicates_collapsed
        assert not path_graph(3).duplicates_collapsed


class TestGraph6:
    def test_k2_hand_encoded(self):
        # n=2 -> chr(63+2); single bit "1" padded to 100000 = 32 -> chr(95)
        assert parse_graph6("A_") == complete_graph(2)
        assert write_graph6(complete_graph(2)) == "A_"

    def test_k1(self):
        assert write_graph6(Graph(1, [])) == "@"
        assert parse_graph6("@") == Graph(1, [])

    def test_c4_hand_encoded(self):
        # column-major upper triangle of C4: (0,1)=1 (0,2)=0 (1,2)=1 (0,3)=1 (1,3)=0 (2,3)=1
        # bits 101101 = 45 -> chr(108) = 'l'
        assert write_graph6(cycle_graph(4)) == "Cl"

    @pytest.mark.parametrize("bad", ["A", "A__", "A\x7f", "A`"])
    def test_invalid(self, bad):
        with pytest.raises(GraphFormatError):
            parse_graph6(bad)

    @given(graphs())
    def test_round_trip(self, g):
        s = write_graph6(g)
        assert parse_graph6(s) == g
        assert write_graph6(parse_graph6(s)) == s

    def test_autodetect(self):
        assert parse_graph("3 2\n0 1\n1 2\n") == [path_graph(3)]
        assert parse_graph("A_\nBw\n") == [complete_graph(2), complete_graph(3)]


class TestLineGraph:
    def test_cycle(self):
        lg, emap = line_graph(cycle_graph(4))
        assert lg.n == 4 and lg.m == 4 and all(lg.degree(v) == 2 for v in range(4))
        assert emap == {0: 0, 1: 1, 2: 2, 3: 3}

    def test_claw_to_triangle(self):
        assert line_graph(star_graph(3))[0] == complete_graph(3)

    def test_p3_to_k2(self):
        assert line_graph(path_graph(3))[0] == complete_graph(2)

    def test_edgeless(self):
        assert line_graph(Graph(3, []))[0] == Graph(0, [])

    @given(graphs())
    def test_degree_formula(self, g):
        lg, emap = line_graph(g)
        for e, (u, v) in enumerate(g.edges):
            assert lg.degree(emap[e]) == g.degree(u) + g.degree(v) - 2


class TestLevels:
    def test_p4(self):
        g = path_graph(4)
        lv = bfs_levels(g, g.edge_id(1, 2))
        assert lv.levels == ((1, 2), (0, 3))

    def test_c4(self):
        g = cycle_graph(4)
        assert bfs_levels(g, g.edge_id(0, 1)).levels == ((0, 1), (2, 3))

    def test_spider(self):
        g, legs = spider_graph([4, 4, 4])
        lv = bfs_levels(g, g.edge_id(0, legs[0][0]))
        assert set(lv.levels[0]) == {0, legs[0][0]}
        assert set(lv.levels[1]) == {legs[0][1], legs[1][0], legs[2][0]}

    def test_restricted_to_component(self):
        g = Graph(5, [(0, 1), (1, 2), (3, 4)])
        lv = bfs_levels(g, 0)
        assert sorted(v for lvl in lv.levels for v in lvl) == [0, 1, 2]

    @given(graphs())
    def test_edges_join_equal_or_adjacent_levels(self, g):
        if g.m == 0:
            return
        lv = bfs_levels(g, 0)
        level = lv.level_of()
        assert set(lv.levels[0]) == set(g.edges[0])
        for u, v in g.edges:
            if u in level or v in level:
                assert abs(level[u] - level[v]) <= 1


class TestComponents:
    def test_p3_minus_middle(self):
        sub, old = induced_subgraph(path_graph(3), [0, 2])
        assert sub.m == 0 and old == [0, 2]
        assert len(components(sub)) == 2

    def test_connected(self):
        assert components(cycle_graph(5)) == [[0, 1, 2, 3, 4]]

    def test_double_star_minus_centres(self):
        from symbreak.instances import double_star
        g, (u, v) = double_star(3, 4)
        sub, _ = induced_subgraph(g, [x for x in range(g.n) if x not in (u, v)])
        assert all(len(c) == 1 for c in components(sub))

    @given(graphs())
    def test_invariants(self, g):
        assert sum(len(a) for a in g.adjacency) == 2 * g.m
        parts = components(g)
        assert sorted(v for c in parts for v in c) == list(range(g.n))
        keep = list(range(0, g.n, 2))
        sub, old = induced_subgraph(g, keep)
        expect = {(u, v) for u, v in g.edges if u in keep and v in keep}
        assert {(old[a], old[b]) for a, b in sub.edges} == expect


@settings(max_examples=50)
@given(graphs())
def test_edge_ids_are_lexicographic(g):
    assert list(g.edges) == sorted(g.edges)
    assert all(u < v for u, v in g.edges)
    assert all(g.edge_id(u, v) == i for i, (u, v) in enumerate(g.edges))
