import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_automorphisms, brute_count, brute_distinguishing, brute_least_colours
from symbreak.distinguishing import (Colouring, are_colourings_isomorphic, count_distinguishing,
                                     distinguishing_index, distinguishing_number,
                                     is_distinguishing)
from symbreak.graph import Graph, complete_graph, cycle_graph, path_graph
from symbreak.search import automorphism_group


@st.composite
def graph_and_colouring(draw):
    n = draw(st.integers(1, 6))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    g = Graph(n, draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else [])
    vals = draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    return g, vals


class TestColouring:
    def test_range_checked(self):
        with pytest.raises(ValueError):
            Colouring("vertex", (0, 3), 2)
        with pytest.raises(ValueError):
            Colouring("face", (0,), 1)

    def test_length_checked(self):
        with pytest.raises(ValueError):
            is_distinguishing(path_graph(3), Colouring.vertex([0, 1]))

    def test_json_round_trip(self):
        c = Colouring.edge([0, 1, 1], 3)
        assert Colouring.from_json(c.to_json()) == c


class TestIsDistinguishing:
    def test_p3_distinct_ends(self):
        assert is_distinguishing(path_graph(3), Colouring.vertex([0, 0, 1])) == (True, None)

    def test_p3_equal_ends(self):
        ok, witness = is_distinguishing(path_graph(3), Colouring.vertex([0, 1, 0]))
        assert not ok and witness == (2, 1, 0)

    def test_k3_edge(self):
        ok, witness = is_distinguishing(complete_graph(3), Colouring.edge([0, 0, 1]))
        assert not ok
        assert witness == (0, 2, 1)

    @settings(max_examples=100, deadline=None)
    @given(graph_and_colouring())
    def test_agrees_with_brute_force(self, case):
        g, vals = case
        ok, witness = is_distinguishing(g, Colouring.vertex(vals, 3))
        assert ok == brute_distinguishing(vals, brute_automorphisms(g))
        if not ok:
            assert all(vals[witness[v]] == vals[v] for v in range(g.n))
            assert witness != tuple(range(g.n))


class TestNumbers:
    def test_k3(self):
        assert distinguishing_number(complete_graph(3)).value == 3
        assert distinguishing_index(complete_graph(3)).value == 3

    def test_k2(self):
        assert distinguishing_number(complete_graph(2)).value == 2
        assert distinguishing_index(complete_graph(2)).value is None

    def test_two_isolated_vertices_have_no_index(self):
        assert distinguishing_index(Graph(2, [])).value is None

    def test_witness_is_first_and_distinguishing(self):
        res = distinguishing_number(path_graph(3))
        assert res.value == 2
        assert res.witness.values == (0, 0, 1)

    @pytest.mark.parametrize("g", [path_graph(4), cycle_graph(5), complete_graph(4),
                                   Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])])
    def test_against_brute_force(self, g):
        assert distinguishing_number(g).value == brute_least_colours(g)
        assert distinguishing_index(g).value == brute_least_colours(g, edge=True)

    def test_exhaustive_method_agrees(self):
        for g in (cycle_graph(6), complete_graph(5), path_graph(5)):
            for fn in (distinguishing_number, distinguishing_index):
                assert fn(g) == fn(g, method="exhaustive")

    def test_monotone_in_k(self):
        g = cycle_graph(5)
        d = distinguishing_number(g).value
        acts = automorphism_group(g).as_array()
        from symbreak.kernels import colouring_search
        for k in range(d, d + 3):
            assert colouring_search(acts, k)[0] > 0


class TestIsomorphism:
    def test_identical(self, p3):
        c = Colouring.vertex([0, 1, 1])
        assert are_colourings_isomorphic(p3, c, c)

    def test_swapped(self, p3):
        assert are_colourings_isomorphic(p3, Colouring.vertex([0, 1, 1]), Colouring.vertex([1, 1, 0]))

    def test_not_isomorphic(self, p3):
        assert not are_colourings_isomorphic(p3, Colouring.vertex([0, 1, 1]),
                                             Colouring.vertex([1, 0, 1]))

    def test_edge_kind(self, c4):
        a = Colouring.edge([1, 0, 0, 0])
        b = Colouring.edge([0, 0, 0, 1])
        assert are_colourings_isomorphic(c4, a, b)

    def test_kind_mismatch(self, p3):
        with pytest.raises(ValueError):
            are_colourings_isomorphic(p3, Colouring.vertex([0, 1, 1]), Colouring.edge([0, 1]))


class TestCount:
    def test_k1(self):
        r = count_distinguishing(Graph(1, []), 1)
        assert (r.labelled, r.classes) == (1, 1)

    def test_p3(self):
        # brute force: the swap preserves exactly the colourings with c0 == c2
        expect = sum(1 for c in itertools.product(range(2), repeat=3) if c[0] != c[2])
        assert expect == 4
        r = count_distinguishing(path_graph(3), 2)
        assert (r.labelled, r.classes) == (4, 2)

    @pytest.mark.parametrize("g", [cycle_graph(4), complete_graph(4), path_graph(5),
                                   Graph(4, [(0, 1)])])
    @pytest.mark.parametrize("kind", ["vertex", "edge"])
    def test_against_brute_force(self, g, kind):
        for k in (1, 2, 3):
            r = count_distinguishing(g, k, kind)
            assert r.labelled == brute_count(g, k, edge=kind == "edge")
            assert r.labelled % r.aut_order == 0
