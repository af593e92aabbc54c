import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symbreak.corpus import corpus
from symbreak.distinguishing import (Colouring, distinguishing_index, distinguishing_number,
                                     is_distinguishing)
from symbreak.graph import Graph, complete_graph, cycle_graph, line_graph, path_graph, star_graph
from symbreak.transfer import natural_map, transfer_colouring, whitney_check


class TestNaturalMap:
    def test_p3_swap_exchanges_edges(self):
        nm = natural_map(path_graph(3))
        assert nm((2, 1, 0)) == (1, 0)
        assert nm.homomorphism_ok

    def test_c4_images_distinct(self):
        imgs = natural_map(cycle_graph(4)).images()
        assert len({tuple(r) for r in imgs.tolist()}) == 8

    def test_edgeless_rejected(self):
        with pytest.raises(ValueError):
            natural_map(Graph(1, []))

    def test_k2_kernel(self):
        v = whitney_check(complete_graph(2))
        assert not v.injective and v.label == "outside theorem scope"


class TestWhitney:
    def test_p5(self):
        v = whitney_check(path_graph(5))
        assert v.in_scope and v.bijective and v.aut_order == 2 == v.line_aut_order
        assert v.label == "bijective"

    def test_triangle_and_claw_share_a_line_graph(self):
        assert line_graph(complete_graph(3))[0] == line_graph(star_graph(3))[0]
        for g in (complete_graph(3), star_graph(3)):
            v = whitney_check(g)
            assert not v.in_scope and v.label == "outside theorem scope"

    def test_k4_not_surjective(self):
        v = whitney_check(complete_graph(4))
        assert v.injective and not v.surjective
        assert (v.aut_order, v.line_aut_order) == (24, 48)

    def test_connected_in_scope_graphs(self):
        for g in corpus(6, connected_only=True, n_min=5):
            assert whitney_check(g).label == "bijective"

    def test_disconnected_out_of_scope(self):
        assert not whitney_check(Graph(6, [(0, 1), (2, 3), (4, 5)])).in_scope


class TestColouringTransfer:
    def test_kinds_swap(self):
        g = path_graph(4)
        c = Colouring.edge([0, 1, 1])
        t = transfer_colouring(g, c)
        assert t.kind == "vertex" and t.values == c.values
        assert transfer_colouring(g, t) == c

    def test_length_checked(self):
        with pytest.raises(ValueError):
            transfer_colouring(path_graph(4), Colouring.edge([0, 1]))

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(list(corpus(6, connected_only=True, n_min=5))), st.data())
    def test_distinguishing_status_carries_over(self, g, data):
        vals = data.draw(st.lists(st.integers(0, 1), min_size=g.m, max_size=g.m))
        c = Colouring.edge(vals)
        lg, _ = line_graph(g)
        assert is_distinguishing(g, c)[0] == is_distinguishing(lg, transfer_colouring(g, c))[0]

    def test_index_equals_number_of_line_graph(self):
        for g in corpus(6, connected_only=True, n_min=5):
            assert distinguishing_index(g).value == distinguishing_number(line_graph(g)[0]).value
