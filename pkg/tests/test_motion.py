import math

import pytest

from conftest import asymmetric6
from oracles import brute_automorphisms, brute_edge_action
from symbreak.corpus import corpus
from symbreak.graph import complete_graph, cycle_graph, star_graph
from symbreak.motion import edge_motion, motion, rs_bound_check, rs_bound_holds
from symbreak.perm import edge_support, support


def brute_motion(g, edge=False):
    best = None
    for p in brute_automorphisms(g)[1:]:
        moved = sum(1 for e, f in enumerate(brute_edge_action(p, g)) if e != f) if edge \
            else sum(1 for v in range(g.n) if p[v] != v)
        best = moved if best is None else min(best, moved)
    return best


def test_asymmetric_is_absent():
    r = motion(asymmetric6())
    assert r.value is None and r.witness is None and r.aut_order == 1
    assert edge_motion(asymmetric6()).value is None


def test_k4():
    assert motion(complete_graph(4)).value == 2
    assert edge_motion(complete_graph(4)).value == 4


def test_c4():
    assert brute_motion(cycle_graph(4)) == 2 and brute_motion(cycle_graph(4), edge=True) == 2
    assert motion(cycle_graph(4)).value == 2
    assert edge_motion(cycle_graph(4)).value == 2


def test_claw_edge_motion():
    assert edge_motion(star_graph(3)).value == 2


def test_witness_attains_value():
    g = cycle_graph(6)
    r = motion(g)
    assert len(support(r.witness)) == r.value
    e = edge_motion(g)
    assert len(edge_support(e.witness, g)) == e.value


@pytest.mark.parametrize("g", list(corpus(5)))
def test_matches_brute_force(g):
    r, e = motion(g), edge_motion(g)
    assert r.value == brute_motion(g)
    assert (r.value is None) == (e.value is None)
    if r.value is not None:
        assert r.value >= 2
    if e.value is not None and g.m:
        assert e.value == brute_motion(g, edge=True)


class TestMotionBound:
    def test_exact_comparison(self):
        assert rs_bound_holds(None, 1)
        assert not rs_bound_holds(2, 24)
        # 2 log2 8 = 6: equality counts as holding
        assert rs_bound_holds(6, 8) and not rs_bound_holds(5, 8)

    def test_asymmetric(self):
        v = rs_bound_check(asymmetric6())
        assert v.bound_holds and v.d_at_most_2

    def test_k4_makes_no_claim(self):
        v = rs_bound_check(complete_graph(4))
        assert v.motion == 2 and v.aut_order == 24
        assert 2 < 2 * math.log2(24)
        assert not v.bound_holds and v.d_at_most_2 is None

    def test_c6(self):
        v = rs_bound_check(cycle_graph(6))
        # a reflection through two opposite vertices moves the other four
        assert (v.motion, v.aut_order, v.bound_holds) == (4, 12, False)
