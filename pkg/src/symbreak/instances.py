"""Crafted graph families used to exercise the breaker."""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, cycle_graph, spider_graph


def spider(leg_lengths: Sequence[int]) -> tuple[Graph, list[list[int]]]:
    return spider_graph(leg_lengths)


def cycle(n: int) -> Graph:
    return cycle_graph(n)


def hub_spider(leg_lengths: Sequence[int], pendants: int = 0) -> tuple[Graph, int]:
    """Spider whose centre (vertex 0) is meant as a hub, plus optional pendant leaves."""
    g, _ = spider_graph(leg_lengths)
    edges = list(g.edges)
    n = g.n
    for _ in range(pendants):
        edges.append((0, n))
        n += 1
    return Graph(n, edges), 0


def double_star_composite(u_legs: Sequence[int], v_legs: Sequence[int],
                          u_pendants: int = 1, v_pendants: int = 1) -> tuple[Graph, tuple[int, int]]:
    """Adjacent hubs 0 and 1, each carrying paths and pendant leaves.

    With only pendants this is a plain double star.
    """
    edges = [(0, 1)]
    n = 2
    for hub, legs, pend in ((0, u_legs, u_pendants), (1, v_legs, v_pendants)):
        for length in legs:
            leg = list(range(n, n + length))
            n += length
            edges.append((hub, leg[0]))
            edges.extend(zip(leg, leg[1:]))
        for _ in range(pend):
            edges.append((hub, n))
            n += 1
    return Graph(n, edges), (0, 1)


def double_star(a: int, b: int) -> tuple[Graph, tuple[int, int]]:
    """Centres 0 and 1 joined by an edge, with ``a`` and ``b`` leaves."""
    return double_star_composite((), (), a, b)


def cycle_with_hub(n: int, spokes: Sequence[int]) -> tuple[Graph, int]:
    """Cycle on ``1..n`` plus hub 0 joined to the listed cycle positions."""
    edges = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    edges += [(0, 1 + s) for s in spokes]
    return Graph(n + 1, edges), 0
