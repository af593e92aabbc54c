"""Distinguishing colourings of small graphs and the automorphism search behind them."""

from .distinguishing import (Colouring, are_colourings_isomorphic, count_distinguishing,
                             distinguishing_index, distinguishing_number, is_distinguishing)
from .graph import (Graph, bfs_levels, components, induced_subgraph, line_graph,
                    parse_edge_list, parse_graph6, write_graph6)
from .motion import edge_motion, motion, rs_bound_check
from .perm import PermGroup, compose, edge_support, identity, inverse, support
from .search import automorphism_group

__version__ = "0.1.0"

__all__ = [
    "Colouring", "Graph", "PermGroup",
    "are_colourings_isomorphic", "automorphism_group", "bfs_levels", "components",
    "compose", "count_distinguishing", "distinguishing_index", "distinguishing_number",
    "edge_motion", "edge_support", "identity", "induced_subgraph", "inverse",
    "is_distinguishing", "line_graph", "motion", "parse_edge_list", "parse_graph6",
    "rs_bound_check", "support", "write_graph6",
]
