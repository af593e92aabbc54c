"""Vertex and edge motion, and the motion criterion for 2-distinguishability."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distinguishing import distinguishing_number
from .graph import Graph
from .perm import Permutation, edge_permutation_array
from .search import automorphism_group


@dataclass(frozen=True)
class MotionResult:
    value: int | None
    witness: Permutation | None
    aut_order: int


@dataclass(frozen=True)
class RSVerdict:
    bound_holds: bool
    d_at_most_2: bool | None
    motion: int | None
    aut_order: int


def _min_moved(perms: np.ndarray, acts: np.ndarray, order: int) -> MotionResult:
    if order == 1:
        return MotionResult(None, None, 1)
    moved = (acts[1:] != np.arange(acts.shape[1])).sum(axis=1)
    i = int(np.argmin(moved))
    return MotionResult(int(moved[i]), tuple(int(x) for x in perms[1 + i]), order)


def motion(g: Graph, cutoff: int | None = None) -> MotionResult:
    """Fewest vertices moved by a nontrivial automorphism; ``None`` if asymmetric."""
    grp = automorphism_group(g, cutoff=cutoff)
    perms = grp.as_array()
    return _min_moved(perms, perms, grp.order)


def edge_motion(g: Graph, cutoff: int | None = None) -> MotionResult:
    grp = automorphism_group(g, cutoff=cutoff)
    perms = grp.as_array()
    return _min_moved(perms, edge_permutation_array(perms, g), grp.order)


def rs_bound_holds(motion_value: int | None, aut_order: int) -> bool:
    """``motion >= 2 log2 |Aut|`` evaluated exactly as ``2**motion >= |Aut|**2``."""
    if motion_value is None:
        return True
    return 2 ** motion_value >= aut_order ** 2


def rs_bound_check(g: Graph, method: str = "pruned", cutoff: int | None = None) -> RSVerdict:
    mot = motion(g, cutoff)
    holds = rs_bound_holds(mot.value, mot.aut_order)
    d2 = None
    if holds:
        d2 = distinguishing_number(g, method=method, cutoff=cutoff).value <= 2
    return RSVerdict(holds, d2, mot.value, mot.aut_order)
