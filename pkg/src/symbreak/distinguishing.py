"""Finding and counting distinguishing colourings of vertices or edges."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph
from .kernels import SearchBudgetExceeded, colouring_search, exhaustive_search
from .perm import Permutation, edge_permutation_array
from .search import automorphism_group, colour_preserving_map

VERTEX = "vertex"
EDGE = "edge"


@dataclass(frozen=True)
class Colouring:
    """Map from vertex or edge ids to colour indices ``0..k-1``."""

    kind: str
    values: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.kind not in (VERTEX, EDGE):
            raise ValueError(f"kind must be 'vertex' or 'edge', got {self.kind!r}")
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        if any(not 0 <= x < self.k for x in self.values):
            raise ValueError(f"colour values must lie in 0..{self.k - 1}")

    @classmethod
    def vertex(cls, values: Sequence[int], k: int | None = None) -> "Colouring":
        values = tuple(int(x) for x in values)
        return cls(VERTEX, values, k if k is not None else max(values, default=-1) + 1 or 1)

    @classmethod
    def edge(cls, values: Sequence[int], k: int | None = None) -> "Colouring":
        values = tuple(int(x) for x in values)
        return cls(EDGE, values, k if k is not None else max(values, default=-1) + 1 or 1)

    def check_for(self, g: Graph) -> None:
        expected = g.n if self.kind == VERTEX else g.m
        if len(self.values) != expected:
            raise ValueError(f"{self.kind} colouring has {len(self.values)} values, graph needs {expected}")

    def colours_used(self) -> int:
        return len(set(self.values))

    def to_json(self) -> dict:
        return {"kind": self.kind, "k": self.k, "values": list(self.values)}

    @classmethod
    def from_json(cls, data: dict) -> "Colouring":
        return cls(data["kind"], tuple(data["values"]), int(data["k"]))


@dataclass(frozen=True)
class SearchResult:
    value: int | None
    witness: Colouring | None


@dataclass(frozen=True)
class CountResult:
    labelled: int
    classes: int
    aut_order: int


def preserving_group(g: Graph, c: Colouring, cutoff: int | None = None):
    c.check_for(g)
    if c.kind == VERTEX:
        return automorphism_group(g, vcol=c.values, cutoff=cutoff)
    return automorphism_group(g, ecol=c.values, cutoff=cutoff)


def is_distinguishing(g: Graph, c: Colouring,
                      cutoff: int | None = None) -> tuple[bool, Permutation | None]:
    """Whether only the identity preserves ``c``; otherwise a preserving witness."""
    grp = preserving_group(g, c, cutoff)
    if grp.is_trivial():
        return True, None
    return False, grp.generators[0]


def _actions(g: Graph, kind: str, cutoff: int | None) -> np.ndarray:
    perms = automorphism_group(g, cutoff=cutoff).as_array()
    return perms if kind == VERTEX else edge_permutation_array(perms, g)


def _least_k(g: Graph, kind: str, method: str, backend: str | None,
             cutoff: int | None) -> SearchResult:
    acts = _actions(g, kind, cutoff)
    n_pos = acts.shape[1]
    for k in range(1, max(n_pos, 1) + 1):
        if method == "pruned":
            _, first = colouring_search(acts, k, first_only=True, restricted_growth=True,
                                        backend=backend)
        elif method == "exhaustive":
            _, first = exhaustive_search(acts, k, first_only=True)
        else:
            raise ValueError(f"unknown method {method!r}")
        if first is not None:
            return SearchResult(k, Colouring(kind, tuple(first), k))
    # all-distinct colours fail only when some nontrivial element acts trivially
    return SearchResult(None, None)


def distinguishing_number(g: Graph, method: str = "pruned", backend: str | None = None,
                          cutoff: int | None = None) -> SearchResult:
    """D(G) with the lexicographically first distinguishing colouring as witness."""
    return _least_k(g, VERTEX, method, backend, cutoff)


def distinguishing_index(g: Graph, method: str = "pruned", backend: str | None = None,
                         cutoff: int | None = None) -> SearchResult:
    """D'(G); ``value`` is ``None`` when no edge colouring is distinguishing.

    That happens exactly when a nontrivial automorphism fixes every edge,
    as for ``K2`` or two isolated vertices.
    """
    return _least_k(g, EDGE, method, backend, cutoff)


def are_colourings_isomorphic(g: Graph, c1: Colouring, c2: Colouring,
                              cutoff: int | None = None) -> bool:
    if c1.kind != c2.kind:
        raise ValueError("colourings of different kinds")
    c1.check_for(g)
    c2.check_for(g)
    return colour_preserving_map(g, c1.values, c2.values, c1.kind == EDGE, cutoff) is not None


def count_distinguishing(g: Graph, k: int, kind: str = VERTEX, backend: str | None = None,
                         cutoff: int | None = None, budget: int = 10**9) -> CountResult:
    """Labelled distinguishing ``k``-colourings and their number of isomorphism classes.

    Aut(G) acts freely on distinguishing colourings, so every class has
    exactly ``|Aut G|`` members.
    """
    grp = automorphism_group(g, cutoff=cutoff)
    perms = grp.as_array()
    acts = perms if kind == VERTEX else edge_permutation_array(perms, g)
    if k ** acts.shape[1] > budget:
        raise SearchBudgetExceeded(f"{k}**{acts.shape[1]} colourings exceed budget {budget}")
    labelled, _ = colouring_search(acts, k, backend=backend)
    classes, rem = divmod(labelled, grp.order)
    if rem:
        raise AssertionError(
            f"{labelled} distinguishing colourings not divisible by |Aut G| = {grp.order}")
    return CountResult(labelled, classes, grp.order)
