"""Exhaustive census of small graphs, one representative per isomorphism class."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, is_connected, write_graph6
from .search import canonical_form

# number of graphs / connected graphs on n unlabelled vertices
CENSUS_ALL = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CENSUS_CONNECTED = {0: 1, 1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}

MAX_CORPUS_N = 8


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    """Canonical representatives on exactly ``n`` vertices.

    Every graph on ``n`` vertices arises from one on ``n - 1`` vertices by
    adding a vertex with some neighbourhood, so extending each smaller
    representative in all ``2**(n-1)`` ways and deduplicating covers every class.
    """
    if n == 0:
        return (Graph(0, []),)
    seen: dict[str, Graph] = {}
    for base in _classes(n - 1):
        for mask in range(1 << (n - 1)):
            extra = [(i, n - 1) for i in range(n - 1) if mask >> i & 1]
            canon = canonical_form(Graph(n, list(base.edges) + extra))
            seen.setdefault(write_graph6(canon), canon)
    return tuple(seen[k] for k in sorted(seen, key=lambda s: (seen[s].m, s)))


def graphs_on(n: int, connected_only: bool = False) -> list[Graph]:
    if n > MAX_CORPUS_N:
        raise ValueError(f"corpus generation is limited to n <= {MAX_CORPUS_N}")
    out = list(_classes(n))
    if connected_only:
        out = [g for g in out if is_connected(g)]
    return out


def corpus(n_max: int, connected_only: bool = False, n_min: int = 1) -> Iterator[Graph]:
    """All graphs with ``n_min <= n <= n_max`` vertices up to isomorphism, deterministic order."""
    for n in range(n_min, n_max + 1):
        yield from graphs_on(n, connected_only)
