"""Permutations as image tuples and finitely enumerated permutation groups."""

from __future__ import annotations

import os
from typing import Iterator, Sequence

import numpy as np

from .graph import Graph

Permutation = tuple[int, ...]

DEFAULT_CUTOFF = 10**6


class CutoffExceeded(RuntimeError):
    """The instance needs more group elements than the enumeration cutoff allows."""


def default_cutoff() -> int:
    return int(os.environ.get("SYMBREAK_CUTOFF", DEFAULT_CUTOFF))


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(a: Sequence[int], b: Sequence[int]) -> Permutation:
    """``(a o b)(v) = a(b(v))``."""
    if len(a) != len(b):
        raise ValueError(f"degree mismatch: {len(a)} vs {len(b)}")
    return tuple(a[x] for x in b)


def inverse(a: Sequence[int]) -> Permutation:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def is_permutation(a: Sequence[int]) -> bool:
    return sorted(a) == list(range(len(a)))


def support(p: Sequence[int]) -> set[int]:
    return {v for v, x in enumerate(p) if x != v}


def edge_image(p: Sequence[int], g: Graph, e: int) -> int:
    u, v = g.edges[e]
    return g.edge_id(p[u], p[v])


def edge_permutation(p: Sequence[int], g: Graph) -> Permutation:
    """Induced permutation of edge ids; ``KeyError`` if ``p`` is not an automorphism."""
    return tuple(edge_image(p, g, e) for e in range(g.m))


def edge_support(p: Sequence[int], g: Graph) -> set[int]:
    return {e for e, f in enumerate(edge_permutation(p, g)) if f != e}


def is_automorphism(p: Sequence[int], g: Graph, vcol: Sequence[int] | None = None,
                    ecol: Sequence[int] | None = None) -> bool:
    if len(p) != g.n:
        return False
    if vcol is not None and any(vcol[p[v]] != vcol[v] for v in range(g.n)):
        return False
    for e, (u, v) in enumerate(g.edges):
        a, b = p[u], p[v]
        if not g.has_edge(a, b):
            return False
        if ecol is not None and ecol[g.edge_id(a, b)] != ecol[e]:
            return False
    return True


def edge_permutation_array(perms: np.ndarray, g: Graph) -> np.ndarray:
    """Vectorised edge action: row ``i`` is the edge permutation of ``perms[i]``."""
    if g.m == 0:
        return np.zeros((len(perms), 0), dtype=np.int64)
    eidx = np.full((g.n, g.n), -1, dtype=np.int64)
    us = np.array([u for u, _ in g.edges])
    vs = np.array([v for _, v in g.edges])
    eidx[us, vs] = np.arange(g.m)
    eidx[vs, us] = np.arange(g.m)
    out = eidx[perms[:, us], perms[:, vs]]
    if (out < 0).any():
        raise ValueError("permutation does not map edges to edges")
    return out


class PermGroup:
    """Group given by generators, with exact order and enumeration up to a cutoff."""

    def __init__(self, n: int, generators: Sequence[Sequence[int]], order: int,
                 cutoff: int | None = None):
        self.n = n
        ident = identity(n)
        self.generators: tuple[Permutation, ...] = tuple(
            tuple(int(x) for x in gen) for gen in generators if tuple(gen) != ident)
        self.order = int(order)
        self.cutoff = default_cutoff() if cutoff is None else cutoff
        self._array: np.ndarray | None = None

    def __repr__(self) -> str:
        return f"PermGroup(n={self.n}, order={self.order}, generators={len(self.generators)})"

    def is_trivial(self) -> bool:
        return self.order == 1

    def as_array(self) -> np.ndarray:
        """All elements as an ``(order, n)`` int64 array, identity in row 0."""
        if self._array is None:
            if self.order > self.cutoff:
                raise CutoffExceeded(
                    f"group order {self.order} exceeds enumeration cutoff {self.cutoff}")
            self._array = _closure(self.n, self.generators, self.order)
        return self._array

    def elements(self) -> Iterator[Permutation]:
        for row in self.as_array():
            yield tuple(int(x) for x in row)

    def orbit(self, v: int) -> set[int]:
        return orbit(self.generators, v)

    def to_json(self) -> dict:
        return {"order": self.order, "generators": [list(g) for g in self.generators]}


def orbit(generators: Sequence[Sequence[int]], v: int) -> set[int]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for gen in generators:
            y = gen[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _closure(n: int, generators: Sequence[Permutation], order: int) -> np.ndarray:
    ident = np.arange(n, dtype=np.int64)
    rows = [ident]
    seen = {ident.tobytes()}
    frontier = ident[None, :]
    gens = [np.asarray(g, dtype=np.int64) for g in generators]
    while len(frontier):
        fresh = []
        for gen in gens:
            # row x -> x o gen
            cand = frontier[:, gen]
            for r in cand:
                key = r.tobytes()
                if key not in seen:
                    seen.add(key)
                    fresh.append(r)
        frontier = np.array(fresh, dtype=np.int64).reshape(-1, n)
        rows.extend(fresh)
    arr = np.array(rows, dtype=np.int64).reshape(-1, n)
    if len(arr) != order:
        raise AssertionError(f"closure produced {len(arr)} elements, expected {order}")
    return arr
