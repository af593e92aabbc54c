"""Vertex automorphisms acting on edges: the natural map Aut(G) -> Aut(L(G)).

For connected graphs on more than four vertices this map is an isomorphism,
so distinguishing edge colourings of ``G`` and distinguishing vertex
colourings of ``L(G)`` correspond one to one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distinguishing import EDGE, VERTEX, Colouring
from .graph import Graph, is_connected, line_graph
from .perm import PermGroup, compose, edge_permutation, edge_permutation_array, is_automorphism
from .search import automorphism_group


@dataclass
class NaturalMap:
    graph: Graph
    line: Graph
    source: PermGroup
    image: PermGroup
    homomorphism_ok: bool

    def __call__(self, gamma) -> tuple[int, ...]:
        return edge_permutation(gamma, self.graph)

    def images(self) -> np.ndarray:
        """Edge permutations of every source element, in enumeration order."""
        return edge_permutation_array(self.source.as_array(), self.graph)


@dataclass(frozen=True)
class WhitneyVerdict:
    in_scope: bool
    injective: bool
    surjective: bool
    aut_order: int
    line_aut_order: int

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    @property
    def label(self) -> str:
        if not self.in_scope:
            return "outside theorem scope"
        return "bijective" if self.bijective else "not bijective"


def natural_map(g: Graph, cutoff: int | None = None) -> NaturalMap:
    if g.m == 0:
        raise ValueError("natural map needs at least one edge")
    lg, _ = line_graph(g)
    src = automorphism_group(g, cutoff=cutoff)
    img = automorphism_group(lg, cutoff=cutoff)
    gens = src.generators
    hom = True
    for a in gens:
        if not is_automorphism(edge_permutation(a, g), lg):
            hom = False
        for b in gens:
            lhs = edge_permutation(compose(a, b), g)
            rhs = compose(edge_permutation(a, g), edge_permutation(b, g))
            hom &= lhs == rhs
    return NaturalMap(g, lg, src, img, hom)


def whitney_check(g: Graph, cutoff: int | None = None) -> WhitneyVerdict:
    """Injectivity via the kernel, surjectivity via equal orders of finite groups."""
    nm = natural_map(g, cutoff)
    imgs = nm.images()
    kernel = int((imgs == np.arange(g.m)).all(axis=1).sum())
    injective = kernel == 1
    surjective = injective and nm.source.order == nm.image.order
    in_scope = is_connected(g) and g.n > 4
    return WhitneyVerdict(in_scope, injective, surjective, nm.source.order, nm.image.order)


def transfer_colouring(g: Graph, c: Colouring) -> Colouring:
    """Edge colouring of ``g`` <-> vertex colouring of ``L(g)`` through the edge ids."""
    if len(c.values) != g.m:
        raise ValueError(f"colouring has {len(c.values)} values, graph has {g.m} edges")
    kind = VERTEX if c.kind == EDGE else EDGE
    return Colouring(kind, c.values, c.k)
