"""Individualization-refinement search for colour-preserving automorphisms.

The search follows one leftmost path of the refinement tree to a discrete
partition and then, level by level from the bottom, looks for an automorphism
sending the path vertex to each target-cell vertex not yet known to be in its
orbit. The orbit sizes multiply to the group order.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph
from .perm import PermGroup, is_automorphism, orbit

Cells = list[list[int]]


class _Refiner:
    def __init__(self, g: Graph, ecol: Sequence[int] | None):
        self.g = g
        # neighbour lists paired with the colour of the connecting edge
        self.nbrs = [
            [(w, 0 if ecol is None else int(ecol[g.edge_id(v, w)])) for w in g.adjacency[v]]
            for v in range(g.n)
        ]

    def refine(self, cells: Cells) -> tuple[Cells, tuple]:
        """Equitable refinement; returns the new ordered partition and a trace.

        Both are label-invariant: relabelling the input relabels the output
        partition and leaves the trace unchanged.
        """
        trace = []
        while True:
            cell_of = {}
            for i, c in enumerate(cells):
                for v in c:
                    cell_of[v] = i
            new: Cells = []
            round_trace = []
            for i, c in enumerate(cells):
                if len(c) == 1:
                    new.append(c)
                    continue
                groups: dict[tuple, list[int]] = {}
                for v in c:
                    counts: dict[tuple[int, int], int] = {}
                    for w, col in self.nbrs[v]:
                        key = (cell_of[w], col)
                        counts[key] = counts.get(key, 0) + 1
                    groups.setdefault(tuple(sorted(counts.items())), []).append(v)
                if len(groups) == 1:
                    new.append(c)
                    continue
                for sig in sorted(groups):
                    new.append(groups[sig])
                    round_trace.append((i, sig, len(groups[sig])))
            if len(new) == len(cells):
                return cells, tuple(trace)
            trace.append(tuple(round_trace))
            cells = new


def _initial_cells(n: int, vcol: Sequence[int] | None) -> Cells:
    if vcol is None:
        return [list(range(n))] if n else []
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(int(vcol[v]), []).append(v)
    return [groups[c] for c in sorted(groups)]


def _target_cell(cells: Cells) -> int:
    """Index of the first largest non-singleton cell, or -1 if discrete."""
    best, size = -1, 1
    for i, c in enumerate(cells):
        if len(c) > size:
            best, size = i, len(c)
    return best


def _individualize(cells: Cells, idx: int, v: int) -> Cells:
    rest = [x for x in cells[idx] if x != v]
    return cells[:idx] + [[v], rest] + cells[idx + 1:]


def automorphism_group(g: Graph, vcol: Sequence[int] | None = None,
                       ecol: Sequence[int] | None = None,
                       cutoff: int | None = None) -> PermGroup:
    """Automorphisms of ``g`` preserving the optional vertex and edge colourings."""
    n = g.n
    if vcol is not None and len(vcol) != n:
        raise ValueError("vertex colouring length does not match n")
    if ecol is not None and len(ecol) != g.m:
        raise ValueError("edge colouring length does not match m")
    if n == 0:
        return PermGroup(0, [], 1, cutoff)
    ref = _Refiner(g, ecol)

    cells, tr = ref.refine(_initial_cells(n, vcol))
    path_cells = [cells]
    path_traces = [tr]
    path_vertices: list[int] = []
    targets: list[list[int]] = []
    while True:
        t = _target_cell(cells)
        if t < 0:
            break
        v = min(cells[t])
        targets.append(sorted(cells[t]))
        path_vertices.append(v)
        cells, tr = ref.refine(_individualize(cells, t, v))
        path_cells.append(cells)
        path_traces.append(tr)
    leaf_ref = [c[0] for c in cells]
    depth = len(path_vertices)

    def leaf_perm(leaf: Cells) -> tuple[int, ...]:
        p = [0] * n
        for a, b in zip(leaf_ref, leaf):
            p[a] = b[0]
        return tuple(p)

    def find_leaf(cells: Cells, level: int) -> tuple[int, ...] | None:
        # ``cells`` sits at ``level`` and already matched the reference trace
        t = _target_cell(cells)
        if t < 0:
            p = leaf_perm(cells)
            return p if is_automorphism(p, g, vcol, ecol) else None
        if len(cells[t]) != len(targets[level]):
            return None
        for w in sorted(cells[t]):
            child, tr = ref.refine(_individualize(cells, t, w))
            if tr != path_traces[level + 1] or len(child) != len(path_cells[level + 1]):
                continue
            found = find_leaf(child, level + 1)
            if found is not None:
                return found
        return None

    generators: list[tuple[int, ...]] = []
    order = 1
    for level in range(depth - 1, -1, -1):
        v = path_vertices[level]
        parent = path_cells[level]
        t = _target_cell(parent)
        orb = orbit(generators, v)
        for w in targets[level]:
            if w in orb:
                continue
            child, tr = ref.refine(_individualize(parent, t, w))
            if tr != path_traces[level + 1] or len(child) != len(path_cells[level + 1]):
                continue
            found = find_leaf(child, level + 1)
            if found is None:
                continue
            assert found[v] == w and all(found[x] == x for x in path_vertices[:level])
            generators.append(found)
            orb = orbit(generators, v)
        order *= len(orb)
    return PermGroup(n, generators, order, cutoff)


def canonical_labelling(g: Graph) -> tuple[int, ...]:
    """Vertex order whose relabelled graph is the canonical representative."""
    n = g.n
    if n == 0:
        return ()
    ref = _Refiner(g, None)
    best: list = [None, None]

    def key_of(order: list[int]) -> tuple:
        pos = {v: i for i, v in enumerate(order)}
        return tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges))

    def walk(cells: Cells) -> None:
        t = _target_cell(cells)
        if t < 0:
            order = [c[0] for c in cells]
            k = key_of(order)
            if best[0] is None or k < best[0]:
                best[0], best[1] = k, order
            return
        children = []
        for w in cells[t]:
            child, tr = ref.refine(_individualize(cells, t, w))
            children.append((tr, [len(c) for c in child], child))
        # only the children with the smallest invariant trace are explored;
        # that set is itself label-invariant
        top = min((tr, sizes) for tr, sizes, _ in children)
        for tr, sizes, child in children:
            if (tr, sizes) == top:
                walk(child)

    cells, _ = ref.refine([list(range(n))])
    walk(cells)
    return tuple(best[1])


def canonical_form(g: Graph) -> Graph:
    from .graph import relabel
    return relabel(g, canonical_labelling(g))


def colour_preserving_map(g: Graph, c1: Sequence[int], c2: Sequence[int],
                          edge_kind: bool, cutoff: int | None = None):
    """Some automorphism ``gamma`` with ``c2 = c1 o gamma`` or ``None``.

    Uses the group enumeration; colouring isomorphism is only needed at
    desk scale.
    """
    import numpy as np

    from .perm import edge_permutation_array

    grp = automorphism_group(g, cutoff=cutoff)
    perms = grp.as_array()
    acts = edge_permutation_array(perms, g) if edge_kind else perms
    a = np.asarray(c1)
    b = np.asarray(c2)
    hits = np.nonzero((a[acts] == b).all(axis=1))[0]
    if len(hits) == 0:
        return None
    return tuple(int(x) for x in perms[hits[0]])


__all__ = ["automorphism_group", "canonical_labelling", "canonical_form",
           "colour_preserving_map"]
