"""Two-colour edge colourings built by hub degree encoding and path packing.

The construction runs in two phases:

1. Hubs receive pairwise different numbers of black edges, so any
   colour-preserving automorphism fixes each hub.
2. Each targeted component of the graph minus the hubs gets a black anchor
   edge and then black paths of pairwise distinct lengths. A path is laid
   along the vertices moved by a surviving automorphism, starting in the
   lowest distance level on which that automorphism still acts and climbing
   one level per step. Each path kills every automorphism that moves it.

When a required path does not fit in the graph the engine raises
:class:`BreakerFailure` with the partial state instead of improvising.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .distinguishing import EDGE, Colouring, are_colourings_isomorphic, is_distinguishing
from .graph import Graph, LevelDecomposition, bfs_levels, components, induced_subgraph
from .perm import support
from .search import automorphism_group


class BreakerFailure(RuntimeError):
    """A phase of the construction could not be completed.

    ``reason`` is one of ``infeasible_plan``, ``no_path``, ``budget``,
    ``lengths_exhausted``, ``bad_input`` or ``verification``.
    """

    def __init__(self, reason: str, message: str, phase: str = "", state=None, **details):
        super().__init__(f"[{phase or '-'}:{reason}] {message}")
        self.reason = reason
        self.phase = phase
        self.state = state
        self.details = details


@dataclass(frozen=True)
class HubPlan:
    hubs: tuple[int, ...]
    d: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "hubs", tuple(int(h) for h in self.hubs))
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        if len(self.hubs) != len(self.d):
            raise ValueError("one black-degree target per hub is required")
        if len(set(self.hubs)) != len(self.hubs):
            raise ValueError("hubs must be distinct")
        for i, x in enumerate(self.d, 1):
            if x < i:
                raise ValueError(f"d_{i} = {x} < {i}")
            if i > 1 and x <= self.d[i - 2]:
                raise ValueError("d must be strictly increasing")

    @classmethod
    def default(cls, hubs: Sequence[int]) -> "HubPlan":
        return cls(tuple(hubs), tuple(range(1, len(hubs) + 1)))


@dataclass
class BlackPath:
    length: int
    vertices: tuple[int, ...]
    start_level: int
    placed: bool = False


@dataclass
class BreakerState:
    graph: Graph
    component: tuple[int, ...]
    black: set[int]
    anchor: int
    levels: LevelDecomposition
    frozen: frozenset[int]
    lengths: tuple[int, ...]
    used_lengths: list[int] = field(default_factory=list)
    paths: list[BlackPath] = field(default_factory=list)
    trace: list[dict] = field(default_factory=list)

    def component_black(self) -> list[int]:
        comp = set(self.component)
        return sorted(e for e in self.black
                      if self.graph.edges[e][0] in comp and self.graph.edges[e][1] in comp)

    def black_vertices(self) -> set[int]:
        return {x for e in self.black for x in self.graph.edges[e]}

    def check_invariants(self) -> None:
        """Anchor is the only isolated black edge; other black edges form disjoint paths."""
        g = self.graph
        cb = self.component_black()
        assert self.anchor in cb, "anchor is not black"
        sub = Graph(g.n, [g.edges[e] for e in cb])
        pieces = [c for c in components(sub) if len(c) > 1]
        lengths = []
        for piece in pieces:
            k = sum(1 for u, v in sub.edges if u in piece)
            degs = sorted(sub.degree(x) for x in piece)
            assert k == len(piece) - 1 and degs[-1] <= 2, f"black piece {piece} is not a path"
            if set(g.edges[self.anchor]) <= set(piece):
                assert k == 1, "anchor touches another black edge"
            else:
                lengths.append(k)
        assert 1 not in lengths, "an isolated black edge other than the anchor exists"
        assert len(set(lengths)) == len(lengths), "two black paths share a length"
        assert set(lengths) <= set(self.lengths), "black path length outside the sequence"

    def to_json(self) -> dict:
        return {
            "component": list(self.component),
            "anchor": self.anchor,
            "levels": [list(lv) for lv in self.levels.levels],
            "used_lengths": list(self.used_lengths),
            "paths": [{"length": p.length, "vertices": list(p.vertices),
                       "start_level": p.start_level, "placed": p.placed} for p in self.paths],
            "trace": self.trace,
        }


@dataclass(frozen=True)
class ComponentSplit:
    finite_components: list[list[int]]
    target_components: list[list[int]]


@dataclass
class ConstructionResult:
    colouring: Colouring
    black: frozenset[int]
    hub_black: frozenset[int]
    states: list[BreakerState]
    split: ComponentSplit
    verified: bool

    def report(self) -> dict:
        return {
            "colouring": list(self.colouring.values),
            "hub_black_edges": sorted(self.hub_black),
            "finite_components": self.split.finite_components,
            "target_components": self.split.target_components,
            "components": [s.to_json() for s in self.states],
            "verified": self.verified,
        }


def hubs_by_degree(g: Graph, threshold: int) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) >= threshold]


def hub_degree_encode(g: Graph, plan: HubPlan) -> set[int]:
    """Black edge set giving hub ``n`` exactly ``d_n`` black edges.

    Hubs are handled in order; step ``n`` never recolours an edge incident to
    an earlier hub and blackens the smallest-id remaining edges.
    """
    black: set[int] = set()
    for idx, (h, target) in enumerate(zip(plan.hubs, plan.d)):
        if not 0 <= h < g.n:
            raise BreakerFailure("infeasible_plan", f"hub {h} is not a vertex", "hubs", hub_index=idx)
        earlier = set(plan.hubs[:idx])
        inc = g.incident_edges(h)
        have = sum(1 for e in inc if e in black)
        # at most idx edges reach earlier hubs and d_n >= n, so have <= target
        assert have <= target
        free = [e for e in inc if e not in black and not (set(g.edges[e]) & earlier)]
        need = target - have
        if len(free) < need:
            raise BreakerFailure(
                "infeasible_plan",
                f"hub {h} (index {idx + 1}) needs {need} more black edges but only {len(free)} are free",
                "hubs", hub_index=idx + 1)
        black.update(free[:need])
    return black


def component_reduction(g: Graph, hubs: Sequence[int], threshold: int = 2,
                        predicate: Callable[[list[int]], bool] | None = None) -> ComponentSplit:
    """Components of ``g`` minus the hubs, split into untouched and targeted ones.

    By default components with more than ``threshold`` vertices are targeted.
    """
    hubset = set(hubs)
    sub, old = induced_subgraph(g, [v for v in range(g.n) if v not in hubset])
    comps = [[old[x] for x in c] for c in components(sub)]
    if predicate is None:
        predicate = lambda c: len(c) > threshold  # noqa: E731
    targets = [c for c in comps if predicate(c)]
    finite = [c for c in comps if not predicate(c)]
    return ComponentSplit(finite, targets)


def _fixing_colours(g: Graph, movable: set[int]) -> list[int]:
    # every vertex outside ``movable`` gets a private colour so it is fixed
    return [0 if v in movable else v + 1 for v in range(g.n)]


def _gamma(state: BreakerState):
    g = state.graph
    movable = set(state.component) - state.frozen
    ecol = [1 if e in state.black else 0 for e in range(g.m)]
    return automorphism_group(g, vcol=_fixing_colours(g, movable), ecol=ecol)


def _climbing_path(g: Graph, start: int, length: int, level: dict[int, int],
                   allowed: set[int]) -> tuple[int, ...] | None:
    """Lexicographically smallest path from ``start`` rising one level per edge."""
    if start not in allowed:
        return None
    path = [start]

    def extend() -> bool:
        if len(path) == length + 1:
            return True
        x = path[-1]
        for y in g.adjacency[x]:
            if y in allowed and level.get(y) == level[x] + 1:
                path.append(y)
                if extend():
                    return True
                path.pop()
        return False

    return tuple(path) if extend() else None


def _free_path(g: Graph, length: int, allowed: set[int], node_budget: int = 200_000):
    """Lexicographically smallest simple path with ``length`` edges inside ``allowed``."""
    path: list[int] = []
    on_path: set[int] = set()
    visits = 0

    def extend() -> bool:
        nonlocal visits
        visits += 1
        if visits > node_budget:
            return False
        if len(path) == length + 1:
            return True
        for y in g.adjacency[path[-1]]:
            if y in allowed and y not in on_path:
                path.append(y)
                on_path.add(y)
                if extend():
                    return True
                path.pop()
                on_path.discard(y)
        return False

    for s in sorted(allowed):
        path[:] = [s]
        on_path.clear()
        on_path.add(s)
        if extend():
            return tuple(path)
    return None


def _path_edges(g: Graph, verts: Sequence[int]) -> list[int]:
    return [g.edge_id(a, b) for a, b in zip(verts, verts[1:])]


def path_packing_break(g: Graph, component: Sequence[int], anchor: int,
                       lengths: Sequence[int], frozen: Sequence[int] = (),
                       black: set[int] | None = None, place_remaining: bool = True,
                       budget: int | None = None) -> BreakerState:
    """Colour black paths in ``component`` until no automorphism acting only there survives.

    ``black`` is the set of edges already black (for instance hub edges); it
    is copied, not mutated. Automorphisms considered fix every vertex outside
    the component and every ``frozen`` vertex.
    """
    comp = tuple(sorted(set(component)))
    cset = set(comp)
    lengths = tuple(int(x) for x in lengths)
    if not lengths or lengths[0] <= 1 or any(b <= a for a, b in zip(lengths, lengths[1:])):
        raise BreakerFailure("bad_input", "lengths must be strictly increasing with l_1 > 1", "paths")
    if not 0 <= anchor < g.m or not set(g.edges[anchor]) <= cset:
        raise BreakerFailure("bad_input", f"anchor {anchor} is not an edge of the component", "paths")
    sub, old = induced_subgraph(g, comp)
    if len(components(sub)) != 1:
        raise BreakerFailure("bad_input", "component is not connected", "paths")
    new_of = {x: i for i, x in enumerate(old)}
    a, b = g.edges[anchor]
    sub_levels = bfs_levels(sub, sub.edge_id(new_of[a], new_of[b]))
    levels = LevelDecomposition(anchor, tuple(tuple(old[x] for x in lv) for lv in sub_levels.levels))
    level_of = levels.level_of()

    state = BreakerState(g, comp, set(black or ()) | {anchor}, anchor, levels,
                         frozenset(frozen), lengths)
    budget = 10 * len(comp) if budget is None else budget
    iteration = 0
    while True:
        grp = _gamma(state)
        if grp.is_trivial():
            break
        if iteration >= budget:
            raise BreakerFailure("budget", f"iteration cap {budget} reached", "paths", state)
        if len(state.used_lengths) >= len(lengths):
            raise BreakerFailure("lengths_exhausted", "no unused path length left", "paths", state)
        elems = list(grp.elements())[1:]
        supports = [support(p) for p in elems]
        moved_any = set().union(*supports)
        i = next(j for j, lv in enumerate(levels.levels) if moved_any & set(lv))
        length = lengths[len(state.used_lengths)]
        blocked = state.black_vertices()

        chosen = None
        for v in sorted(moved_any & set(levels.levels[i])):
            for gamma, sup in zip(elems, supports):
                if v not in sup:
                    continue
                allowed = (sup & cset) - blocked
                if i == 0:
                    # v is an anchor endpoint, so start from its moved neighbours in level 1
                    starts = sorted(w for w in g.adjacency[v] if level_of.get(w) == 1 and w in sup)
                else:
                    starts = [v]
                for s in starts:
                    path = _climbing_path(g, s, length, level_of, allowed)
                    if path is not None:
                        chosen = (v, gamma, path)
                        break
                if chosen:
                    break
            if chosen:
                break
        if chosen is None:
            raise BreakerFailure(
                "no_path",
                f"no black-free path of length {length} climbing from level {i} "
                f"inside the support of a surviving automorphism",
                "paths", state, level=i, length=length, gamma_order=grp.order)
        v, gamma, path = chosen
        state.black.update(_path_edges(g, path))
        state.used_lengths.append(length)
        state.paths.append(BlackPath(length, path, level_of[path[0]]))
        state.trace.append({"step": iteration, "level": i, "vertex": v,
                            "gamma": list(gamma), "gamma_order": grp.order,
                            "path": list(path), "length": length})
        state.check_invariants()
        iteration += 1

    if place_remaining:
        for length in lengths[len(state.used_lengths):]:
            allowed = cset - state.black_vertices()
            path = _free_path(g, length, allowed)
            if path is None:
                continue
            added = _path_edges(g, path)
            state.black.update(added)
            if not _gamma(state).is_trivial():
                state.black.difference_update(added)
                continue
            state.used_lengths.append(length)
            state.paths.append(BlackPath(length, path, level_of[path[0]], placed=True))
            state.trace.append({"step": iteration, "placed": True, "path": list(path),
                                "length": length})
            state.check_invariants()
    return state


def default_anchor(g: Graph, component: Sequence[int]) -> int:
    cset = set(component)
    return next(e for e, (u, v) in enumerate(g.edges) if u in cset and v in cset)


def run_full_construction(g: Graph, plan: HubPlan, lengths: Sequence[int],
                          threshold: int = 2, anchors: dict[int, int] | None = None,
                          place_remaining: bool = True, budget: int | None = None,
                          verify: bool = True,
                          skip_when_distinguishing: bool = True) -> ConstructionResult:
    """Run every construction phase on ``g`` and verify the final colouring.

    The ``j``-th targeted component (0-based) draws its path lengths from
    ``lengths[j:]``. ``anchors`` optionally maps a component index to an edge id.
    With ``skip_when_distinguishing`` no component is touched when the hub
    colouring alone already distinguishes ``g``.
    """
    hub_black = hub_degree_encode(g, plan)
    split = component_reduction(g, plan.hubs, threshold)
    black = set(hub_black)
    states = []
    targets = split.target_components
    if skip_when_distinguishing:
        hub_col = Colouring(EDGE, tuple(1 if e in black else 0 for e in range(g.m)), 2)
        if is_distinguishing(g, hub_col)[0]:
            targets = []
    for j, comp in enumerate(targets):
        block = tuple(lengths[j:])
        anchor = (anchors or {}).get(j, default_anchor(g, comp))
        try:
            st = path_packing_break(g, comp, anchor, block, plan.hubs, black,
                                    place_remaining, budget)
        except BreakerFailure as exc:
            exc.details.setdefault("component_index", j)
            raise
        black = st.black
        states.append(st)

    col = Colouring(EDGE, tuple(1 if e in black else 0 for e in range(g.m)), 2)
    verified = False
    if verify:
        ok, witness = is_distinguishing(g, col)
        if not ok:
            moved = support(witness)
            finite = {v for c in split.finite_components for v in c}
            if moved <= finite:
                diag = ("surviving automorphism moves only vertices of untargeted components; "
                        "the instance has symmetries of small edge motion that the construction "
                        "cannot break")
            else:
                diag = "surviving automorphism moves hubs or targeted components"
            raise BreakerFailure("verification", diag, "verify", None,
                                 witness=list(witness), colouring=list(col.values))
        verified = True
    return ConstructionResult(col, frozenset(black), frozenset(hub_black), states, split, verified)


def diversity_check(g: Graph, params_a: dict, params_b: dict) -> bool:
    """True iff the colourings produced under the two parameter sets are non-isomorphic.

    Each params dict holds the keyword arguments of :func:`run_full_construction`
    (``plan``, ``lengths`` and optionally ``threshold``, ``anchors``).
    """
    ca = run_full_construction(g, **params_a).colouring
    cb = run_full_construction(g, **params_b).colouring
    return not are_colourings_isomorphic(g, ca, cb)
