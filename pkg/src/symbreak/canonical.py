"""Derived edge colourings ``c'(uv) = (c(u) + c(v)) mod k`` and the ``k + 1`` patch.

The checkers here test the stabiliser of ``c'`` against a distinguishing
vertex colouring ``c``. The patch recolours one or two edges with the new
colour ``k`` and verifies that the result is distinguishing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distinguishing import Colouring, is_distinguishing
from .graph import Graph, components, is_connected
from .perm import Permutation
from .search import automorphism_group


class PreconditionError(ValueError):
    """Input colouring or graph does not meet the stated preconditions."""


class PatchVerificationError(AssertionError):
    """The patched colouring failed verification; this indicates a bug."""


@dataclass(frozen=True)
class CanonicalColouring:
    base: Colouring
    derived: Colouring


@dataclass(frozen=True)
class FixedPointFreeVerdict:
    holds: bool
    checked: int
    violation: tuple[Permutation, int] | None


@dataclass(frozen=True)
class StabiliserVerdict:
    holds: bool
    stabiliser_order: int
    k: int


@dataclass(frozen=True)
class PatchResult:
    colouring: Colouring
    branch: int
    recoloured: tuple[int, ...]
    derived: Colouring


def canonical_edge_colouring(g: Graph, c: Colouring) -> CanonicalColouring:
    if c.kind != "vertex":
        raise ValueError("canonical edge colouring needs a vertex colouring")
    c.check_for(g)
    vals = c.values
    derived = tuple((vals[u] + vals[v]) % c.k for u, v in g.edges)
    return CanonicalColouring(c, Colouring("edge", derived, c.k))


def _require_distinguishing_connected(g: Graph, c: Colouring) -> None:
    if not is_connected(g):
        raise PreconditionError("graph must be connected")
    ok, _ = is_distinguishing(g, c)
    if not ok:
        raise PreconditionError("vertex colouring is not distinguishing")


def derived_stabiliser(g: Graph, c: Colouring, cutoff: int | None = None):
    """Automorphisms preserving the canonical edge colouring of ``c``."""
    cc = canonical_edge_colouring(g, c)
    return automorphism_group(g, ecol=cc.derived.values, cutoff=cutoff)


def check_lemma_fixed_point_free(g: Graph, c: Colouring,
                                 cutoff: int | None = None) -> FixedPointFreeVerdict:
    """Every nontrivial preserver of ``c'`` must change the colour of every vertex."""
    _require_distinguishing_connected(g, c)
    checked = 0
    for gamma in list(derived_stabiliser(g, c, cutoff).elements())[1:]:
        checked += 1
        for v in range(g.n):
            if c.values[gamma[v]] == c.values[v]:
                return FixedPointFreeVerdict(False, checked, (gamma, v))
    return FixedPointFreeVerdict(True, checked, None)


def colour_agreement_propagates(g: Graph, c: Colouring, gamma: Permutation, v0: int) -> bool:
    """If ``gamma`` preserves ``c'`` and keeps the colour of ``v0``, it keeps every colour.

    Checks the implication on one sample; vacuously true when the premise fails.
    """
    cc = canonical_edge_colouring(g, c)
    d = cc.derived.values
    if any(d[g.edge_id(gamma[u], gamma[v])] != d[e] for e, (u, v) in enumerate(g.edges)):
        return True
    if c.values[gamma[v0]] != c.values[v0]:
        return True
    comp = next(cmp for cmp in components(g) if v0 in cmp)
    return all(c.values[gamma[v]] == c.values[v] for v in comp)


def check_stabiliser_bound(g: Graph, c: Colouring, cutoff: int | None = None) -> StabiliserVerdict:
    _require_distinguishing_connected(g, c)
    order = derived_stabiliser(g, c, cutoff).order
    return StabiliserVerdict(order <= c.k, order, c.k)


def explain_patch(g: Graph, c: Colouring, verify: bool = True) -> PatchResult:
    if g.m < 2:
        raise PreconditionError("patching needs at least two edges")
    _require_distinguishing_connected(g, c)
    derived = canonical_edge_colouring(g, c).derived
    vals = list(derived.values)
    fresh = c.k

    pair = None
    for e in range(g.m):
        u, v = g.edges[e]
        for f in sorted(set(g.incident_edges(u) + g.incident_edges(v))):
            if f > e and vals[f] == vals[e]:
                pair = (e, f)
                break
        if pair:
            break

    if pair is not None:
        branch = 1
        for x in pair:
            vals[x] = fresh
        recoloured = pair
    else:
        branch = 2
        # connected with >= 2 edges: edge 0 has an endpoint of degree >= 2
        e = 0
        u, v = g.edges[e]
        f = min(x for x in g.incident_edges(u) + g.incident_edges(v) if x != e)
        vals[f] = vals[e]
        vals[e] = fresh
        recoloured = (e, f)

    out = Colouring("edge", tuple(vals), c.k + 1)
    if verify:
        ok, witness = is_distinguishing(g, out)
        if not ok:
            raise PatchVerificationError(f"patched colouring preserved by {witness}")
    return PatchResult(out, branch, recoloured, derived)


def patch_edge_colouring(g: Graph, c: Colouring) -> Colouring:
    """Distinguishing edge colouring with at most ``c.k + 1`` colours."""
    return explain_patch(g, c).colouring
