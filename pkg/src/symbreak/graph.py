"""Finite simple undirected graphs with canonical edge indexing.

Edges are stored as ``(u, v)`` pairs with ``u < v`` sorted lexicographically;
the position of a pair in that list is its edge id.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised when an edge list or graph6 string cannot be parsed."""


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adjacency", "_edge_index", "duplicates_collapsed")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphFormatError("vertex count must be non-negative")
        pairs = set()
        dup = False
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphFormatError(f"loop edge at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in pairs:
                dup = True
            pairs.add(key)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(pairs))
        self._edge_index = {e: i for i, e in enumerate(self.edges)}
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.duplicates_collapsed = dup

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def edge_id(self, u: int, v: int) -> int:
        """Edge id of ``{u, v}``; raises ``KeyError`` for non-edges."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    def incident_edges(self, v: int) -> list[int]:
        return sorted(self.edge_id(v, w) for w in self.adjacency[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def parse_edge_list(text: str) -> Graph:
    """Parse the ``"n m"`` header format followed by ``m`` lines of ``"u v"``.

    Lines starting with ``#`` are comments. Duplicate edges are collapsed and
    flagged through ``Graph.duplicates_collapsed``.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer token in {raw!r}") from None
    if not rows:
        raise GraphFormatError("missing 'n m' header")
    (n, m), body = rows[0], rows[1:]
    if n < 0 or m < 0:
        raise GraphFormatError("negative header values")
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    return Graph(n, body)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string (``n < 63``)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= x <= 63 for x in data):
        raise GraphFormatError(f"invalid graph6 byte in {s!r}")
    n = data[0]
    if n == 63:
        raise GraphFormatError("long-form graph6 (n >= 63) is not supported")
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = data[1:]
    if len(body) != nbytes:
        raise GraphFormatError(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte, bit = divmod(k, 6)
            if body[byte] >> (5 - bit) & 1:
                edges.append((u, v))
            k += 1
    # padding bits must be zero, otherwise write(parse(s)) != s
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise GraphFormatError("non-zero padding bits")
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    if g.n >= 63:
        raise GraphFormatError("only short-form graph6 (n < 63) is supported")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph(text: str, fmt: str | None = None) -> list[Graph]:
    """Parse one edge-list graph or any number of graph6 lines.

    ``fmt`` is ``"g6"``, ``"edgelist"`` or ``None`` for auto-detection: input
    whose first meaningful line holds two integers is an edge list.
    """
    if fmt is None:
        first = next((ln.strip() for ln in text.splitlines()
                      if ln.strip() and not ln.strip().startswith("#")), "")
        parts = first.split()
        fmt = "edgelist" if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts) else "g6"
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    if fmt == "g6":
        return [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]
    raise ValueError(f"unknown format {fmt!r}")


def line_graph(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Line graph of ``g`` plus the map edge id -> line-graph vertex.

    Line-graph vertices are the edge ids themselves, so the map is the
    identity; it is returned to keep callers explicit about the bijection.
    """
    ledges = []
    for v in range(g.n):
        inc = g.incident_edges(v)
        for i, a in enumerate(inc):
            for b in inc[i + 1:]:
                ledges.append((a, b))
    return Graph(g.m, ledges), {e: e for e in range(g.m)}


@dataclass(frozen=True)
class LevelDecomposition:
    anchor: int
    levels: tuple[tuple[int, ...], ...]

    def level_of(self) -> dict[int, int]:
        return {v: i for i, lvl in enumerate(self.levels) for v in lvl}


def bfs_levels(g: Graph, anchor: int) -> LevelDecomposition:
    """Distance levels from the anchor edge's endpoints within its component."""
    u, v = g.edges[anchor]
    dist = {u: 0, v: 0}
    queue = deque([u, v])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    levels: list[list[int]] = [[] for _ in range(max(dist.values()) + 1)]
    for x, d in dist.items():
        levels[d].append(x)
    return LevelDecomposition(anchor, tuple(tuple(sorted(lv)) for lv in levels))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vs``; the returned list maps new id -> old id."""
    old = sorted(set(vs))
    new_of = {x: i for i, x in enumerate(old)}
    edges = [(new_of[u], new_of[v]) for u, v in g.edges if u in new_of and v in new_of]
    return Graph(len(old), edges), old


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph with vertex ``order[i]`` renamed to ``i``."""
    pos = {v: i for i, v in enumerate(order)}
    return Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges])


# Small named constructors used by tests, the CLI and the breaker families.

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def spider_graph(leg_lengths: Sequence[int]) -> tuple[Graph, list[list[int]]]:
    """Centre 0 with paths of the given lengths (edge counts) attached.

    Returns the graph and the vertex lists of the legs, nearest vertex first.
    """
    edges = []
    legs = []
    nxt = 1
    for length in leg_lengths:
        leg = list(range(nxt, nxt + length))
        nxt += length
        edges.append((0, leg[0]))
        edges.extend(zip(leg, leg[1:]))
        legs.append(leg)
    return Graph(nxt, edges), legs
