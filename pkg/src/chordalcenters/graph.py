"""Simple undirected graphs on dense 0-based vertex indices.

Adjacency is kept as per-vertex bitmasks (Python ints), which gives
constant-time membership and cheap set algebra at desk scale.  Graphs are
immutable after construction and safe to share between workers; every
operation in this module is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


class GraphError(ValueError):
    """Malformed graph input or operation argument."""


class PreconditionError(GraphError):
    """A declared operation precondition does not hold for this input."""


class TheoremCounterexample(RuntimeError):
    """A verified claim failed on an input where it is asserted to hold.

    Carries the offending graph and a detail payload so callers can render
    a reproducible report instead of a bare traceback.
    """

    def __init__(self, message: str, graph: "Graph" | None = None, details: dict | None = None):
        super().__init__(message)
        self.graph = graph
        self.details = details or {}


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


class Graph:
    """Immutable simple undirected graph with vertices ``0..n-1``."""

    __slots__ = ("n", "_masks", "_nbrs", "_apsp", "_memo")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self._masks = tuple(masks)
        self._nbrs: tuple[frozenset[int], ...] | None = None
        self._apsp: tuple[tuple[int | None, ...], ...] | None = None
        self._memo: dict = {}

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        g = cls.__new__(cls)
        masks = tuple(masks)
        g.n = len(masks)
        g._masks = masks
        g._nbrs = None
        g._apsp = None
        g._memo = {}
        for v, m in enumerate(masks):
            if m >> g.n:
                raise GraphError(f"adjacency mask of vertex {v} exceeds n={g.n}")
            if m & (1 << v):
                raise GraphError(f"self-loop at vertex {v}")
        for v in range(g.n):
            for u in iter_bits(masks[v]):
                if not masks[u] & (1 << v):
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        return g

    # -- basic accessors ---------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def adj_mask(self, v: int) -> int:
        return self._masks[v]

    def neighbors(self, v: int) -> frozenset[int]:
        if self._nbrs is None:
            self._nbrs = tuple(set_of(m) for m in self._masks)
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return self._masks[v].bit_count()

    def max_degree(self) -> int:
        return max(m.bit_count() for m in self._masks)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] & (1 << v))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self._masks[u] >> (u + 1)
            for off in iter_bits(rest):
                yield (u, u + 1 + off)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._masks) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"

    # -- cached all-pairs distances ---------------------------------------

    def apsp(self) -> tuple[tuple[int | None, ...], ...]:
        """All-pairs shortest-path lengths (row per source), memoised."""
        if self._apsp is None:
            self._apsp = tuple(
                tuple(_bfs_masks(self._masks, self.n, 1 << s)[0]) for s in range(self.n)
            )
        return self._apsp

    def distance(self, u: int, v: int) -> int | None:
        return self.apsp()[u][v]


def _bfs_masks(masks, n, src_mask):
    """Multi-source BFS over adjacency masks.

    Returns (dist list with None for unreachable, reached mask).
    """
    dist: list[int | None] = [None] * n
    for s in iter_bits(src_mask):
        dist[s] = 0
    seen = src_mask
    frontier = src_mask
    d = 0
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= masks[v]
        nxt &= ~seen
        d += 1
        for v in iter_bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist, seen


def _component_mask(masks, start, alive_mask):
    """Mask of the connected component of ``start`` inside ``alive_mask``."""
    comp = (1 << start) & alive_mask
    frontier = comp
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= masks[v]
        nxt &= alive_mask & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def _check_vertex_set(g: Graph, S: Iterable[int], name: str = "S") -> frozenset[int]:
    S = frozenset(S)
    for v in S:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} in {name} out of range for n={g.n}")
    return S


@dataclass(frozen=True)
class DistanceTable:
    """Distances from a source set; ``None`` marks unreachable vertices."""

    sources: frozenset[int]
    dist: tuple[int | None, ...]

    def __getitem__(self, v: int) -> int | None:
        return self.dist[v]

    def reached(self) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.dist) if d is not None)


class InducedSubgraph(NamedTuple):
    """An induced subgraph together with the relabeling used to build it.

    ``vertices[i]`` is the parent-graph vertex that became index ``i``.
    """

    graph: Graph
    vertices: tuple[int, ...]

    def to_parent(self, i: int) -> int:
        return self.vertices[i]

    def to_sub(self, v: int) -> int:
        return self.vertices.index(v)

    def map_back(self, sub_vertices: Iterable[int]) -> frozenset[int]:
        return frozenset(self.vertices[i] for i in sub_vertices)


def bfs_from(g: Graph, S: Iterable[int]) -> DistanceTable:
    """Shortest-path distances from the vertex set ``S``."""
    S = _check_vertex_set(g, S)
    if not S:
        raise GraphError("BFS source set must be nonempty")
    dist, _ = _bfs_masks(g._masks, g.n, mask_of(S))
    return DistanceTable(S, tuple(dist))


def set_distance(g: Graph, X: Iterable[int], S: Iterable[int]) -> int | None:
    """min over x in X, s in S of d(x, s); None if no pair is connected."""
    X = _check_vertex_set(g, X, "X")
    table = bfs_from(g, S)
    best = None
    for x in X:
        d = table[x]
        if d is not None and (best is None or d < best):
            best = d
    return best


def _dist_row(g: Graph, S: frozenset[int]):
    if len(S) == 1:
        return g.apsp()[next(iter(S))]
    return bfs_from(g, S).dist


def neighborhood_at(g: Graph, S: Iterable[int], t: int) -> frozenset[int]:
    """Vertices at distance exactly ``t`` from ``S``; t=0 gives S itself."""
    if t < 0:
        raise GraphError(f"distance level t={t} must be non-negative")
    S = _check_vertex_set(g, S)
    if not S:
        raise GraphError("neighborhood source set must be nonempty")
    dist = _dist_row(g, S)
    return frozenset(v for v, d in enumerate(dist) if d == t)


def neighborhood_within(g: Graph, S: Iterable[int], t: int) -> frozenset[int]:
    """Vertices at distance at most ``t`` from ``S``."""
    if t < 0:
        raise GraphError(f"distance level t={t} must be non-negative")
    S = _check_vertex_set(g, S)
    if not S:
        raise GraphError("neighborhood source set must be nonempty")
    dist = _dist_row(g, S)
    return frozenset(v for v, d in enumerate(dist) if d is not None and d <= t)


def components_after_removal(g: Graph, X: Iterable[int]) -> tuple[frozenset[int], ...]:
    """Connected components of the subgraph induced on V - X, ordered by minimum vertex."""
    X = _check_vertex_set(g, X, "X")
    alive = g.vertex_mask() & ~mask_of(X)
    comps = []
    while alive:
        start = (alive & -alive).bit_length() - 1
        comp = _component_mask(g._masks, start, alive)
        comps.append(set_of(comp))
        alive &= ~comp
    return tuple(comps)


def induced_subgraph(g: Graph, S: Iterable[int]) -> InducedSubgraph:
    """Subgraph induced on ``S`` plus the vertex relabeling used."""
    S = _check_vertex_set(g, S)
    if not S:
        raise GraphError("cannot induce on an empty vertex set")
    order = tuple(sorted(S))
    index = {v: i for i, v in enumerate(order)}
    sub_masks = [0] * len(order)
    smask = mask_of(order)
    for i, v in enumerate(order):
        for u in iter_bits(g._masks[v] & smask):
            sub_masks[i] |= 1 << index[u]
    return InducedSubgraph(Graph.from_masks(sub_masks), order)


def is_connected(g: Graph) -> bool:
    cached = g._memo.get("conn")
    if cached is None:
        _, seen = _bfs_masks(g._masks, g.n, 1)
        cached = seen == g.vertex_mask()
        g._memo["conn"] = cached
    return cached


def is_biconnected(g: Graph) -> bool:
    """True iff g is connected, has >= 3 vertices, and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    return all(len(components_after_removal(g, {v})) == 1 for v in range(g.n))
