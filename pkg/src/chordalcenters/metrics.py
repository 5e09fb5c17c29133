"""Eccentricity, radius, diameter, centers, iterated centers, and domination."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import (
    Graph,
    GraphError,
    PreconditionError,
    _check_vertex_set,
    induced_subgraph,
    is_connected,
    mask_of,
)


@dataclass(frozen=True)
class MetricSummary:
    """Exact metric data for a connected graph.

    ``iterated_centers`` is the chain V = C^0 >= C^1 >= ... recorded up to its
    fixed point (the last entry maps to itself under taking the center of the
    induced subgraph).  If an intermediate induced center is disconnected the
    chain simply stops there; for chordal graphs this never happens.
    """

    ecc: tuple[int, ...]
    radius: int
    diameter: int
    center: frozenset[int]
    iterated_centers: tuple[frozenset[int], ...]

    def iterated_center(self, i: int) -> frozenset[int]:
        """C^i, reading past the end of the chain as the fixed point."""
        chain = self.iterated_centers
        return chain[min(i, len(chain) - 1)]

    @property
    def self_centered(self) -> bool:
        return self.radius == self.diameter


def eccentricities(g: Graph) -> tuple[int, ...]:
    cached = g._memo.get("ecc")
    if cached is not None:
        return cached
    if not is_connected(g):
        raise PreconditionError("eccentricities need a connected graph")
    rows = g.apsp()
    ecc = tuple(max(row) for row in rows)  # type: ignore[type-var]
    g._memo["ecc"] = ecc
    return ecc


def metric_summary(g: Graph) -> MetricSummary:
    """Radius, diameter, center, and the iterated-center chain of g.

    Iterated centers recompute distances inside each induced subgraph rather
    than inheriting them from g.  The summary is memoised on the graph.
    """
    cached = g._memo.get("metrics")
    if cached is not None:
        return cached
    ecc = eccentricities(g)
    radius = min(ecc)
    diameter = max(ecc)
    center = frozenset(v for v, e in enumerate(ecc) if e == radius)

    chain = [frozenset(range(g.n))]
    current = chain[0]
    cur_center = center
    while cur_center != current:
        chain.append(cur_center)
        current = cur_center
        sub = induced_subgraph(g, current)
        if not is_connected(sub.graph):
            break
        sub_ecc = eccentricities(sub.graph)
        sub_r = min(sub_ecc)
        cur_center = frozenset(
            sub.vertices[i] for i, e in enumerate(sub_ecc) if e == sub_r
        )
    summary = MetricSummary(ecc, radius, diameter, center, tuple(chain))
    g._memo["metrics"] = summary
    return summary


def is_self_centered(g: Graph) -> bool:
    """True iff every vertex is central (radius equals diameter)."""
    ecc = eccentricities(g)
    return min(ecc) == max(ecc)


def is_diametrical(g: Graph, T: Iterable[int]) -> bool:
    """True iff every pair of distinct vertices of T is at distance Diam(g)."""
    T = _check_vertex_set(g, T, "T")
    if len(T) < 2:
        raise GraphError("a diametrical set needs at least two vertices")
    if not is_connected(g):
        raise PreconditionError("diametrical sets need a connected graph")
    diameter = max(eccentricities(g))
    rows = g.apsp()
    members = sorted(T)
    return all(
        rows[u][v] == diameter for i, u in enumerate(members) for v in members[i + 1 :]
    )


def dominates(g: Graph, S: Iterable[int]) -> bool:
    """True iff N[S] covers every vertex of g."""
    S = _check_vertex_set(g, S)
    covered = mask_of(S)
    for v in S:
        covered |= g.adj_mask(v)
    return covered == g.vertex_mask()


def diametrical_pairs(g: Graph) -> list[tuple[int, int]]:
    """All vertex pairs realising the diameter, in lexicographic order."""
    ecc = eccentricities(g)
    diameter = max(ecc)
    rows = g.apsp()
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if rows[u][v] == diameter
    ]


def far_vertices(g: Graph, T: Iterable[int]) -> list[int]:
    """Vertices w with d(w, u) = Diam(g) for every u in T."""
    T = _check_vertex_set(g, T, "T")
    diameter = max(eccentricities(g))
    rows = g.apsp()
    return [
        w
        for w in range(g.n)
        if w not in T and all(rows[w][u] == diameter for u in T)
    ]
