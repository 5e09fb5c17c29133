"""Chordality recognition, longest-induced-cycle index, and clique machinery.

A graph is chordal exactly when maximum-cardinality search yields a perfect
elimination ordering.  The chordality index is 3 for chordal graphs and the
length of the longest induced cycle otherwise; induced cycles are searched
over induced paths, cutting any extension that creates a chord.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, TheoremCounterexample, iter_bits, mask_of


@dataclass(frozen=True)
class ChordalityReport:
    is_chordal: bool
    k_index: int
    witness_cycle: tuple[int, ...] | None
    peo: tuple[int, ...] | None


def mcs_order(g: Graph) -> tuple[int, ...]:
    """Maximum-cardinality search order (reversed, this is a PEO iff chordal)."""
    n = g.n
    weight = [0] * n
    numbered = 0
    order = []
    for _ in range(n):
        best = -1
        best_w = -1
        for v in range(n):
            if not numbered & (1 << v) and weight[v] > best_w:
                best, best_w = v, weight[v]
        order.append(best)
        numbered |= 1 << best
        for u in iter_bits(g.adj_mask(best) & ~numbered):
            weight[u] += 1
    return tuple(order)


def is_perfect_elimination_ordering(g: Graph, order: Iterable[int]) -> bool:
    """Check the elimination order: later neighbors of v minus its first one
    must be adjacent to that first one."""
    order = tuple(order)
    pos = {v: i for i, v in enumerate(order)}
    if sorted(order) != list(range(g.n)):
        raise GraphError("elimination order must be a permutation of the vertices")
    later = [0] * g.n
    for i, v in enumerate(order):
        m = 0
        for u in iter_bits(g.adj_mask(v)):
            if pos[u] > i:
                m |= 1 << u
        later[v] = m
    for v in order:
        m = later[v]
        if not m:
            continue
        first = min(iter_bits(m), key=lambda u: pos[u])
        rest = m & ~(1 << first)
        if rest & ~g.adj_mask(first):
            return False
    return True


def is_chordal(g: Graph) -> bool:
    cached = g._memo.get("chordal")
    if cached is None:
        order = mcs_order(g)
        cached = is_perfect_elimination_ordering(g, tuple(reversed(order)))
        g._memo["chordal"] = cached
    return cached


def _longest_induced_cycle(g: Graph) -> tuple[int, tuple[int, ...] | None]:
    """Length and witness of a longest induced cycle; (0, None) if acyclic.

    Searches induced paths anchored at their minimum vertex; an extension
    adjacent to any non-endpoint path vertex would create a chord and is cut.
    """
    n = g.n
    best_len = 0
    best_cycle: tuple[int, ...] | None = None

    for a in range(n):
        above = ((1 << n) - 1) & ~((1 << (a + 1)) - 1)
        # path = [a, v1, ..., vk] with a the minimum vertex; interior vertices
        # v1..v_{k-1} are non-adjacent to a and pairwise non-consecutive
        # non-adjacent.  blocked = closed neighborhoods of the interior plus a.
        stack = [([a, b], 1 << a) for b in iter_bits(g.adj_mask(a) & above)]
        while stack:
            path, blocked = stack.pop()
            tail = path[-1]
            closes = bool(g.adj_mask(tail) & (1 << a))
            if closes and len(path) >= 3 and path[1] < tail:
                L = len(path)
                seq = tuple(path)
                alt = (seq[0],) + tuple(reversed(seq[1:]))
                cand = min(seq, alt)
                if L > best_len or (L == best_len and (best_cycle is None or cand < best_cycle)):
                    best_len = L
                    best_cycle = cand
            if closes and len(path) >= 3:
                continue  # extending would leave a chord to a
            for w in iter_bits(g.adj_mask(tail) & above & ~blocked):
                stack.append((path + [w], blocked | g.adj_mask(tail) | (1 << tail)))
    if best_len < 3:
        return 0, None
    return best_len, best_cycle


def chordality_index(g: Graph) -> ChordalityReport:
    """Smallest k >= 3 such that g has no induced cycle longer than k."""
    order = mcs_order(g)
    elim = tuple(reversed(order))
    if is_perfect_elimination_ordering(g, elim):
        return ChordalityReport(True, 3, None, elim)
    length, witness = _longest_induced_cycle(g)
    if length < 4:
        raise TheoremCounterexample(
            "MCS reports non-chordal but no induced cycle of length >= 4 exists", g
        )
    return ChordalityReport(False, length, witness, None)


def simplicial_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose open neighborhood is a clique."""
    out = []
    for v in range(g.n):
        nb = g.adj_mask(v)
        if all(nb & ~g.adj_mask(u) & ~(1 << u) == 0 for u in iter_bits(nb)):
            out.append(v)
    return frozenset(out)


def is_clique(g: Graph, S: Iterable[int]) -> bool:
    """True iff all pairs in S are adjacent; the empty set and singletons count."""
    S = list(frozenset(S))
    for v in S:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    m = mask_of(S)
    return all(m & ~g.adj_mask(v) == (1 << v) for v in S)


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques via Bron-Kerbosch with pivoting, sorted for determinism."""
    out: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(iter_bits(pivot_pool), key=lambda u: (g.adj_mask(u) & p).bit_count())
        for v in iter_bits(p & ~g.adj_mask(pivot)):
            expand(r | (1 << v), p & g.adj_mask(v), x & g.adj_mask(v))
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, g.vertex_mask(), 0)
    cliques = [frozenset(iter_bits(m)) for m in out]
    return sorted(cliques, key=lambda c: sorted(c))
