"""Separation predicates and minimum separators constrained to a candidate set.

The constrained minimum separator is computed by unit-capacity maximum flow
with vertex splitting: each candidate vertex gets capacity one, every other
vertex is uncuttable, and the reported cut is the canonical source-side
minimum cut, which makes the output deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import (
    Graph,
    GraphError,
    PreconditionError,
    TheoremCounterexample,
    _check_vertex_set,
    components_after_removal,
    is_connected,
    iter_bits,
    mask_of,
    neighborhood_at,
)
from .chordality import is_chordal, is_clique


@dataclass(frozen=True)
class ConstrainedSeparator:
    """A minimum-cardinality cut inside N(u, t) separating u from ``others``.

    ``side_u`` is the component of G - cut containing u; ``side_rest`` is the
    union of components meeting ``others``.
    """

    u: int
    others: frozenset[int]
    t: int
    cut: frozenset[int]
    side_u: frozenset[int]
    side_rest: frozenset[int]


def is_separator(g: Graph, S: Iterable[int], T: Iterable[int]) -> bool:
    """True iff removing S leaves two vertices of T in different components.

    With T = V(g) this is the ordinary separator predicate.
    """
    S = _check_vertex_set(g, S)
    T = _check_vertex_set(g, T, "T")
    rem = T - S
    if not rem:
        raise GraphError("T is contained in S; separation is undefined")
    if len(rem) < 2:
        return False
    comps = components_after_removal(g, S)
    hit = [c for c in comps if c & rem]
    return len(hit) > 1


_INF = 1 << 30


def _min_candidate_cut(g, u, others, candidates):
    """Minimum subset of ``candidates`` separating u from others, or None.

    Source-side minimum cut of the vertex-split unit-capacity flow network
    (node 2v enters vertex v, node 2v+1 leaves it); None when even removing
    every candidate leaves some path.  Compact residual arrays keep this fast
    enough for tight enumeration loops.
    """
    n = g.n
    sink = 2 * n
    total = 2 * n + 1
    head: list[list[int]] = [[] for _ in range(total)]
    cap: list[list[int]] = [[] for _ in range(total)]
    rev: list[list[int]] = [[] for _ in range(total)]

    def add_arc(a, b, c):
        rev[a].append(len(head[b]))
        head[a].append(b)
        cap[a].append(c)
        rev[b].append(len(head[a]) - 1)
        head[b].append(a)
        cap[b].append(0)

    for v in range(n):
        add_arc(2 * v, 2 * v + 1, 1 if v in candidates else _INF)
    for a, b in g.edges():
        add_arc(2 * a + 1, 2 * b, _INF)
        add_arc(2 * b + 1, 2 * a, _INF)
    for w in sorted(others):
        add_arc(2 * w, sink, _INF)

    source = 2 * u + 1
    flow = 0
    parent_node = [0] * total
    parent_arc = [0] * total
    while flow <= len(candidates):
        seen = [False] * total
        seen[source] = True
        q = deque([source])
        found = False
        while q:
            x = q.popleft()
            if x == sink:
                found = True
                break
            hx, cx = head[x], cap[x]
            for i in range(len(hx)):
                y = hx[i]
                if not seen[y] and cx[i] > 0:
                    seen[y] = True
                    parent_node[y] = x
                    parent_arc[y] = i
                    q.append(y)
        if not found:
            break
        push = _INF
        y = sink
        while y != source:
            x, i = parent_node[y], parent_arc[y]
            push = min(push, cap[x][i])
            y = x
        y = sink
        while y != source:
            x, i = parent_node[y], parent_arc[y]
            cap[x][i] -= push
            cap[y][rev[x][i]] += push
            y = x
        flow += push
    if flow > len(candidates):
        return None

    reach = [False] * total
    reach[source] = True
    q = deque([source])
    while q:
        x = q.popleft()
        hx, cx = head[x], cap[x]
        for i in range(len(hx)):
            y = hx[i]
            if cx[i] > 0 and not reach[y]:
                reach[y] = True
                q.append(y)
    cut = frozenset(v for v in candidates if reach[2 * v] and not reach[2 * v + 1])
    if len(cut) != flow:
        raise AssertionError("source-side cut size does not match flow value")
    return cut


def min_separator_within(
    g: Graph, u: int, others: Iterable[int], t: int
) -> ConstrainedSeparator | None:
    """Minimum-cardinality X inside N(u, t) separating u from ``others``.

    Requires every vertex of ``others`` to be farther than t from u (no
    subset of N(u, t) could separate otherwise); that violation raises,
    distinctly from the None return reserved for the no-cut case.
    """
    others = _check_vertex_set(g, others, "others")
    if not (0 <= u < g.n):
        raise GraphError(f"vertex {u} out of range for n={g.n}")
    if not others:
        raise GraphError("others must be nonempty")
    if u in others:
        raise GraphError("u cannot belong to others")
    if t < 1:
        raise GraphError(f"stretch parameter t={t} must be positive")
    key = ("cut", u, others, t)
    if key in g._memo:
        return g._memo[key]
    if not is_connected(g):
        raise PreconditionError("min_separator_within needs a connected graph")
    dist = g.apsp()[u]
    for v in others:
        if dist[v] is not None and dist[v] <= t:
            raise PreconditionError(
                f"d({u},{v})={dist[v]} <= t={t}; no subset of N(u,t) can separate"
            )
    candidates = neighborhood_at(g, {u}, t)
    cut = _min_candidate_cut(g, u, others, candidates) if candidates else None
    if cut is None:
        g._memo[key] = None
        return None
    comps = components_after_removal(g, cut)
    side_u = next(c for c in comps if u in c)
    side_rest = frozenset().union(*(c for c in comps if c & others))
    if side_u & others:
        raise AssertionError("flow cut failed to separate u from others")
    sep = ConstrainedSeparator(u, others, t, cut, side_u, side_rest)
    g._memo[key] = sep
    return sep


def minimal_separators_chordal(g: Graph) -> list[frozenset[int]]:
    """All inclusion-minimal separators of a connected chordal graph.

    Candidates are the neighborhoods of components of G - N[a] over all a;
    every survivor is checked to be a clique rather than assumed to be one.
    """
    if not is_connected(g):
        raise PreconditionError("minimal separators need a connected graph")
    if not is_chordal(g):
        raise PreconditionError("minimal_separators_chordal needs a chordal input")
    candidates: set[frozenset[int]] = set()
    for a in range(g.n):
        closed = g.adj_mask(a) | (1 << a)
        for comp in components_after_removal(g, set(iter_bits(closed))):
            boundary = 0
            for v in comp:
                boundary |= g.adj_mask(v)
            boundary &= ~mask_of(comp)
            if boundary:
                candidates.add(frozenset(iter_bits(boundary)))
    minimal = [
        S
        for S in candidates
        if not any(other < S for other in candidates)
    ]
    for S in minimal:
        if not is_clique(g, S):
            raise TheoremCounterexample(
                "minimal separator of a chordal graph is not a clique",
                g,
                {"separator": sorted(S)},
            )
    return sorted(minimal, key=lambda S: (len(S), sorted(S)))
