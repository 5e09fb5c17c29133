"""Brute-force oracles and exhaustive small-graph enumeration.

Everything here is written in deliberately plain dictionary-and-set style,
independent of the optimised bitmask code paths it is used to validate.
Budgets are hard errors: these routines are exact or they refuse to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .graph import Graph, GraphError


def _adj_sets(g: Graph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _reachable(adj, start, removed) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in removed and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _separates(adj, S: set[int], u: int, targets: set[int]) -> bool:
    if u in S:
        raise GraphError("u cannot be inside the separator candidate")
    reach = _reachable(adj, u, S)
    return not (reach & targets)


def floyd_apsp(g: Graph) -> list[list[int | None]]:
    """All-pairs shortest paths by Floyd-Warshall; None means unreachable."""
    n = g.n
    dist: list[list[int | None]] = [[None] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
    for u, v in g.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik is None:
                continue
            di = dist[i]
            for j in range(n):
                dkj = dk[j]
                if dkj is None:
                    continue
                alt = dik + dkj
                if di[j] is None or alt < di[j]:
                    di[j] = alt
    return dist


# -- enumeration ------------------------------------------------------------

_LABELED_BUDGET = 8
_CANONICAL_BUDGET = 9

_FILTERS = ("all", "connected", "connected-chordal")


def _edge_slots(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int) -> Graph:
    slots = _edge_slots(n)
    return Graph(n, (slots[b] for b in range(mask.bit_length()) if mask >> b & 1))


def _connected(adj, n) -> bool:
    return len(_reachable(adj, 0, set())) == n


def _chordal_by_subsets(adj, n) -> bool:
    return _longest_induced_cycle_subsets(adj, n)[0] < 4


def _longest_induced_cycle_subsets(adj, n) -> tuple[int, tuple[int, ...] | None]:
    """Longest induced cycle by subset enumeration: a vertex set induces a
    cycle iff the induced subgraph is connected and 2-regular."""
    best = 0
    witness = None
    for size in range(3, n + 1):
        for subset in combinations(range(n), size):
            sset = set(subset)
            degs = [len(adj[v] & sset) for v in subset]
            if any(d != 2 for d in degs):
                continue
            removed = set(range(n)) - sset
            if len(_reachable(adj, subset[0], removed)) != size:
                continue
            if size > best:
                best = size
                witness = _cycle_order(adj, subset)
    return best, witness


def _cycle_order(adj, subset) -> tuple[int, ...]:
    """Walk a 2-regular vertex set into cycle order, minimum vertex first."""
    sset = set(subset)
    start = min(subset)
    order = [start]
    prev = None
    while len(order) < len(subset):
        cur = order[-1]
        step = min(x for x in adj[cur] & sset if x != prev)
        order.append(step)
        prev = cur
    return tuple(order)


def enumerate_graphs(n: int, filter: str = "all", dedup: str = "none") -> Iterator[Graph]:
    """Stream every labeled graph on n vertices (edge masks ascending).

    filter: all | connected | connected-chordal.
    dedup:  none | canonical (one representative per isomorphism class,
            the first graph in stream order of each class).
    """
    if filter not in _FILTERS:
        raise GraphError(f"unknown filter {filter!r}; expected one of {_FILTERS}")
    if dedup not in ("none", "canonical"):
        raise GraphError(f"unknown dedup {dedup!r}")
    budget = _CANONICAL_BUDGET if dedup == "canonical" else _LABELED_BUDGET
    if not 1 <= n <= budget:
        raise GraphError(f"n={n} out of enumeration budget (max {budget})")
    slots = _edge_slots(n)
    seen: set[int] = set()
    for mask in range(1 << len(slots)):
        g = Graph(n, (slots[b] for b in range(len(slots)) if mask >> b & 1))
        adj = _adj_sets(g)
        if filter in ("connected", "connected-chordal") and not _connected(adj, n):
            continue
        if filter == "connected-chordal" and not _chordal_by_subsets(adj, n):
            continue
        if dedup == "canonical":
            canon = canonical_form(g)
            if canon in seen:
                continue
            seen.add(canon)
        yield g


def canonical_form(g: Graph) -> int:
    """Minimum edge mask over all vertex permutations (exhaustive)."""
    n = g.n
    slots = _edge_slots(n)
    slot_index = {frozenset(e): i for i, e in enumerate(slots)}
    edges = [frozenset(e) for e in g.edges()]
    best = None
    for perm in permutations(range(n)):
        m = 0
        for e in edges:
            a, b = e
            m |= 1 << slot_index[frozenset((perm[a], perm[b]))]
        if best is None or m < best:
            best = m
    return best if best is not None else 0


# -- brute-force counterparts ------------------------------------------------

def brute_min_separator(g: Graph, u: int, others, candidates) -> frozenset[int] | None:
    """Exact minimum subset of ``candidates`` separating u from ``others``.

    Subset enumeration in (size, lexicographic) order; None when no subset
    works.  Refuses candidate pools larger than 20.
    """
    others = set(others)
    pool = sorted(set(candidates))
    if len(pool) > 20:
        raise GraphError(f"candidate budget exceeded: {len(pool)} > 20")
    if u in others:
        raise GraphError("u cannot belong to others")
    if set(pool) & (others | {u}):
        raise GraphError("candidates must avoid u and others")
    adj = _adj_sets(g)
    for size in range(len(pool) + 1):
        for S in combinations(pool, size):
            if _separates(adj, set(S), u, others):
                return frozenset(S)
    return None


def brute_minimal_constrained_separators(g: Graph, u: int, others, candidates):
    """All inclusion-minimal subsets of ``candidates`` separating u from
    ``others``; the experimentation-only variant of the minimum-cardinality
    cut (every minimum cut appears in this list, never conversely)."""
    others = set(others)
    pool = sorted(set(candidates))
    if len(pool) > 20:
        raise GraphError(f"candidate budget exceeded: {len(pool)} > 20")
    adj = _adj_sets(g)
    out: list[frozenset[int]] = []
    for size in range(len(pool) + 1):
        for S in combinations(pool, size):
            sset = set(S)
            if any(prev < sset for prev in out):
                continue
            if _separates(adj, sset, u, others):
                out.append(frozenset(S))
    return sorted(out, key=lambda S: (len(S), sorted(S)))


def brute_longest_induced_cycle(g: Graph) -> tuple[int, tuple[int, ...] | None]:
    """Exact longest induced cycle length and a witness; (0, None) if none.

    Subset enumeration; refuses n > 12.
    """
    if g.n > 12:
        raise GraphError(f"n={g.n} exceeds the induced-cycle oracle budget of 12")
    return _longest_induced_cycle_subsets(_adj_sets(g), g.n)


@dataclass(frozen=True)
class BruteStretchVerdict:
    status: str  # "valid" | "invalid" | "not-applicable"
    failing_member: int | None = None
    failing_condition: str | None = None  # "C1" | "C2"
    witness_w: int | None = None

    @property
    def valid(self) -> bool:
        return self.status == "valid"


def brute_check_stretched(g: Graph, T, t: int) -> BruteStretchVerdict:
    """Literal expansion of the t-stretched definition, independent of the
    optimised path: distances by Floyd-Warshall, X_u by subset enumeration.

    Returns not-applicable when T is not diametrical or t is out of range.
    """
    if g.n > 10:
        raise GraphError(f"n={g.n} exceeds the stretched oracle budget of 10")
    T = sorted(set(T))
    adj = _adj_sets(g)
    dist = floyd_apsp(g)
    if any(d is None for row in dist for d in row):
        return BruteStretchVerdict("not-applicable")
    diameter = max(d for row in dist for d in row)
    if len(T) < 2 or any(
        dist[a][b] != diameter for a, b in combinations(T, 2)
    ):
        return BruteStretchVerdict("not-applicable")
    if not 1 <= t <= diameter - 1:
        return BruteStretchVerdict("not-applicable")

    for u in T:
        rest = set(T) - {u}
        level = {y for y in range(g.n) if dist[y][u] == t}
        comps_hit = set()
        for v in rest:
            comp = frozenset(_reachable(adj, v, level))
            comps_hit.add(comp)
        if len(comps_hit) > 1:
            return BruteStretchVerdict("invalid", u, "C1")
        x_u = brute_min_separator(g, u, rest, level)
        if x_u is None:
            raise AssertionError("level set of a diametrical member must separate")
        rest_reach = _reachable(adj, min(rest), x_u)
        for w in range(g.n):
            if w in x_u or w in rest_reach:
                continue
            if min(dist[w][v] for v in rest) != diameter:
                continue
            if all(dist[w][x] <= t for x in x_u):
                continue
            if min(dist[w][x] for x in x_u) <= t - 1:
                continue
            return BruteStretchVerdict("invalid", u, "C2", w)
    return BruteStretchVerdict("valid")


def brute_minimal_separators(g: Graph) -> list[frozenset[int]]:
    """All inclusion-minimal vertex sets disconnecting g, by subset search."""
    if g.n > 10:
        raise GraphError("separator oracle budget is n <= 10")
    adj = _adj_sets(g)
    verts = set(range(g.n))
    seps = []
    for size in range(g.n - 1):
        for S in combinations(sorted(verts), size):
            sset = set(S)
            alive = verts - sset
            if len(alive) < 2:
                continue
            start = min(alive)
            if _reachable(adj, start, sset) != alive:
                if not any(set(prev) < sset for prev in seps):
                    seps.append(frozenset(S))
    return sorted(seps, key=lambda S: (len(S), sorted(S)))
