"""Theorem-level decision procedures over centers of (k-)chordal graphs.

Every verifier here returns pure report data whose flags are re-checkable
from the graph alone; "yes" verdicts always carry evidence (dominating
clique pairs or a separator family) that is re-verified from scratch before
being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import (
    Graph,
    GraphError,
    InducedSubgraph,
    PreconditionError,
    TheoremCounterexample,
    induced_subgraph,
    is_connected,
    iter_bits,
    mask_of,
    neighborhood_within,
    set_of,
)
from .chordality import chordality_index, is_chordal, is_clique
from .metrics import dominates, eccentricities, is_self_centered, metric_summary
from .separators import ConstrainedSeparator, minimal_separators_chordal
from .stretched import StretchedSet, build_t_stretched, check_t_stretched, extend_to_maximal


# -- radius/diameter bounds ---------------------------------------------------

@dataclass(frozen=True)
class BoundsReport:
    radius: int
    diameter: int
    k_index: int
    radius_ge_ceil_half_diam: bool
    floor_half_diam_ge_radius_slack: bool
    diam_within_radius_window: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.radius_ge_ceil_half_diam
            and self.floor_half_diam_ge_radius_slack
            and self.diam_within_radius_window
        )


def check_bounds(g: Graph) -> BoundsReport:
    """Evaluate the radius/diameter window for k = chordality index of g."""
    ecc = eccentricities(g)
    radius, diameter = min(ecc), max(ecc)
    k = chordality_index(g).k_index
    half_k = k // 2
    ceil_half_d = (diameter + 1) // 2
    floor_half_d = diameter // 2
    return BoundsReport(
        radius,
        diameter,
        k,
        radius >= ceil_half_d,
        floor_half_d >= radius - half_k,
        max(radius, 2 * radius - 2 * half_k) <= diameter <= 2 * radius,
    )


# -- the center-containing subgraph -------------------------------------------

@dataclass(frozen=True)
class CenterHull:
    vertices: frozenset[int]
    subgraph: InducedSubgraph
    base_u: int | None
    radius: int
    diameter: int
    k_index: int


def center_hull(g: Graph, S: StretchedSet | None = None) -> CenterHull:
    """Induced subgraph around one X_u that must contain the center.

    For non-complete graphs S must be a valid stretched set at t = ceil(D/2);
    complete graphs take the whole vertex set.  The containment, connectivity,
    and radius/diameter bounds are asserted, not assumed.
    """
    if not is_connected(g):
        raise PreconditionError("center_hull needs a connected graph")
    ms = metric_summary(g)
    k = chordality_index(g).k_index
    half_k = k // 2
    if ms.diameter <= 1:
        whole = induced_subgraph(g, range(g.n))
        return CenterHull(frozenset(range(g.n)), whole, None, ms.radius, ms.diameter, k)
    ceil_half_d = (ms.diameter + 1) // 2
    if S is None or S.t != ceil_half_d:
        raise PreconditionError("center_hull needs a stretched set at t = ceil(D/2)")
    if not check_t_stretched(g, S.T, S.t).ok:
        raise PreconditionError("center_hull got an invalid stretched set")
    u = min(S.T)
    hull = neighborhood_within(g, S.separators[u].cut, half_k)
    sub = induced_subgraph(g, hull)
    if not is_connected(sub.graph):
        raise TheoremCounterexample("center hull is disconnected", g, {"hull": sorted(hull)})
    if not ms.center <= hull:
        raise TheoremCounterexample(
            "center escapes the hull", g, {"hull": sorted(hull), "center": sorted(ms.center)}
        )
    sub_ecc = eccentricities(sub.graph)
    h_rad, h_diam = min(sub_ecc), max(sub_ecc)
    if h_rad > 2 * half_k or h_diam > 3 * half_k:
        raise TheoremCounterexample(
            "hull radius/diameter bound failed",
            g,
            {"hull": sorted(hull), "rad": h_rad, "diam": h_diam, "k": k},
        )
    return CenterHull(hull, sub, u, h_rad, h_diam, k)


# -- disjoint dominating cliques ----------------------------------------------

_DDC_DEFAULT_BUDGET = 32


def _closed_mask(g: Graph, mask: int) -> int:
    out = mask
    for v in iter_bits(mask):
        out |= g.adj_mask(v)
    return out


def _dominating_cliques(g: Graph, forbidden: int):
    """Yield dominating cliques avoiding ``forbidden``, in lex DFS order.

    Prunes branches whose clique plus all remaining candidates cannot cover
    the graph; a clique superset of a dominating clique still dominates, so
    coverage only grows along a branch.
    """
    full = g.vertex_mask()

    def rec(clique: int, cands: int):
        if _closed_mask(g, clique | cands) != full:
            return
        if clique and _closed_mask(g, clique) == full:
            yield set_of(clique)
        for v in iter_bits(cands):
            above = ~((1 << (v + 1)) - 1)
            yield from rec(clique | (1 << v), cands & g.adj_mask(v) & above)

    yield from rec(0, full & ~forbidden)


def disjoint_dominating_cliques(
    g: Graph, max_n: int = _DDC_DEFAULT_BUDGET
) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two disjoint cliques each dominating g, or None (exhaustive, exact)."""
    if not is_connected(g):
        raise PreconditionError("disjoint dominating cliques need a connected graph")
    if g.n > max_n:
        raise GraphError(f"n={g.n} exceeds the search budget {max_n}; pass max_n to override")
    for first in _dominating_cliques(g, 0):
        second = next(iter(_dominating_cliques(g, mask_of(first))), None)
        if second is not None:
            return first, second
    return None


# -- the separator family of self-centered chordal graphs ----------------------

@dataclass(frozen=True)
class SeparatorFamily:
    """A clique family with the five self-centered certificate conditions."""

    cliques: tuple[frozenset[int], ...]
    all_cliques: bool
    each_separates: bool
    neighborhoods_covered: bool
    pairwise_intersecting: bool
    empty_total_intersection: bool
    common_neighbor_cover: bool

    @property
    def ok(self) -> bool:
        return (
            self.all_cliques
            and self.each_separates
            and self.neighborhoods_covered
            and self.pairwise_intersecting
            and self.empty_total_intersection
            and self.common_neighbor_cover
        )


def verify_separator_family(g: Graph, cliques) -> SeparatorFamily:
    """Re-check every family condition from scratch on g."""
    cliques = tuple(frozenset(c) for c in cliques)
    if not cliques:
        raise GraphError("empty separator family")
    from .separators import is_separator

    all_cliques = all(is_clique(g, c) for c in cliques)
    each_separates = all(
        is_separator(g, c, range(g.n)) if len(c) < g.n else False for c in cliques
    )
    neighborhoods_covered = all(
        g.adj_mask(z) & mask_of(c) for z in range(g.n) for c in cliques
    )
    pairwise_intersecting = all(a & b for a, b in combinations(cliques, 2))
    total = frozenset.intersection(*cliques)
    union_mask = mask_of(frozenset.union(*cliques))
    common_neighbor_cover = all(
        g.adj_mask(z) & g.adj_mask(z2) & union_mask
        for z, z2 in combinations(range(g.n), 2)
    )
    return SeparatorFamily(
        cliques,
        all_cliques,
        each_separates,
        neighborhoods_covered,
        pairwise_intersecting,
        not total,
        common_neighbor_cover,
    )


def self_centered_certificate(g: Graph) -> SeparatorFamily | str | None:
    """Certificate that a chordal graph is self-centered.

    Returns "complete" for complete graphs, a verified SeparatorFamily for
    self-centered non-complete inputs, and None otherwise.  The finder builds
    a maximal 1-stretched set and takes its separators; if that family fails
    re-verification it falls back to an exhaustive search over clique minimal
    separators.
    """
    if not is_connected(g):
        raise PreconditionError("self_centered_certificate needs a connected graph")
    if not is_chordal(g):
        raise PreconditionError("self_centered_certificate needs a chordal input")
    if g.edge_count() == g.n * (g.n - 1) // 2:
        return "complete"
    if not is_self_centered(g):
        return None
    ecc = eccentricities(g)
    diameter = max(ecc)
    if diameter != 2:
        raise TheoremCounterexample(
            "self-centered non-complete chordal graph without diameter two", g
        )
    if g.max_degree() > g.n - 2:
        raise TheoremCounterexample(
            "self-centered non-complete chordal graph with a universal vertex", g
        )
    stretched = extend_to_maximal(g, build_t_stretched(g, 1))
    cliques = [stretched.separators[u].cut for u in sorted(stretched.T)]
    family = verify_separator_family(g, cliques)
    if family.ok:
        return family
    seps = minimal_separators_chordal(g)
    for r in range(3, len(seps) + 1):
        for combo in combinations(seps, r):
            family = verify_separator_family(g, combo)
            if family.ok:
                return family
    raise TheoremCounterexample(
        "no separator family found for a self-centered chordal graph",
        g,
        {"tried": [sorted(c) for c in cliques]},
    )


# -- the center-of-chordal decision -------------------------------------------

@dataclass(frozen=True)
class DisjointDominatingCliques:
    k1: frozenset[int]
    k2: frozenset[int]


@dataclass(frozen=True)
class SelfCenteredRadiusTwo:
    center: frozenset[int]
    family: SeparatorFamily


@dataclass(frozen=True)
class CenterCertificate:
    verdict: bool
    reason: str | None
    evidence: DisjointDominatingCliques | SelfCenteredRadiusTwo | None


def is_center_of_chordal(g: Graph) -> CenterCertificate:
    """Decide whether g is the center of some chordal graph, with evidence.

    Conditions are checked in a fixed order (connected, chordal, diameter,
    structure) so the failure reason is deterministic.
    """
    if g.n < 2:
        raise GraphError("the characterization needs at least two vertices")
    if not is_connected(g):
        return CenterCertificate(False, "not-connected", None)
    if not is_chordal(g):
        return CenterCertificate(False, "not-chordal", None)
    ms = metric_summary(g)
    if ms.diameter > 3:
        return CenterCertificate(False, "diameter-exceeds-3", None)
    sub = induced_subgraph(g, ms.center)
    if is_connected(sub.graph):
        sub_ecc = eccentricities(sub.graph)
        if min(sub_ecc) == 2 and max(sub_ecc) == 2:
            family_sub = self_centered_certificate(sub.graph)
            assert isinstance(family_sub, SeparatorFamily)
            mapped = [sub.map_back(c) for c in family_sub.cliques]
            family = SeparatorFamily(
                tuple(mapped),
                family_sub.all_cliques,
                family_sub.each_separates,
                family_sub.neighborhoods_covered,
                family_sub.pairwise_intersecting,
                family_sub.empty_total_intersection,
                family_sub.common_neighbor_cover,
            )
            return CenterCertificate(
                True, None, SelfCenteredRadiusTwo(ms.center, family)
            )
    pair = disjoint_dominating_cliques(g)
    if pair is not None:
        return CenterCertificate(True, None, DisjointDominatingCliques(*pair))
    return CenterCertificate(False, "no-structure", None)


# -- structure of centers by diameter class ------------------------------------

@dataclass(frozen=True)
class Diam3Report:
    applicable: bool
    reason: str | None
    max_degree_ok: bool = False
    cliques: tuple[frozenset[int], ...] = ()
    at_least_three: bool = False
    pairwise_intersecting: bool = False
    empty_total_intersection: bool = False
    each_separates_g: bool = False
    each_dominates_g: bool = False

    @property
    def all_pass(self) -> bool:
        return self.applicable and (
            self.max_degree_ok
            and self.at_least_three
            and self.pairwise_intersecting
            and self.empty_total_intersection
            and self.each_separates_g
            and self.each_dominates_g
        )


def check_diam3_structure(g: Graph) -> Diam3Report:
    """For chordal g with Diam 3 whose center is self-centered of radius two,
    exhibit >= 3 pairwise-intersecting cliques, with empty total intersection,
    each separating and dominating all of g."""
    if not is_connected(g):
        raise PreconditionError("check_diam3_structure needs a connected graph")
    if not is_chordal(g):
        raise PreconditionError("check_diam3_structure needs a chordal input")
    ms = metric_summary(g)
    if ms.diameter != 3:
        return Diam3Report(False, f"diameter is {ms.diameter}, not 3")
    sub = induced_subgraph(g, ms.center)
    if not is_connected(sub.graph):
        return Diam3Report(False, "center is disconnected")
    sub_ecc = eccentricities(sub.graph)
    if not (min(sub_ecc) == 2 and max(sub_ecc) == 2):
        return Diam3Report(False, "center is not self-centered with radius two")
    family_sub = self_centered_certificate(sub.graph)
    assert isinstance(family_sub, SeparatorFamily)
    cliques = tuple(sub.map_back(c) for c in family_sub.cliques)
    from .separators import is_separator

    total = frozenset.intersection(*cliques)
    return Diam3Report(
        True,
        None,
        g.max_degree() <= g.n - 2,
        cliques,
        len(cliques) >= 3,
        all(a & b for a, b in combinations(cliques, 2)),
        not total,
        all(is_separator(g, c, range(g.n)) for c in cliques),
        all(dominates(g, c) for c in cliques),
    )


@dataclass(frozen=True)
class CenterClassReport:
    case: str  # "D=2R" | "D=2R-1" | "D=2R-2"
    passed: bool
    center: frozenset[int]
    details: dict


def center_structure_class(g: Graph) -> CenterClassReport:
    """Classify a connected chordal graph by D versus 2R and assert the
    center structure the class forces."""
    if not is_connected(g):
        raise PreconditionError("center_structure_class needs a connected graph")
    if not is_chordal(g):
        raise PreconditionError("center_structure_class needs a chordal input")
    ms = metric_summary(g)
    R, D = ms.radius, ms.diameter
    if D == 2 * R:
        passed = is_clique(g, ms.center)
        return CenterClassReport("D=2R", passed, ms.center, {"center_is_clique": passed})
    if D == 2 * R - 1:
        k1, k2, via = _disjoint_dominating_cliques_in_center(g, ms)
        sub = induced_subgraph(g, ms.center)
        sub_k1 = frozenset(sub.to_sub(v) for v in k1)
        sub_k2 = frozenset(sub.to_sub(v) for v in k2)
        passed = (
            bool(k1)
            and bool(k2)
            and not (k1 & k2)
            and is_clique(g, k1)
            and is_clique(g, k2)
            and k1 <= ms.center
            and k2 <= ms.center
            and dominates(sub.graph, sub_k1)
            and dominates(sub.graph, sub_k2)
        )
        return CenterClassReport(
            "D=2R-1", passed, ms.center, {"k1": k1, "k2": k2, "via": via}
        )
    if D != 2 * R - 2:
        raise TheoremCounterexample(
            "chordal graph outside the three diameter classes", g, {"R": R, "D": D}
        )
    return _check_two_below(g, ms)


def _disjoint_dominating_cliques_in_center(g, ms):
    """Two disjoint cliques inside C(g) each dominating the induced center.

    Primary route: the two cut differences of an R-stretched pair; fallback:
    exhaustive search inside the induced center.
    """
    R, D = ms.radius, ms.diameter
    if D >= 2:
        S = build_t_stretched(g, R)  # R = ceil(D/2) when D = 2R-1
        members = sorted(S.T)
        if len(members) == 2:
            u, v = members
            k1 = S.separators[u].cut - S.separators[v].cut
            k2 = S.separators[v].cut - S.separators[u].cut
            sub = induced_subgraph(g, ms.center)
            if (
                k1
                and k2
                and k1 <= ms.center
                and k2 <= ms.center
                and is_clique(g, k1)
                and is_clique(g, k2)
                and dominates(sub.graph, frozenset(sub.to_sub(x) for x in k1))
                and dominates(sub.graph, frozenset(sub.to_sub(x) for x in k2))
            ):
                return k1, k2, "stretched-pair"
    sub = induced_subgraph(g, ms.center)
    pair = disjoint_dominating_cliques(sub.graph)
    if pair is None:
        raise TheoremCounterexample(
            "no disjoint dominating cliques in the center at D = 2R - 1",
            g,
            {"center": sorted(ms.center)},
        )
    return sub.map_back(pair[0]), sub.map_back(pair[1]), "exhaustive"


def _check_two_below(g, ms) -> CenterClassReport:
    R = ms.radius
    c2 = ms.iterated_center(2)
    sub2 = induced_subgraph(g, c2)
    sub2_ecc = eccentricities(sub2.graph)
    c2_self_centered_radius_two = min(sub2_ecc) == 2 and max(sub2_ecc) == 2
    S = extend_to_maximal(g, build_t_stretched(g, R - 1))
    members = sorted(S.T)
    cuts = {u: S.separators[u].cut for u in members}
    total = frozenset.intersection(*cuts.values())
    pairwise = all(cuts[u] & cuts[v] for u, v in combinations(members, 2))
    rows = g.apsp()
    witness = {}
    for u in members:
        w_u = None
        for w in range(g.n):
            if w in c2 and rows[u][w] is not None and rows[u][w] <= R - 2:
                if not mask_of(cuts[u]) & ~g.adj_mask(w):
                    w_u = w
                    break
        witness[u] = w_u
    dominates_c2 = all(
        all(w in cuts[u] or g.adj_mask(w) & mask_of(cuts[u]) for w in c2)
        for u in members
    )
    passed = (
        c2_self_centered_radius_two
        and len(members) >= 3
        and not total
        and pairwise
        and all(w is not None for w in witness.values())
        and dominates_c2
    )
    return CenterClassReport(
        "D=2R-2",
        passed,
        ms.center,
        {
            "c2": c2,
            "c2_self_centered_radius_two": c2_self_centered_radius_two,
            "T": members,
            "cuts": cuts,
            "empty_total_intersection": not total,
            "pairwise_intersecting": pairwise,
            "witnesses": witness,
            "cuts_dominate_c2": dominates_c2,
        },
    )


# -- separator-dominating vertices and the center intersection -----------------

def dominating_vertex_for_separator(g: Graph, cs: ConstrainedSeparator) -> int:
    """A vertex of the near side adjacent to the whole cut.

    The proof's choice is the coverage maximiser inside W_u; the hill-climb
    lands there, so the maximiser (smallest index on ties) is returned and the
    full-coverage property is asserted.
    """
    if not is_chordal(g):
        raise PreconditionError("dominating_vertex_for_separator needs a chordal input")
    diameter = max(eccentricities(g))
    if 2 * cs.t > diameter + 1:
        raise PreconditionError("lemma applies for t <= ceil(D/2)")
    cut_mask = mask_of(cs.cut)
    best = None
    best_cover = -1
    for w in sorted(cs.side_u):
        cover = (g.adj_mask(w) & cut_mask).bit_count()
        if cover > best_cover:
            best, best_cover = w, cover
    if best is None or best_cover != len(cs.cut):
        raise TheoremCounterexample(
            "no near-side vertex dominates the cut of a chordal separator",
            g,
            {"u": cs.u, "cut": sorted(cs.cut), "best": best, "cover": best_cover},
        )
    return best


@dataclass(frozen=True)
class CenterIntersectionReport:
    applicable: bool
    reason: str | None
    floor_half_diam_is_radius: bool = False
    center_equals_intersection: bool = False
    intersection: frozenset[int] = frozenset()

    @property
    def holds(self) -> bool:
        return not self.applicable or (
            self.floor_half_diam_is_radius == self.center_equals_intersection
        )


def check_center_intersection(
    g: Graph, S: StretchedSet | None = None
) -> CenterIntersectionReport:
    """floor(D/2) = R iff the center equals the intersection of the cuts of a
    maximal floor(D/2)-stretched set."""
    if not is_connected(g):
        raise PreconditionError("check_center_intersection needs a connected graph")
    if not is_chordal(g):
        raise PreconditionError("check_center_intersection needs a chordal input")
    ms = metric_summary(g)
    if ms.diameter < 2:
        return CenterIntersectionReport(False, "no valid t: diameter below two")
    t = ms.diameter // 2
    if S is None:
        raise GraphError("supply a maximal stretched set at t = floor(D/2)")
    if S.t != t or not S.maximal:
        raise PreconditionError("need a maximal stretched set at t = floor(D/2)")
    inter = frozenset.intersection(*(S.separators[u].cut for u in S.T))
    return CenterIntersectionReport(
        True,
        None,
        t == ms.radius,
        inter == ms.center,
        inter,
    )
