"""t-stretched diametrical sets: checking, building, and maximal extension.

A diametrical set T is t-stretched when every member u satisfies
  C1: the distance level N(u, t) does not separate T - u, and
  C2: with X_u a minimum-cardinality subset of N(u, t) separating u from
      T - u, every vertex w cut off from T - u by X_u with d(w, T-u) equal
      to the diameter and d(w, x) > t for some x in X_u has d(w, X_u) <= t-1.

The builder starts from a diametrical pair and repeatedly swaps a member
violating C2 for a witness chosen to maximise the component of G - N(w, t)
containing the rest of the set; that component grows strictly, which bounds
the number of swaps.  The builder never self-certifies: every returned set
is re-validated by the definition-level checker.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    Graph,
    GraphError,
    PreconditionError,
    TheoremCounterexample,
    _component_mask,
    is_connected,
    iter_bits,
    mask_of,
    neighborhood_at,
)
from .metrics import diametrical_pairs, eccentricities, is_diametrical
from .separators import ConstrainedSeparator, min_separator_within

_SWAP_LIMIT_SLACK = 10


@dataclass(frozen=True)
class StretchVerdict:
    u: int
    c1: bool
    c2: bool | None
    separator: ConstrainedSeparator | None
    witness_w: int | None = None

    @property
    def ok(self) -> bool:
        return self.c1 and bool(self.c2)


@dataclass(frozen=True)
class StretchCheck:
    T: frozenset[int]
    t: int
    verdicts: tuple[StretchVerdict, ...]

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)


@dataclass(frozen=True)
class StretchedSet:
    T: frozenset[int]
    t: int
    separators: dict[int, ConstrainedSeparator] = field(compare=False)
    maximal: bool = False

    def separator(self, u: int) -> ConstrainedSeparator:
        return self.separators[u]


def _c1_holds(g: Graph, u: int, T: frozenset[int], t: int) -> bool:
    rest = T - {u}
    row = g.apsp()[u]
    level = mask_of(v for v in range(g.n) if row[v] == t)
    rest_mask = mask_of(rest)
    if rest_mask & level:
        # members of T - u sitting on the level set are deleted by it
        return False
    if len(rest) < 2:
        return True
    alive = g.vertex_mask() & ~level
    comp = _component_mask(g._masks, min(rest), alive)
    return not rest_mask & ~comp


def _c2_witnesses(g: Graph, sep: ConstrainedSeparator, diameter: int) -> list[int]:
    """All w violating C2 for the bound separator, in increasing order."""
    rows = g.apsp()
    t = sep.t
    excluded = mask_of(sep.cut) | mask_of(sep.side_rest)
    out = []
    for w in range(g.n):
        if excluded & (1 << w):
            continue
        if min(rows[w][o] for o in sep.others) != diameter:
            continue
        dists = [rows[w][x] for x in sep.cut]
        if max(dists) <= t:
            continue
        if min(dists) <= t - 1:
            continue
        out.append(w)
    return out


def check_t_stretched(g: Graph, T, t: int) -> StretchCheck:
    """Evaluate C1 and C2 for every member of a diametrical set T."""
    T = frozenset(T)
    if not is_diametrical(g, T):
        raise GraphError("T must be diametrical")
    diameter = max(eccentricities(g))
    if not 1 <= t <= diameter - 1:
        raise GraphError(f"t={t} out of range 1..{diameter - 1}")
    verdicts = []
    for u in sorted(T):
        c1 = _c1_holds(g, u, T, t)
        if not c1:
            verdicts.append(StretchVerdict(u, False, None, None))
            continue
        sep = min_separator_within(g, u, T - {u}, t)
        if sep is None:
            raise AssertionError("N(u,t) must separate a diametrical member")
        witnesses = _c2_witnesses(g, sep, diameter)
        verdicts.append(
            StretchVerdict(u, True, not witnesses, sep, witnesses[0] if witnesses else None)
        )
    return StretchCheck(T, t, tuple(verdicts))


def _tracked_component(g: Graph, w: int, T_rest: frozenset[int], t: int) -> int | None:
    """Mask of the component of G - N(w, t) containing T_rest, or None if split."""
    level = mask_of(neighborhood_at(g, {w}, t))
    alive = g.vertex_mask() & ~level
    rest_mask = mask_of(T_rest)
    if rest_mask & level:
        return None
    comp = _component_mask(g._masks, min(T_rest), alive)
    if rest_mask & ~comp:
        return None
    return comp


def _repair(g, T, t, diameter, protected=frozenset()):
    """Swap C2-violating members for witnesses until the set is t-stretched.

    Returns (T, separators).  Raises TheoremCounterexample if the machinery
    fails to converge, if C1 breaks for a member, or if a protected member
    (one the caller promised stays) would need to be swapped.
    """
    T = frozenset(T)
    limit = g.n * g.n + _SWAP_LIMIT_SLACK
    for _ in range(limit):
        seps: dict[int, ConstrainedSeparator] = {}
        violator = None
        for u in sorted(T):
            if not _c1_holds(g, u, T, t):
                raise TheoremCounterexample(
                    "C1 failed for a member during the swap loop",
                    g,
                    {"T": sorted(T), "t": t, "member": u},
                )
            sep = min_separator_within(g, u, T - {u}, t)
            seps[u] = sep
            if violator is None and _c2_witnesses(g, sep, diameter):
                violator = u
        if violator is None:
            return T, seps
        if violator in protected:
            raise TheoremCounterexample(
                "a previously stretched member lost C2 after an extension",
                g,
                {"T": sorted(T), "t": t, "member": violator},
            )
        witnesses = _c2_witnesses(g, seps[violator], diameter)
        rest = T - {violator}
        best_w = None
        best_size = -1
        for w in witnesses:
            comp = _tracked_component(g, w, rest, t)
            if comp is None:
                raise TheoremCounterexample(
                    "swap witness separates the rest of the set",
                    g,
                    {"T": sorted(T), "t": t, "member": violator, "witness": w},
                )
            size = comp.bit_count()
            if size > best_size:
                best_w, best_size = w, size
        T = rest | {best_w}
    raise TheoremCounterexample(
        "swap loop failed to converge; candidate counterexample to the"
        " stretched-set existence claim",
        g,
        {"t": t, "T": sorted(T)},
    )


def build_t_stretched(g: Graph, t: int) -> StretchedSet:
    """Build a t-stretched diametrical pair for 1 <= t <= ceil(D/2)."""
    if not is_connected(g):
        raise PreconditionError("build_t_stretched needs a connected graph")
    diameter = max(eccentricities(g))
    if t < 1 or 2 * t > diameter + 1:
        raise PreconditionError(f"t={t} outside 1..ceil(D/2) for D={diameter}")
    if t > diameter - 1:
        raise PreconditionError(f"no valid t: need t <= D-1 = {diameter - 1}")
    pairs = diametrical_pairs(g)
    start = None
    for a, b in pairs:
        T0 = frozenset((a, b))
        if _c1_holds(g, a, T0, t) and _c1_holds(g, b, T0, t):
            start = T0
            break
    if start is None:
        start = frozenset(pairs[0])
    T, seps = _repair(g, start, t, diameter)
    final = check_t_stretched(g, T, t)
    if not final.ok:
        raise TheoremCounterexample(
            "builder output failed the definition-level check",
            g,
            {"T": sorted(T), "t": t},
        )
    return StretchedSet(T, t, seps, maximal=False)


def _extension_candidates(g: Graph, T: frozenset[int], t: int, diameter: int) -> list[int]:
    rows = g.apsp()
    return [
        w
        for w in range(g.n)
        if w not in T
        and all(rows[w][u] == diameter for u in T)
        and _c1_holds(g, w, T | {w}, t)
    ]


def extend_to_maximal(g: Graph, S: StretchedSet) -> StretchedSet:
    """Grow a valid stretched set until no far vertex can be added.

    The result is flagged maximal: no w with d(w, T) = D leaves T unseparated
    by N(w, t), which is exactly the extension hypothesis.
    """
    if not check_t_stretched(g, S.T, S.t).ok:
        raise PreconditionError("extend_to_maximal needs a valid stretched set")
    diameter = max(eccentricities(g))
    T = S.T
    seps = dict(S.separators)
    while True:
        candidates = _extension_candidates(g, T, S.t, diameter)
        if not candidates:
            break
        w = candidates[0]
        T, seps = _repair(g, T | {w}, S.t, diameter, protected=T)
    final = check_t_stretched(g, T, S.t)
    if not final.ok:
        raise TheoremCounterexample(
            "extension output failed the definition-level check",
            g,
            {"T": sorted(T), "t": S.t},
        )
    return StretchedSet(T, S.t, seps, maximal=True)


@dataclass(frozen=True)
class ClauseResult:
    name: str
    applicable: bool
    passed: bool
    evidence: dict | None = None

    @property
    def ok(self) -> bool:
        return not self.applicable or self.passed


@dataclass(frozen=True)
class BasicSdsReport:
    clauses: tuple[ClauseResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.clauses)

    def clause(self, name: str) -> ClauseResult:
        return next(c for c in self.clauses if c.name == name)


def verify_basic_sds(g: Graph, S: StretchedSet, k: int) -> BasicSdsReport:
    """Evaluate the five basic stretched-set properties by direct distance
    computation; any failure is a counterexample and is reported verbatim."""
    diameter = max(eccentricities(g))
    t = S.t
    if 2 * t > diameter + 1:
        raise PreconditionError(f"basic properties need t <= ceil(D/2); t={t}, D={diameter}")
    if not check_t_stretched(g, S.T, t).ok:
        raise PreconditionError("verify_basic_sds needs a valid stretched set")
    rows = g.apsp()
    half_k = k // 2
    half_d = diameter // 2
    members = sorted(S.T)
    clauses = []

    fails = []
    for u in members:
        cut = sorted(S.separators[u].cut)
        for i, x in enumerate(cut):
            for x2 in cut[i + 1 :]:
                if rows[x][x2] > half_k:
                    fails.append({"u": u, "x": x, "x'": x2, "d": rows[x][x2]})
    clauses.append(ClauseResult("separator-diameter", True, not fails, {"fails": fails} if fails else None))

    fails = []
    for u in members:
        sep = S.separators[u]
        outside = g.vertex_mask() & ~mask_of(sep.side_rest)
        for x in sorted(sep.cut):
            for w in iter_bits(outside):
                if rows[x][w] > t + half_k - 1:
                    fails.append({"u": u, "x": x, "w": w, "d": rows[x][w]})
    clauses.append(ClauseResult("near-side-reach", True, not fails, {"fails": fails} if fails else None))

    applicable = t <= half_d
    fails = []
    if applicable:
        for u in members:
            for v in members:
                if v == u:
                    continue
                overlap = S.separators[v].cut & S.separators[u].side_u
                if overlap:
                    fails.append({"u": u, "v": v, "overlap": sorted(overlap)})
    clauses.append(ClauseResult("cut-avoids-far-side", applicable, not fails, {"fails": fails} if fails else None))

    applicable = t == half_d
    fails = []
    if applicable:
        expect = diameter - 2 * half_d
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                d = min(
                    rows[x][y]
                    for x in S.separators[u].cut
                    for y in S.separators[v].cut
                )
                if d != expect:
                    fails.append({"u": u, "v": v, "d": d, "expected": expect})
    clauses.append(ClauseResult("cut-gap", applicable, not fails, {"fails": fails} if fails else None))

    applicable = t == diameter - half_d  # t = ceil(D/2)
    fails = []
    if applicable:
        ecc = eccentricities(g)
        for u in members:
            for x in sorted(S.separators[u].cut):
                if ecc[x] > half_d + half_k:
                    fails.append({"u": u, "x": x, "ecc": ecc[x]})
    clauses.append(ClauseResult("cut-eccentricity", applicable, not fails, {"fails": fails} if fails else None))

    return BasicSdsReport(tuple(clauses))
