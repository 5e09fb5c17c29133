"""Exhaustive desk-scale verification suites and the per-graph clause battery.

Each suite streams every labeled graph of the requested orders (edge masks
ascending), applies a theorem check to each qualifying graph, and collects
counterexamples as reproducible records carrying a graph6 string.  Suites are
embarrassingly parallel over contiguous mask ranges; ``jobs > 1`` fans out to
worker processes and merges chunk results in deterministic order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .graph import (
    Graph,
    GraphError,
    TheoremCounterexample,
    induced_subgraph,
    is_connected,
    iter_bits,
    mask_of,
    neighborhood_at,
    neighborhood_within,
)
from .chordality import chordality_index, is_chordal
from .metrics import (
    diametrical_pairs,
    eccentricities,
    is_self_centered,
    metric_summary,
)
from .stretched import build_t_stretched, extend_to_maximal, verify_basic_sds
from .characterize import (
    SeparatorFamily,
    center_hull,
    check_bounds,
    check_center_intersection,
    check_diam3_structure,
    dominating_vertex_for_separator,
    is_center_of_chordal,
    self_centered_certificate,
    center_structure_class,
)
from .construct import build_host, host_kchordal
from .oracle import brute_check_stretched, brute_min_separator
from . import io as gio

SUITE_NAMES = ("bounds", "center", "stretched", "selfcentered", "roundtrip")


@dataclass
class SuiteResult:
    name: str
    max_n: int
    graphs_checked: int = 0
    instances_checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "SuiteResult") -> None:
        self.graphs_checked += other.graphs_checked
        self.instances_checked += other.instances_checked
        self.counterexamples.extend(other.counterexamples)


def _record(result: SuiteResult, g: Graph, check: str, detail) -> None:
    result.counterexamples.append(
        {"graph6": gio.to_graph6(g), "n": g.n, "check": check, "detail": detail}
    )


# -- fast enumeration ---------------------------------------------------------

def _edge_slots(n):
    return [(i, j) for j in range(1, n) for i in range(j)]


def _connected_graphs(n: int, lo: int, hi: int):
    """Connected labeled graphs with edge mask in [lo, hi), ascending."""
    slots = _edge_slots(n)
    full = (1 << n) - 1
    for mask in range(lo, hi):
        adj = [0] * n
        m = mask
        while m:
            low = m & -m
            b = low.bit_length() - 1
            i, j = slots[b]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            m ^= low
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        if seen != full:
            continue
        g = Graph.__new__(Graph)
        g.n = n
        g._masks = tuple(adj)
        g._nbrs = None
        g._apsp = None
        g._memo = {}
        yield g


def _mask_space(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


# -- per-graph checks ----------------------------------------------------------

def _bounds_check(g: Graph, result: SuiteResult) -> None:
    result.graphs_checked += 1
    rep = check_bounds(g)
    result.instances_checked += 3
    if not rep.all_hold:
        _record(result, g, "radius-diameter-window", {
            "R": rep.radius, "D": rep.diameter, "k": rep.k_index,
        })


def _induced_paths_stay_in_center(g: Graph, center: frozenset[int]) -> bool:
    """Enumerate induced paths between center pairs; all must stay central."""
    cmask = mask_of(center)
    for a in sorted(center):
        for b in sorted(center):
            if b <= a:
                continue
            # DFS over induced paths from a; blocked holds the closed
            # neighborhoods of everything before the tail
            stack = [(a, 1 << a, 0)]
            while stack:
                tail, pmask, blocked = stack.pop()
                if tail == b:
                    if pmask & ~cmask:
                        return False
                    continue
                nxt_blocked = blocked | g.adj_mask(tail) | (1 << tail)
                for w in iter_bits(g.adj_mask(tail) & ~blocked & ~pmask):
                    stack.append((w, pmask | (1 << w), nxt_blocked))
    return True


def _center_check(g: Graph, result: SuiteResult) -> None:
    if not is_chordal(g):
        return
    result.graphs_checked += 1
    ms = metric_summary(g)
    sub = induced_subgraph(g, ms.center)
    result.instances_checked += 1
    if not is_connected(sub.graph):
        _record(result, g, "center-connected", {"center": sorted(ms.center)})
        return
    sub_ecc = eccentricities(sub.graph)
    if max(sub_ecc) > 3:
        _record(result, g, "center-diameter", {"diam": max(sub_ecc)})
    try:
        rep = center_structure_class(g)
        if not rep.passed:
            _record(result, g, f"center-class-{rep.case}", _class_detail(rep))
    except TheoremCounterexample as exc:
        _record(result, g, "center-class", str(exc))
    result.instances_checked += 1
    if g.n <= 6 and not _induced_paths_stay_in_center(g, ms.center):
        _record(result, g, "induced-path-in-center", {"center": sorted(ms.center)})
    _basic_center_lemmas(g, ms, result)


def _class_detail(rep):
    return {
        "case": rep.case,
        **{
            key: sorted(val) if isinstance(val, (set, frozenset)) else val
            for key, val in rep.details.items()
            if not isinstance(val, dict)
        },
    }


def _basic_center_lemmas(g, ms, result) -> None:
    """Clauses tying cuts of ceil(D/2)-stretched sets to the center, and the
    center-equals-cut-intersection biconditional at maximal floor(D/2)."""
    R, D = ms.radius, ms.diameter
    if D < 2:
        return
    t_hi = (D + 1) // 2
    try:
        S = build_t_stretched(g, t_hi)
    except TheoremCounterexample as exc:
        _record(result, g, "stretched-build", str(exc))
        return
    rows = g.apsp()
    cmask = mask_of(ms.center)
    for u in sorted(S.T):
        cut = S.separators[u].cut
        result.instances_checked += 1
        if D == 2 * R:
            if not ms.center <= cut:
                _record(result, g, "center-inside-cut", {"u": u, "cut": sorted(cut)})
        elif D == 2 * R - 2:
            if not cut <= ms.center:
                _record(result, g, "cut-inside-center", {"u": u, "cut": sorted(cut)})
            elif not all(
                v in cut or g.adj_mask(v) & mask_of(cut) for v in ms.center
            ):
                _record(result, g, "cut-dominates-center", {"u": u, "cut": sorted(cut)})
        else:  # D odd: D = 2R - 1
            if not cut <= ms.center:
                _record(result, g, "cut-inside-center", {"u": u, "cut": sorted(cut)})
            else:
                for v in sorted(S.T - {u}):
                    diff = cut - S.separators[v].cut
                    others = ms.center - diff
                    if not all(g.adj_mask(z) & mask_of(diff) for z in others):
                        _record(
                            result, g, "cut-difference-dominates-center",
                            {"u": u, "v": v, "diff": sorted(diff)},
                        )
    try:
        Smax = extend_to_maximal(g, build_t_stretched(g, D // 2))
        rep = check_center_intersection(g, Smax)
        result.instances_checked += 1
        if not rep.holds:
            _record(result, g, "center-intersection-biconditional", {
                "floor_half_diam_is_radius": rep.floor_half_diam_is_radius,
                "intersection": sorted(rep.intersection),
            })
        for u in sorted(Smax.T):
            sep = Smax.separators[u]
            if 2 * sep.t <= D + 1:
                dominating_vertex_for_separator(g, sep)
    except TheoremCounterexample as exc:
        _record(result, g, "center-intersection", str(exc))


def _stretched_check(g: Graph, result: SuiteResult) -> None:
    result.graphs_checked += 1
    ecc = eccentricities(g)
    R, D = min(ecc), max(ecc)
    k = chordality_index(g).k_index
    rows = g.apsp()
    t_max = min((D + 1) // 2, D - 1)
    for t in range(1, t_max + 1):
        result.instances_checked += 1
        try:
            S = build_t_stretched(g, t)
        except TheoremCounterexample as exc:
            _record(result, g, "stretched-existence", {"t": t, "error": str(exc)})
            continue
        verdict = brute_check_stretched(g, tuple(S.T), t)
        if not verdict.valid:
            _record(result, g, "stretched-oracle-confirm", {
                "t": t, "T": sorted(S.T), "status": verdict.status,
                "member": verdict.failing_member, "cond": verdict.failing_condition,
            })
        sds = verify_basic_sds(g, S, k)
        if not sds.ok:
            _record(result, g, "stretched-basic-properties", {
                "t": t, "T": sorted(S.T),
                "failed": [c.name for c in sds.clauses if c.applicable and not c.passed],
            })
        for u in sorted(S.T):
            cut = S.separators[u].cut
            brute = brute_min_separator(
                g, u, S.T - {u}, neighborhood_at(g, {u}, t)
            )
            result.instances_checked += 1
            if brute is None or len(brute) != len(cut):
                _record(result, g, "separator-oracle-cardinality", {
                    "t": t, "u": u, "flow": sorted(cut),
                    "brute": sorted(brute) if brute else None,
                })
    # every diametrical pair keeps the whole center within radius of both ends
    center = frozenset(v for v, e in enumerate(ecc) if e == R)
    for (a, b) in diametrical_pairs(g):
        ball = neighborhood_within(g, {a}, R) & neighborhood_within(g, {b}, R)
        result.instances_checked += 1
        if not center <= ball:
            _record(result, g, "center-in-reach-balls", {"pair": (a, b)})


def _selfcentered_recheck(g: Graph, family: SeparatorFamily) -> str | None:
    """Literal re-verification of the five family conditions, set-based."""
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    cliques = [set(c) for c in family.cliques]
    for c in cliques:
        for a in c:
            if (c - {a}) - adj[a]:
                return "not-a-clique"
    for c in cliques:
        rest = set(range(g.n)) - c
        if not rest:
            return "clique-covers-everything"
        start = min(rest)
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in c and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen == rest:
            return "does-not-separate"
    for z in range(g.n):
        for c in cliques:
            if not adj[z] & c:
                return "neighborhood-misses-a-clique"
    for c1, c2 in combinations(cliques, 2):
        if not c1 & c2:
            return "pair-of-cliques-disjoint"
    total = set.intersection(*cliques)
    if total:
        return "total-intersection-nonempty"
    union = set.union(*cliques)
    for z, z2 in combinations(range(g.n), 2):
        if not adj[z] & adj[z2] & union:
            return "pair-without-common-neighbor-in-union"
    return None


def _selfcentered_check(g: Graph, result: SuiteResult) -> None:
    if not is_chordal(g):
        return
    result.graphs_checked += 1
    result.instances_checked += 1
    sc = is_self_centered(g)
    complete = g.edge_count() == g.n * (g.n - 1) // 2
    try:
        res = self_centered_certificate(g)
    except TheoremCounterexample as exc:
        _record(result, g, "selfcentered-certificate", str(exc))
        return
    if complete:
        if res != "complete":
            _record(result, g, "selfcentered-complete", {"got": str(res)})
        return
    if sc:
        if not isinstance(res, SeparatorFamily):
            _record(result, g, "selfcentered-family-missing", {"got": str(res)})
            return
        problem = _selfcentered_recheck(g, res)
        if problem is not None:
            _record(result, g, "selfcentered-family-recheck", {
                "problem": problem,
                "cliques": [sorted(c) for c in res.cliques],
            })
    elif res is not None:
        _record(result, g, "selfcentered-false-positive", {"got": str(res)})


def _roundtrip_check(g: Graph, result: SuiteResult, forward_max_n: int) -> None:
    if not is_chordal(g):
        return
    result.graphs_checked += 1
    ms = metric_summary(g)
    if g.n >= 2 and g.n <= forward_max_n:
        cert = is_center_of_chordal(g)
        result.instances_checked += 1
        if cert.verdict:
            try:
                hg = build_host(g, cert)
            except (TheoremCounterexample, GraphError) as exc:
                _record(result, g, "host-construction", str(exc))
            else:
                hms = metric_summary(hg.host)
                if hms.center != frozenset(range(g.n)):
                    _record(result, g, "host-center", {"center": sorted(hms.center)})
                if not chordality_index(hg.host).is_chordal:
                    _record(result, g, "host-chordal", {})
    if len(ms.center) >= 2:
        sub = induced_subgraph(g, ms.center)
        result.instances_checked += 1
        cert = is_center_of_chordal(sub.graph)
        if not cert.verdict:
            _record(result, g, "center-of-chordal-backward", {
                "center": sorted(ms.center), "reason": cert.reason,
            })


_CHECKS = {
    "bounds": _bounds_check,
    "center": _center_check,
    "stretched": _stretched_check,
    "selfcentered": _selfcentered_check,
}


def _run_chunk(args) -> SuiteResult:
    name, n, lo, hi, forward_max_n = args
    result = SuiteResult(name, n)
    for g in _connected_graphs(n, lo, hi):
        if name == "roundtrip":
            _roundtrip_check(g, result, forward_max_n)
        else:
            _CHECKS[name](g, result)
    return result


def run_suite(
    name: str, max_n: int, jobs: int = 1, forward_max_n: int | None = None
) -> SuiteResult:
    """Run one named suite over all connected graphs with n <= max_n."""
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES}")
    if forward_max_n is None:
        forward_max_n = max_n
    total = SuiteResult(name, max_n)
    tasks = []
    for n in range(1, max_n + 1):
        space = _mask_space(n)
        chunks = max(1, min(jobs * 4, space)) if jobs > 1 else 1
        step = (space + chunks - 1) // chunks
        for lo in range(0, space, step):
            tasks.append((name, n, lo, min(lo + step, space), forward_max_n))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_run_chunk, tasks):
                total.merge(part)
    else:
        for task in tasks:
            total.merge(_run_chunk(task))
    return total


def run_suites(names, max_n: int, jobs: int = 1) -> list[SuiteResult]:
    expanded = list(SUITE_NAMES) if "all" in names else list(names)
    return [run_suite(nm, max_n, jobs) for nm in expanded]


# -- construction sweeps used by the acceptance tests ---------------------------

def hull_sweep(max_n: int, jobs: int = 1) -> SuiteResult:
    """Center-containing hull existence and bounds on every connected graph."""
    result = SuiteResult("hull", max_n)
    for n in range(1, max_n + 1):
        for g in _connected_graphs(n, 0, _mask_space(n)):
            result.graphs_checked += 1
            ecc = eccentricities(g)
            D = max(ecc)
            k = chordality_index(g).k_index
            result.instances_checked += 1
            try:
                S = build_t_stretched(g, (D + 1) // 2) if D >= 2 else None
                hull = center_hull(g, S)
            except TheoremCounterexample as exc:
                _record(result, g, "hull", str(exc))
                continue
            center = frozenset(v for v, e in enumerate(ecc) if e == min(ecc))
            if not center <= hull.vertices:
                _record(result, g, "hull-contains-center", {})
            if hull.radius > 2 * (k // 2) or hull.diameter > 3 * (k // 2):
                _record(result, g, "hull-bounds", {
                    "rad": hull.radius, "diam": hull.diameter, "k": k,
                })
    return result


def kchordal_host_sweep(max_n: int, ks=(4, 5, 6)) -> SuiteResult:
    """Universal-pair hosts for every connected graph of matching chordality."""
    result = SuiteResult("kchordal-hosts", max_n)
    for n in range(1, max_n + 1):
        for g in _connected_graphs(n, 0, _mask_space(n)):
            k_g = chordality_index(g).k_index
            result.graphs_checked += 1
            for k in ks:
                if k_g > k:
                    continue
                result.instances_checked += 1
                try:
                    host_kchordal(g, k)
                except TheoremCounterexample as exc:
                    _record(result, g, "kchordal-host", {"k": k, "error": str(exc)})
    return result

# -- per-graph clause battery ---------------------------------------------------

@dataclass(frozen=True)
class VerifyClause:
    name: str
    applicable: bool
    passed: bool
    info: str = ""

    @property
    def ok(self) -> bool:
        return not self.applicable or self.passed


def verify_graph(g: Graph) -> list[VerifyClause]:
    """Run every applicable theorem clause on one graph."""
    out: list[VerifyClause] = []
    connected = is_connected(g)
    out.append(VerifyClause("connected-input", True, connected))
    if not connected:
        return out
    krep = chordality_index(g)
    ms = metric_summary(g)
    R, D = ms.radius, ms.diameter
    rep = check_bounds(g)
    out.append(VerifyClause(
        "radius-diameter-window", True, rep.all_hold,
        f"R={R} D={D} k={rep.k_index}",
    ))

    center = ms.center
    for (a, b) in diametrical_pairs(g):
        ball = neighborhood_within(g, {a}, R) & neighborhood_within(g, {b}, R)
        if not center <= ball:
            out.append(VerifyClause("center-in-reach-balls", True, False, f"pair=({a},{b})"))
            break
    else:
        out.append(VerifyClause("center-in-reach-balls", D >= 1, True))

    try:
        S_hull = build_t_stretched(g, (D + 1) // 2) if D >= 2 else None
        hull = center_hull(g, S_hull)
        out.append(VerifyClause(
            "center-hull-bounds", True, True,
            f"|H|={len(hull.vertices)} rad={hull.radius} diam={hull.diameter}",
        ))
    except TheoremCounterexample as exc:
        out.append(VerifyClause("center-hull-bounds", True, False, str(exc)))

    t_max = min((D + 1) // 2, D - 1)
    stretched_ok = True
    info = []
    for t in range(1, t_max + 1):
        try:
            S = build_t_stretched(g, t)
        except TheoremCounterexample as exc:
            stretched_ok = False
            info.append(f"t={t}: {exc}")
            continue
        if g.n <= 10 and not brute_check_stretched(g, tuple(S.T), t).valid:
            stretched_ok = False
            info.append(f"t={t}: oracle dissent on T={sorted(S.T)}")
        if not verify_basic_sds(g, S, krep.k_index).ok:
            stretched_ok = False
            info.append(f"t={t}: basic properties failed")
    out.append(VerifyClause(
        "stretched-sets", t_max >= 1, stretched_ok, "; ".join(info)
    ))

    if not krep.is_chordal:
        out.append(VerifyClause("chordal-input", True, False, f"k={krep.k_index}"))
        return out
    out.append(VerifyClause("chordal-input", True, True))

    sub = induced_subgraph(g, center)
    out.append(VerifyClause("center-connected", True, is_connected(sub.graph)))
    if is_connected(sub.graph):
        sub_diam = max(eccentricities(sub.graph))
        out.append(VerifyClause("center-diameter-at-most-3", True, sub_diam <= 3,
                                f"diam={sub_diam}"))
    if g.n <= 6:
        out.append(VerifyClause(
            "induced-paths-stay-in-center", True,
            _induced_paths_stay_in_center(g, center),
        ))

    try:
        crep = center_structure_class(g)
        out.append(VerifyClause(f"center-class-{crep.case}", True, crep.passed))
    except TheoremCounterexample as exc:
        out.append(VerifyClause("center-class", True, False, str(exc)))

    if D >= 2:
        try:
            Smax = extend_to_maximal(g, build_t_stretched(g, D // 2))
            ci = check_center_intersection(g, Smax)
            out.append(VerifyClause("center-intersection-biconditional",
                                    ci.applicable, ci.holds))
            dom_ok = True
            for u in sorted(Smax.T):
                dominating_vertex_for_separator(g, Smax.separators[u])
            out.append(VerifyClause("separator-dominating-vertex", True, dom_ok))
        except TheoremCounterexample as exc:
            out.append(VerifyClause("center-intersection-biconditional", True, False, str(exc)))

    sc_result = SuiteResult("selfcentered", g.n)
    _selfcentered_check(g, sc_result)
    out.append(VerifyClause(
        "selfcentered-certificate", True, sc_result.ok,
        "; ".join(c["check"] for c in sc_result.counterexamples),
    ))

    d3 = check_diam3_structure(g)
    out.append(VerifyClause("diam3-separating-dominating-cliques",
                            d3.applicable, d3.all_pass if d3.applicable else True))

    if g.n >= 2:
        cert = is_center_of_chordal(g)
        if cert.verdict:
            try:
                build_host(g, cert)
                out.append(VerifyClause("host-roundtrip", True, True))
            except (TheoremCounterexample, GraphError) as exc:
                out.append(VerifyClause("host-roundtrip", True, False, str(exc)))
        else:
            out.append(VerifyClause("host-roundtrip", False, True,
                                    f"verdict no ({cert.reason})"))
    return out
