"""Host graphs realising a given graph as the center of a larger one.

Every construction appends its new vertices after the existing indices, so
the embedding is the identity on 0..n-1, and every host is re-verified by
actual metric computation before being returned; the expected eccentricity
tables are asserted exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    GraphError,
    PreconditionError,
    TheoremCounterexample,
    induced_subgraph,
    is_connected,
)
from .chordality import chordality_index, is_chordal, is_clique
from .metrics import dominates, eccentricities, metric_summary
from .characterize import (
    CenterCertificate,
    DisjointDominatingCliques,
    is_center_of_chordal,
)


@dataclass(frozen=True)
class HostGraph:
    host: Graph
    embedding: tuple[int, ...]
    construction: str
    added: dict[str, int]
    verified: bool


def _verify_center(host: Graph, n_embedded: int, construction: str) -> None:
    ms = metric_summary(host)
    if ms.center != frozenset(range(n_embedded)):
        raise TheoremCounterexample(
            f"{construction}: host center differs from the embedded graph",
            host,
            {"center": sorted(ms.center), "expected": list(range(n_embedded))},
        )


def host_pendant(g: Graph) -> HostGraph:
    """One pendant on every eccentricity-two vertex.

    Needs a connected chordal input with diameter at most three whose induced
    center has radius two; that forces every eccentricity-two vertex to have
    another one at distance exactly two, which is what pushes the pendants to
    eccentricity four.  Diameter-two inputs where every vertex qualifies are
    accepted as well; verification arbitrates.
    """
    if not is_connected(g):
        raise PreconditionError("host_pendant needs a connected graph")
    if not is_chordal(g):
        raise PreconditionError("host_pendant needs a chordal input")
    ms = metric_summary(g)
    if ms.diameter > 3:
        raise PreconditionError(f"host_pendant needs diameter <= 3, got {ms.diameter}")
    sub = induced_subgraph(g, ms.center)
    if not is_connected(sub.graph) or min(eccentricities(sub.graph)) != 2:
        raise PreconditionError("host_pendant needs the induced center to have radius two")
    targets = [v for v in range(g.n) if ms.ecc[v] == 2]
    if not targets:
        raise PreconditionError("host_pendant found no eccentricity-two vertices")
    edges = list(g.edges())
    pendants = {}
    for i, a in enumerate(targets):
        w = g.n + i
        pendants[a] = w
        edges.append((a, w))
    host = Graph(g.n + len(targets), edges)

    if not is_chordal(host):
        raise TheoremCounterexample("pendant host is not chordal", host)
    hecc = eccentricities(host)
    for a, w in pendants.items():
        if hecc[a] != 3 or hecc[w] != 4:
            raise TheoremCounterexample(
                "pendant host eccentricity table mismatch",
                host,
                {"vertex": a, "ecc": hecc[a], "pendant_ecc": hecc[w]},
            )
    for b in range(g.n):
        if b not in pendants and hecc[b] != 3:
            raise TheoremCounterexample(
                "pendant host eccentricity table mismatch",
                host,
                {"vertex": b, "ecc": hecc[b]},
            )
    _verify_center(host, g.n, "host_pendant")
    return HostGraph(
        host,
        tuple(range(g.n)),
        "pendant",
        {f"w{i}": g.n + i for i in range(len(targets))},
        True,
    )


def host_two_cliques(g: Graph, K1, K2) -> HostGraph:
    """Two antenna pairs hung off two disjoint dominating cliques."""
    K1, K2 = frozenset(K1), frozenset(K2)
    if not is_connected(g):
        raise PreconditionError("host_two_cliques needs a connected graph")
    if not is_chordal(g):
        raise PreconditionError("host_two_cliques needs a chordal input")
    if max(eccentricities(g)) > 3:
        raise PreconditionError("host_two_cliques needs diameter <= 3")
    if K1 & K2:
        raise PreconditionError("the dominating cliques must be disjoint")
    for name, K in (("K1", K1), ("K2", K2)):
        if not K:
            raise PreconditionError(f"{name} is empty")
        if not is_clique(g, K):
            raise PreconditionError(f"{name} is not a clique")
        if not dominates(g, K):
            raise PreconditionError(f"{name} does not dominate the graph")

    w1, w1p, w2, w2p = g.n, g.n + 1, g.n + 2, g.n + 3
    edges = list(g.edges())
    edges += [(a, w1) for a in K1] + [(w1, w1p)]
    edges += [(a, w2) for a in K2] + [(w2, w2p)]
    host = Graph(g.n + 4, edges)

    if not is_chordal(host):
        raise TheoremCounterexample("two-clique host is not chordal", host)
    hecc = eccentricities(host)
    rows = host.apsp()
    checks = {
        "rad": min(hecc) == 3,
        "diam": max(hecc) == 5,
        "d(w1,w2')": rows[w1][w2p] == 4,
        "d(w2,w1')": rows[w2][w1p] == 4,
        "d(w1',w2')": rows[w1p][w2p] == 5,
        "embedded-ecc": all(hecc[y] == 3 for y in range(g.n)),
    }
    if not all(checks.values()):
        raise TheoremCounterexample(
            "two-clique host eccentricity table mismatch", host, checks
        )
    _verify_center(host, g.n, "host_two_cliques")
    return HostGraph(
        host,
        tuple(range(g.n)),
        "two-cliques",
        {"w1": w1, "w1'": w1p, "w2": w2, "w2'": w2p},
        True,
    )


def host_kchordal(g: Graph, k: int) -> HostGraph:
    """Two universal vertices with pendants; works only for k >= 4.

    For chordal targets the added universal pair creates induced four-cycles,
    which is exactly why k = 3 is rejected.
    """
    if k < 4:
        raise PreconditionError(
            "the universal-pair construction fails for chordal graphs; need k >= 4"
        )
    if not is_connected(g):
        raise PreconditionError("host_kchordal needs a connected graph")
    report = chordality_index(g)
    if report.k_index > k:
        raise PreconditionError(
            f"input has chordality index {report.k_index}, not {k}-chordal"
        )
    wu, wv, u, v = g.n, g.n + 1, g.n + 2, g.n + 3
    edges = list(g.edges())
    edges += [(x, wu) for x in range(g.n)]
    edges += [(x, wv) for x in range(g.n)]
    edges += [(u, wu), (v, wv)]
    host = Graph(g.n + 4, edges)

    host_k = chordality_index(host).k_index
    if host_k > k:
        raise TheoremCounterexample(
            "universal-pair host exceeds the chordality budget",
            host,
            {"host_k": host_k, "k": k},
        )
    _verify_center(host, g.n, "host_kchordal")
    return HostGraph(
        host,
        tuple(range(g.n)),
        "k-chordal",
        {"w_u": wu, "w_v": wv, "u": u, "v": v},
        True,
    )


def build_host(g: Graph, certificate: CenterCertificate | None = None) -> HostGraph:
    """Dispatch on the center-of-chordal certificate evidence.

    Clique evidence routes to the two-clique construction, self-centered
    evidence to the pendant construction; a no verdict is an error.
    """
    if certificate is None:
        certificate = is_center_of_chordal(g)
    if not certificate.verdict:
        raise GraphError(
            f"graph is not the center of a chordal graph (reason: {certificate.reason})"
        )
    if isinstance(certificate.evidence, DisjointDominatingCliques):
        return host_two_cliques(g, certificate.evidence.k1, certificate.evidence.k2)
    return host_pendant(g)
