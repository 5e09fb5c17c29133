"""Deciding which graphs are centers of chordal graphs, with witnesses.

A graph with at least two vertices is the center of some chordal graph
exactly when it is connected, chordal, has diameter at most three, and
either its induced center is self-centered with radius two or it carries
two disjoint dominating cliques.  Yes-verdicts come with evidence and a
host graph; no-verdicts name the first failing condition.

Run:  python demos/05_center_certificates_and_hosts.py
"""

from chordalcenters import (
    Graph,
    build_host,
    is_center_of_chordal,
    metric_summary,
    to_graph6,
)
from chordalcenters.characterize import DisjointDominatingCliques, SelfCenteredRadiusTwo
from chordalcenters.io import fixture_fig1


def inspect(name, g):
    cert = is_center_of_chordal(g)
    print(f"{name}: verdict = {'yes' if cert.verdict else 'no'}")
    if not cert.verdict:
        print(f"  reason: {cert.reason}")
        return
    if isinstance(cert.evidence, DisjointDominatingCliques):
        print(f"  disjoint dominating cliques {sorted(cert.evidence.k1)}"
              f" and {sorted(cert.evidence.k2)}")
    elif isinstance(cert.evidence, SelfCenteredRadiusTwo):
        print(f"  self-centered radius-two center {sorted(cert.evidence.center)}")
        print(f"  separator family {[sorted(c) for c in cert.evidence.family.cliques]}")
    hg = build_host(g, cert)
    ms = metric_summary(hg.host)
    print(f"  host ({hg.construction}): graph6 {to_graph6(hg.host)},"
          f" n={hg.host.n}, center recovered = {ms.center == frozenset(range(g.n))}")
    print()


inspect("single edge", Graph(2, [(0, 1)]))

sun = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)])
inspect("sun (self-centered, radius two)", sun)

fig1, _ = fixture_fig1()
inspect("fixture fig1", fig1)
print("fig1 is chordal with diameter three, yet neither structural condition")
print("holds, so no chordal graph has it as a center.")
