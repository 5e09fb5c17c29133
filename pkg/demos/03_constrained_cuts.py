"""Minimum separators constrained to a distance level around a vertex.

For a vertex u and far-away targets, the cut must live inside N(u, t), the
set of vertices at distance exactly t from u.  A unit-capacity flow with
vertex splitting finds the minimum such cut; a subset-enumeration oracle
confirms the cardinality.

Run:  python demos/03_constrained_cuts.py
"""

from chordalcenters import min_separator_within, neighborhood_at
from chordalcenters.io import fixture_fig1
from chordalcenters.oracle import brute_min_separator

g, labels = fixture_fig1()


def lab(vs):
    return sorted(labels[v] for v in vs)


u, target = 0, 3  # labels 1 and 4, at distance three
for t in (1, 2):
    level = neighborhood_at(g, {u}, t)
    cs = min_separator_within(g, u, {target}, t)
    brute = brute_min_separator(g, u, {target}, level)
    print(f"t={t}: N(1,{t}) = {lab(level)}")
    print(f"  flow cut  : {lab(cs.cut)}")
    print(f"  oracle cut: {lab(brute)} (same size: {len(brute) == len(cs.cut)})")
    print(f"  near side : {lab(cs.side_u)}")
    print(f"  far side  : {lab(cs.side_rest)}")
    print()

print("at t=2 the cut {3,9} is forced: vertex 4 has no other neighbors.")
