"""Stretched diametrical sets: the two defining conditions and the builder.

A diametrical set T is t-stretched when, for every member u, the distance
level N(u, t) leaves the rest of T connected (C1) and the minimum cut X_u
inside that level admits no far-away vertex that is cut off yet stays at
distance >= t from the cut (C2).  The builder repairs failing members by
swapping in their violating witnesses.

Run:  python demos/04_stretched_sets.py
"""

from chordalcenters import Graph, build_t_stretched, check_t_stretched, extend_to_maximal
from chordalcenters.io import fixture_fig1
from chordalcenters.oracle import brute_check_stretched

# Two joined cliques A = {6,7}, B = {8,9}; three length-2 paths hang off
# them: one into A, one into B, and one reaching only part of B.
g = Graph(10, [(0, 1), (1, 6), (1, 7), (2, 3), (3, 8), (3, 9), (4, 5), (5, 8),
               (6, 7), (8, 9), (6, 8), (6, 9), (7, 8), (7, 9)])
a0, b0, c0 = 0, 2, 4

print("pair {a0,b0}: ", check_t_stretched(g, {a0, b0}, 2).ok)
print("pair {a0,c0}: ", check_t_stretched(g, {a0, c0}, 2).ok)
print("the c-path tail attaches to only part of B, so its start stays close")
print("to every minimum cut; the b-path start does not, and fails C2.")
verdict = brute_check_stretched(g, (a0, b0), 2)
print(f"oracle agrees: {verdict.status} ({verdict.failing_condition} at member {verdict.failing_member})\n")

fig1, labels = fixture_fig1()
S = build_t_stretched(fig1, 2)
print("fig1 at t=2: builder returned T =", sorted(labels[v] for v in S.T))
print("the lexicographically first diametrical pair {1,4} fails C2, so the")
print("builder swapped twice before the definition-level check passed:")
print("  {1,4} valid?", check_t_stretched(fig1, {0, 3}, 2).ok)
for u in sorted(S.T):
    sep = S.separators[u]
    print(f"  member {labels[u]}: X = {sorted(labels[v] for v in sep.cut)}")

sun = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)])
M = extend_to_maximal(sun, build_t_stretched(sun, 1))
print("\nsun at t=1 extends to the maximal triple of tips:", sorted(M.T))
print("with the triangle edges as their cuts:",
      {u: sorted(M.separators[u].cut) for u in sorted(M.T)})
