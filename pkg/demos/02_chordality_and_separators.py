"""Chordality recognition, longest induced cycles, and minimal separators.

Run:  python demos/02_chordality_and_separators.py
"""

from chordalcenters import (
    Graph,
    chordality_index,
    minimal_separators_chordal,
    simplicial_vertices,
)
from chordalcenters.io import fixture_fig1

c7 = Graph(7, [(i, (i + 1) % 7) for i in range(7)])
rep = chordality_index(c7)
print(f"seven-cycle: chordal={rep.is_chordal}, k={rep.k_index}, witness={rep.witness_cycle}")

# add one long chord and the lone induced cycle shortens
chorded = Graph(7, list(c7.edges()) + [(0, 3)])
rep = chordality_index(chorded)
print(f"plus chord 0-3: k={rep.k_index}, witness={rep.witness_cycle}")

fig1, _ = fixture_fig1()
rep = chordality_index(fig1)
print(f"\nfixture fig1: chordal={rep.is_chordal}")
print(f"  elimination order : {rep.peo}")
print(f"  simplicial        : {sorted(simplicial_vertices(fig1))}")
print(f"  minimal separators: {[sorted(s) for s in minimal_separators_chordal(fig1)]}")
print("every minimal separator above is a clique; the library re-checks that")
print("instead of assuming it.")

sun = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)])
print(f"\nsun: minimal separators = {[sorted(s) for s in minimal_separators_chordal(sun)]}")
print("exactly the three triangle edges; each cuts off the opposite tip.")
