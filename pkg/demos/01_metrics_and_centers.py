"""Tour of the metric toolbox: eccentricities, centers, iterated centers.

Run:  python demos/01_metrics_and_centers.py
"""

from chordalcenters import Graph, metric_summary
from chordalcenters.io import fixture_fig1


def show(name, g):
    ms = metric_summary(g)
    print(f"{name}: n={g.n}, m={g.edge_count()}")
    print(f"  eccentricities : {ms.ecc}")
    print(f"  radius/diameter: {ms.radius}/{ms.diameter}")
    print(f"  center         : {sorted(ms.center)}")
    print(f"  iterated chain : {[sorted(c) for c in ms.iterated_centers]}")
    print(f"  self-centered  : {ms.self_centered}")
    print()


path6 = Graph(6, [(i, i + 1) for i in range(5)])
show("path on six vertices", path6)

# a lollipop: triangle with a tail; the center sits where tail meets triangle
lollipop = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
show("lollipop", lollipop)

fig1, labels = fixture_fig1()
show("built-in fixture fig1", fig1)
ms = metric_summary(fig1)
print("fig1 center in its external labels:", sorted(labels[v] for v in ms.center))
print("the center induces a complete graph on four vertices, and the chain")
print("stabilises immediately:", [sorted(c) for c in ms.iterated_centers])
