import pytest

from chordalcenters import (
    Graph,
    GraphError,
    PreconditionError,
    dominates,
    induced_subgraph,
    is_diametrical,
    is_self_centered,
    metric_summary,
)
from chordalcenters.oracle import enumerate_graphs, floyd_apsp

from conftest import path_graph


def test_path_center(p5):
    ms = metric_summary(p5)
    assert (ms.radius, ms.diameter) == (2, 4)
    assert ms.center == frozenset({2})


def test_fig1_metrics(fig1):
    ms = metric_summary(fig1)
    assert (ms.radius, ms.diameter) == (2, 3)
    assert ms.center == frozenset({2, 4, 7, 8})  # labels 3,5,8,9
    sub = induced_subgraph(fig1, ms.center)
    assert metric_summary(sub.graph).radius == 1
    # the center induces K4, so the chain stabilises immediately after C^1
    assert ms.iterated_center(2) == ms.center
    assert ms.iterated_centers[0] == frozenset(range(9))


def test_k1_convention(k1):
    ms = metric_summary(k1)
    assert (ms.radius, ms.diameter) == (0, 0)
    assert ms.center == frozenset({0})
    assert ms.self_centered


def test_disconnected_input_rejected():
    with pytest.raises(PreconditionError):
        metric_summary(Graph(3, [(0, 1)]))


def test_iterated_centers_stop_on_disconnected_center():
    # two hub vertices joined by two length-2 paths, a pendant on each hub:
    # the center is the two middle vertices, which are non-adjacent
    g = Graph(6, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (1, 5)])
    ms = metric_summary(g)
    assert ms.center == frozenset({2, 3})
    assert ms.iterated_centers == (frozenset(range(6)), frozenset({2, 3}))


def test_self_centered(c5, p4, sun3):
    assert is_self_centered(c5)
    assert not is_self_centered(p4)
    assert is_self_centered(sun3)
    assert metric_summary(sun3).radius == 2


def test_is_diametrical(p4, fig1):
    assert is_diametrical(p4, {0, 3})
    assert not is_diametrical(p4, {0, 2})
    assert is_diametrical(fig1, {0, 3})  # labels 1 and 4 at distance 3
    with pytest.raises(GraphError):
        is_diametrical(p4, {0})


def test_dominates(k4, p4, fig1):
    assert dominates(k4, {0})
    assert dominates(p4, {1, 2})
    assert not dominates(p4, {1})
    # labels {5,3}: label 7 has neighbors {6,8} only, so this pair misses it
    assert not dominates(fig1, {4, 2})
    assert dominates(fig1, {4, 2, 7})  # labels {5,3,8}
    assert not dominates(p4, set())


def test_metrics_match_floyd_oracle_exhaustively():
    for n in range(1, 7):
        for g in enumerate_graphs(n, "connected"):
            dist = floyd_apsp(g)
            ecc = [max(row) for row in dist]
            ms = metric_summary(g)
            assert ms.ecc == tuple(ecc)
            assert ms.radius == min(ecc) and ms.diameter == max(ecc)
            assert ms.center == frozenset(
                v for v in range(n) if ecc[v] == min(ecc)
            )


def test_radius_diameter_window_small():
    for n in range(1, 6):
        for g in enumerate_graphs(n, "connected"):
            ms = metric_summary(g)
            assert ms.radius <= ms.diameter <= 2 * ms.radius
            assert ms.center


def test_long_path_iterated_centers():
    ms = metric_summary(path_graph(7))
    assert ms.iterated_centers == (frozenset(range(7)), frozenset({3}))
    assert ms.iterated_center(5) == frozenset({3})
