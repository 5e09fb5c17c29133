from chordalcenters import (
    chordality_index,
    induced_subgraph,
    is_clique,
    maximal_cliques,
    simplicial_vertices,
)
from chordalcenters.chordality import is_perfect_elimination_ordering
from chordalcenters.oracle import brute_longest_induced_cycle, enumerate_graphs

from conftest import cycle_graph, sun3_graph


def test_cycle_is_its_own_longest_induced_cycle(c5):
    rep = chordality_index(c5)
    assert not rep.is_chordal
    assert rep.k_index == 5
    assert rep.witness_cycle == (0, 1, 2, 3, 4)
    assert rep.peo is None


def test_trees_are_chordal(p4):
    rep = chordality_index(p4)
    assert rep.is_chordal and rep.k_index == 3
    assert rep.witness_cycle is None and rep.peo is not None


def test_fig1_is_chordal(fig1):
    assert chordality_index(fig1).is_chordal


def test_witness_cycle_tiebreak_is_lexicographic(c6):
    rep = chordality_index(c6)
    assert rep.k_index == 6
    assert rep.witness_cycle == (0, 1, 2, 3, 4, 5)


def test_peo_eliminates_simplicial_vertices():
    for g in (sun3_graph(), cycle_graph(4)):
        rep = chordality_index(g)
        if not rep.is_chordal:
            continue
        remaining = frozenset(range(g.n))
        for v in rep.peo:
            sub = induced_subgraph(g, remaining)
            assert sub.to_sub(v) in simplicial_vertices(sub.graph)
            remaining -= {v}
            if len(remaining) == 0:
                break


def test_peo_checker_rejects_cycle_order(c4):
    assert not is_perfect_elimination_ordering(c4, (0, 1, 2, 3))


def test_simplicial_vertices(p4, k4, c4):
    assert simplicial_vertices(p4) == frozenset({0, 3})
    assert simplicial_vertices(k4) == frozenset(range(4))
    assert simplicial_vertices(c4) == frozenset()


def test_is_clique(fig1, p4):
    assert is_clique(fig1, {2, 4, 7, 8})  # labels 3,5,8,9
    assert is_clique(p4, {0, 1})
    assert not is_clique(p4, {0, 2})
    assert is_clique(p4, set())
    assert is_clique(p4, {2})


def test_maximal_cliques(k4, p4, sun3):
    assert maximal_cliques(k4) == [frozenset(range(4))]
    assert maximal_cliques(p4) == [frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3})]
    cliques = maximal_cliques(sun3)
    assert frozenset({0, 1, 2}) in cliques
    assert frozenset({0, 1, 3}) in cliques
    assert len(cliques) == 4


def test_chordality_index_matches_subset_oracle_exhaustively():
    for n in range(1, 6):
        for g in enumerate_graphs(n, "connected"):
            length, _ = brute_longest_induced_cycle(g)
            assert chordality_index(g).k_index == max(3, length)


def test_chordality_index_on_disconnected_graphs():
    from chordalcenters import Graph

    g = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)])
    assert chordality_index(g).k_index == 4
    assert chordality_index(Graph(3)).is_chordal


def test_peo_elimination_exhaustive_small():
    from chordalcenters import Graph, induced_subgraph

    for g in enumerate_graphs(5, "connected-chordal"):
        rep = chordality_index(g)
        remaining = frozenset(range(g.n))
        for v in rep.peo[:-1]:
            sub = induced_subgraph(g, remaining)
            assert sub.to_sub(v) in simplicial_vertices(sub.graph)
            remaining -= {v}
