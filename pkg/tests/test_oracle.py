import pytest

from chordalcenters import Graph, GraphError
from chordalcenters.oracle import (
    brute_check_stretched,
    brute_longest_induced_cycle,
    brute_min_separator,
    canonical_form,
    enumerate_graphs,
    floyd_apsp,
)



def test_enumeration_counts():
    assert sum(1 for _ in enumerate_graphs(1)) == 1
    assert sum(1 for _ in enumerate_graphs(3)) == 8
    assert sum(1 for _ in enumerate_graphs(3, "connected")) == 4
    assert sum(1 for _ in enumerate_graphs(4, "connected")) == 38
    assert sum(1 for _ in enumerate_graphs(5, "connected")) == 728


def test_enumeration_canonical_classes():
    # P4, K1,3, C4, paw, diamond, K4
    reps = list(enumerate_graphs(4, "connected", "canonical"))
    assert len(reps) == 6
    assert len({canonical_form(g) for g in reps}) == 6


def test_enumeration_budget():
    with pytest.raises(GraphError):
        next(enumerate_graphs(12))
    with pytest.raises(GraphError):
        next(enumerate_graphs(4, "sparse"))


def test_enumeration_chordal_filter():
    total = sum(1 for _ in enumerate_graphs(4, "connected-chordal"))
    assert total == 38 - 3  # exactly the three labeled C4s drop out


def test_brute_min_separator_examples(fig1, p4, k4):
    assert brute_min_separator(p4, 0, {3}, {1}) == frozenset({1})
    assert brute_min_separator(fig1, 0, {3}, {2, 5, 7, 8}) == frozenset({2, 8})
    assert brute_min_separator(k4, 0, {3}, {1, 2}) is None


def test_brute_min_separator_budget(fig1):
    with pytest.raises(GraphError):
        brute_min_separator(Graph(25), 0, {1}, set(range(2, 23)))
    with pytest.raises(GraphError):
        brute_min_separator(fig1, 0, {0, 3}, {1})


def test_brute_longest_induced_cycle(c6, k4, fig1):
    assert brute_longest_induced_cycle(c6) == (6, (0, 1, 2, 3, 4, 5))
    assert brute_longest_induced_cycle(k4)[0] == 3
    assert brute_longest_induced_cycle(fig1)[0] == 3
    assert brute_longest_induced_cycle(Graph(3, [(0, 1)])) == (0, None)


def test_brute_check_stretched_guards(k3, p4):
    assert brute_check_stretched(k3, (0, 1), 1).status == "not-applicable"
    assert brute_check_stretched(p4, (0, 2), 1).status == "not-applicable"
    assert brute_check_stretched(p4, (0, 3), 2).valid


def test_floyd_handles_disconnected():
    g = Graph(4, [(0, 1), (2, 3)])
    dist = floyd_apsp(g)
    assert dist[0][1] == 1 and dist[0][2] is None


def test_canonical_form_is_isomorphism_invariant():
    g1 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    g2 = Graph(4, [(2, 0), (0, 3), (3, 1)])  # another labeling of P4
    assert canonical_form(g1) == canonical_form(g2)
    assert canonical_form(g1) != canonical_form(Graph(4, [(0, 1), (1, 2), (1, 3)]))


def test_deterministic_stream_order():
    first = [g for _, g in zip(range(5), enumerate_graphs(4))]
    second = [g for _, g in zip(range(5), enumerate_graphs(4))]
    assert first == second


def test_brute_minimal_constrained_separators(fig1):
    from chordalcenters.oracle import brute_minimal_constrained_separators
    from chordalcenters import neighborhood_at

    cands = neighborhood_at(fig1, {0}, 2)
    mins = brute_minimal_constrained_separators(fig1, 0, {3}, cands)
    # the minimum cut is among the inclusion-minimal ones
    assert frozenset({2, 8}) in mins
    assert all(not any(a < b for a in mins) for b in mins)
