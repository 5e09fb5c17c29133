from chordalcenters import Graph
from chordalcenters.suites import (
    hull_sweep,
    kchordal_host_sweep,
    run_suite,
    run_suites,
    verify_graph,
    _connected_graphs,
    _mask_space,
)
from chordalcenters.oracle import enumerate_graphs

from conftest import fig1_graph


def test_fast_enumeration_matches_oracle():
    for n in range(1, 6):
        fast = list(_connected_graphs(n, 0, _mask_space(n)))
        slow = list(enumerate_graphs(n, "connected"))
        assert fast == slow


def test_all_suites_pass_small():
    for r in run_suites(["all"], 4):
        assert r.ok, r.counterexamples
        assert r.graphs_checked > 0


def test_suite_counts_n5():
    r = run_suite("bounds", 5)
    assert r.graphs_checked == 1 + 1 + 4 + 38 + 728
    assert r.ok


def test_jobs_produce_identical_results():
    seq = run_suite("stretched", 5)
    par = run_suite("stretched", 5, jobs=2)
    assert (seq.graphs_checked, seq.instances_checked) == (
        par.graphs_checked,
        par.instances_checked,
    )
    assert seq.counterexamples == par.counterexamples


def test_roundtrip_forward_cap():
    full = run_suite("roundtrip", 5)
    capped = run_suite("roundtrip", 5, forward_max_n=4)
    assert capped.instances_checked < full.instances_checked
    assert capped.ok and full.ok


def test_sweeps_small():
    assert hull_sweep(4).ok
    assert kchordal_host_sweep(4).ok


def test_verify_graph_on_fixture():
    clauses = verify_graph(fig1_graph())
    assert all(c.ok for c in clauses)
    names = {c.name for c in clauses}
    assert "radius-diameter-window" in names
    assert "center-class-D=2R-1" in names
    host = next(c for c in clauses if c.name == "host-roundtrip")
    assert not host.applicable  # fig1 has a no verdict


def test_verify_graph_on_disconnected():
    clauses = verify_graph(Graph(3, [(0, 1)]))
    assert clauses[0].name == "connected-input" and not clauses[0].passed
    assert len(clauses) == 1


def test_verify_graph_non_chordal(c5):
    clauses = verify_graph(c5)
    chordal = next(c for c in clauses if c.name == "chordal-input")
    assert not chordal.passed
    window = next(c for c in clauses if c.name == "radius-diameter-window")
    assert window.passed


def test_verify_graph_yes_verdict(sun3):
    clauses = verify_graph(sun3)
    assert all(c.ok for c in clauses)
    host = next(c for c in clauses if c.name == "host-roundtrip")
    assert host.applicable and host.passed
