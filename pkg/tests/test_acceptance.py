"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Everything here is exact (zero tolerance); the exhaustive criteria stream
every labeled graph of the stated orders.
"""

import time

from chordalcenters import (
    chordality_index,
    disjoint_dominating_cliques,
    eccentricities,
    host_pendant,
    host_two_cliques,
    induced_subgraph,
    is_biconnected,
    is_center_of_chordal,
    metric_summary,
)
from chordalcenters.io import fixture_fig1
from chordalcenters.suites import (
    _connected_graphs,
    _mask_space,
    hull_sweep,
    kchordal_host_sweep,
    run_suite,
)

_stretched_result = {}


def _report(num, ok, detail):
    line = f"CRITERION {num}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    assert ok, line


def test_criterion_1_fixture_properties():
    start = time.perf_counter()
    g, labels = fixture_fig1()
    chordal = chordality_index(g).is_chordal
    biconn = is_biconnected(g)
    ms = metric_summary(g)
    center_labels = {labels[v] for v in ms.center}
    sub = induced_subgraph(g, ms.center)
    center_radius = metric_summary(sub.graph).radius
    center_is_k4 = sub.graph.edge_count() == 6 and sub.graph.n == 4
    ddc = disjoint_dominating_cliques(g)
    cert = is_center_of_chordal(g)
    elapsed = time.perf_counter() - start
    ok = (
        chordal
        and biconn
        and ms.radius == 2
        and ms.diameter == 3
        and center_radius == 1
        and center_labels == {"3", "5", "8", "9"}
        and center_is_k4
        and ddc is None
        and cert.verdict is False
        and elapsed < 1.0
    )
    _report(1, ok, f"fixture checks in {elapsed * 1000:.0f} ms")


def test_criterion_2_radius_diameter_window_n7():
    r = run_suite("bounds", 7)
    _report(
        2,
        r.ok and r.graphs_checked == 1893732,
        f"{r.graphs_checked} connected graphs, {len(r.counterexamples)} counterexamples",
    )


def test_criterion_3_chordal_center_structure_n7():
    r = run_suite("center", 7)
    _report(
        3,
        r.ok,
        f"{r.graphs_checked} connected chordal graphs, "
        f"{len(r.counterexamples)} counterexamples",
    )


def test_criterion_4_center_of_chordal_roundtrip():
    r = run_suite("roundtrip", 7, forward_max_n=6)
    _report(
        4,
        r.ok,
        f"{r.graphs_checked} connected chordal graphs (hosts up to n=6, "
        f"backward to n=7), {len(r.counterexamples)} failures",
    )


def test_criterion_5_self_centered_equivalence_n7():
    r = run_suite("selfcentered", 7)
    _report(
        5,
        r.ok,
        f"{r.graphs_checked} connected chordal graphs, "
        f"{len(r.counterexamples)} failures",
    )


def test_criterion_6_stretched_existence_and_properties_n6():
    r = run_suite("stretched", 6)
    _stretched_result["n6"] = r
    bad = [
        ce for ce in r.counterexamples if ce["check"] != "separator-oracle-cardinality"
    ]
    _report(
        6,
        not bad and r.graphs_checked == 27476,
        f"{r.graphs_checked} connected graphs, {r.instances_checked} instances,"
        f" {len(bad)} failures",
    )


def test_criterion_7_separator_oracle_equivalence():
    r = _stretched_result.get("n6") or run_suite("stretched", 6)
    bad = [
        ce for ce in r.counterexamples if ce["check"] == "separator-oracle-cardinality"
    ]
    _report(7, not bad, f"constrained-cut cardinalities, {len(bad)} mismatches")


def test_criterion_8_construction_eccentricity_tables():
    checked = two_cliques = pendants = 0
    failures = []
    for n in range(2, 7):
        for g in _connected_graphs(n, 0, _mask_space(n)):
            if not chordality_index(g).is_chordal:
                continue
            ms = metric_summary(g)
            if ms.diameter > 3:
                continue
            pair = disjoint_dominating_cliques(g)
            if pair is not None:
                two_cliques += 1
                hg = host_two_cliques(g, *pair)
                ecc = eccentricities(hg.host)
                rows = hg.host.apsp()
                w1, w1p = hg.added["w1"], hg.added["w1'"]
                w2, w2p = hg.added["w2"], hg.added["w2'"]
                if not (
                    all(ecc[y] == 3 for y in range(g.n))
                    and rows[w1][w2p] == 4
                    and rows[w1p][w2p] == 5
                    and min(ecc) == 3
                    and max(ecc) == 5
                ):
                    failures.append(("two-cliques", g))
            sub = induced_subgraph(g, ms.center)
            sub_ecc = eccentricities(sub.graph)
            if min(sub_ecc) == 2 and max(sub_ecc) == 2:
                pendants += 1
                hg = host_pendant(g)
                ecc = eccentricities(hg.host)
                targets = [v for v in range(g.n) if ms.ecc[v] == 2]
                if not (
                    all(ecc[v] == 3 for v in range(g.n))
                    and all(ecc[w] == 4 for w in range(g.n, hg.host.n))
                    and len(targets) == hg.host.n - g.n
                ):
                    failures.append(("pendant", g))
            checked += 1
    sweep = kchordal_host_sweep(5, ks=(4, 5, 6))
    ok = (
        not failures
        and sweep.ok
        and two_cliques > 0
        and pendants > 0
        and sweep.instances_checked > 0
    )
    _report(
        8,
        ok,
        f"{two_cliques} two-clique hosts, {pendants} pendant hosts, "
        f"{sweep.instances_checked} universal-pair hosts, "
        f"{len(failures) + len(sweep.counterexamples)} failures",
    )


def test_criterion_9_center_hull_bounds_n6():
    r = hull_sweep(6)
    _report(
        9,
        r.ok and r.graphs_checked == 27476,
        f"{r.graphs_checked} connected graphs, {len(r.counterexamples)} failures",
    )
