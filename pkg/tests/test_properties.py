"""Property-based checks over random small graphs."""

from hypothesis import given, settings
from hypothesis import strategies as st

from chordalcenters import (
    Graph,
    bfs_from,
    chordality_index,
    components_after_removal,
    induced_subgraph,
    is_connected,
    metric_summary,
    min_separator_within,
    neighborhood_at,
    parse_graph6,
    to_graph6,
)
from chordalcenters.chordality import is_chordal
from chordalcenters.oracle import brute_longest_induced_cycle, brute_min_separator


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.integers(0, (1 << len(slots)) - 1))
    return Graph(n, (slots[b] for b in range(len(slots)) if mask >> b & 1))


@st.composite
def connected_graphs(draw, min_n=2, max_n=7):
    g = draw(graphs(min_n, max_n))
    if is_connected(g):
        return g
    # join the components along a spine to keep the draw
    comps = components_after_removal(g, set())
    extra = []
    anchors = [min(c) for c in comps]
    extra = list(zip(anchors, anchors[1:]))
    return Graph(g.n, list(g.edges()) + extra)


@given(graphs())
def test_bfs_is_one_lipschitz_on_edges(g):
    table = bfs_from(g, {0})
    for u, v in g.edges():
        du, dv = table[u], table[v]
        assert (du is None) == (dv is None)
        if du is not None:
            assert abs(du - dv) <= 1


@given(graphs(), st.integers(0, 8))
def test_neighborhood_levels_partition(g, t):
    reached = bfs_from(g, {0}).reached()
    levels = [neighborhood_at(g, {0}, i) for i in range(t + 1)]
    seen = set()
    for level in levels:
        assert not (level & seen)
        seen |= level
    assert seen <= reached


@given(graphs())
def test_components_partition_and_are_disconnected(g):
    X = {0}
    comps = components_after_removal(g, X)
    union = set()
    for c in comps:
        assert c and not (c & union)
        union |= c
        sub = induced_subgraph(g, c)
        assert is_connected(sub.graph)
    assert union == set(range(g.n)) - X
    for a in comps:
        for b in comps:
            if a is b:
                continue
            assert not any(g.has_edge(u, v) for u in a for v in b)


@given(graphs())
def test_graph6_roundtrip(g):
    assert parse_graph6(to_graph6(g)) == g


@given(connected_graphs())
def test_radius_diameter_center(g):
    ms = metric_summary(g)
    assert ms.radius <= ms.diameter <= 2 * ms.radius
    assert ms.center
    chain = ms.iterated_centers
    for earlier, later in zip(chain, chain[1:]):
        assert later <= earlier


@given(graphs(max_n=7))
@settings(max_examples=60)
def test_chordality_index_matches_subset_oracle(g):
    length, _ = brute_longest_induced_cycle(g)
    assert chordality_index(g).k_index == max(3, length)


@given(graphs(min_n=2, max_n=7), st.data())
@settings(max_examples=60)
def test_chordality_is_hereditary(g, data):
    if not is_chordal(g):
        return
    sub_vertices = data.draw(
        st.sets(st.integers(0, g.n - 1), min_size=1, max_size=g.n)
    )
    sub = induced_subgraph(g, sub_vertices)
    assert is_chordal(sub.graph)


@given(connected_graphs(min_n=3, max_n=7), st.data())
@settings(max_examples=80)
def test_min_separator_cardinality_matches_brute(g, data):
    ms = metric_summary(g)
    if ms.diameter < 2:
        return
    pairs = [
        (u, v)
        for u in range(g.n)
        for v in range(g.n)
        if u != v and g.distance(u, v) >= 2
    ]
    u, v = data.draw(st.sampled_from(pairs))
    t = data.draw(st.integers(1, max(1, g.distance(u, v) - 1)))
    cs = min_separator_within(g, u, {v}, t)
    brute = brute_min_separator(g, u, {v}, neighborhood_at(g, {u}, t))
    assert cs is not None and brute is not None
    assert len(cs.cut) == len(brute)
    assert cs.cut <= neighborhood_at(g, {u}, t)
