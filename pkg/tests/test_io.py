import pytest

from chordalcenters import Graph, parse_graph, parse_graph6, to_graph6
from chordalcenters.io import (
    FormatError,
    fixture_fig1,
    parse_edge_list,
    to_edge_list,
)
from chordalcenters.oracle import enumerate_graphs

from conftest import complete_graph, fig1_graph, path_graph


def test_parse_graph6_k4():
    g = parse_graph6("C~")
    assert g == complete_graph(4)


def test_parse_graph6_header_and_whitespace():
    assert parse_graph6(">>graph6<<C~\n") == complete_graph(4)


def test_graph6_roundtrip_known():
    for g in (path_graph(4), complete_graph(5), fig1_graph(), Graph(1), Graph(3)):
        assert parse_graph6(to_graph6(g)) == g


def test_serialize_then_parse_is_identity_on_canonical_strings():
    for g in enumerate_graphs(5, "connected"):
        s = to_graph6(g)
        assert to_graph6(parse_graph6(s)) == s


def test_parse_graph6_errors():
    with pytest.raises(FormatError):
        parse_graph6("")
    with pytest.raises(FormatError):
        parse_graph6("C~~")  # excess body
    with pytest.raises(FormatError):
        parse_graph6("C")  # truncated body


def test_parse_edge_list_p4():
    g, labels = parse_edge_list("0 1\n1 2\n2 3")
    assert g == path_graph(4)
    assert labels == ("0", "1", "2", "3")


def test_parse_edge_list_labels_first_seen():
    g, labels = parse_edge_list("b a\n# comment\n\na c  # tail comment\n")
    assert labels == ("b", "a", "c")
    assert g.has_edge(0, 1) and g.has_edge(1, 2) and not g.has_edge(0, 2)


def test_parse_edge_list_errors():
    with pytest.raises(FormatError):
        parse_edge_list("0 0")
    with pytest.raises(FormatError):
        parse_edge_list("0 1\n1 0")
    with pytest.raises(FormatError):
        parse_edge_list("0 1 2")
    with pytest.raises(FormatError):
        parse_edge_list("# nothing\n")


def test_edge_list_roundtrip():
    g = fig1_graph()
    text = to_edge_list(g)
    g2, labels = parse_edge_list(text)
    recovered = {frozenset((int(labels[u]), int(labels[v]))) for u, v in g2.edges()}
    assert recovered == {frozenset(e) for e in g.edges()}
    assert g2.n == g.n


def test_parse_graph_dispatch():
    g, labels = parse_graph("C~", "g6")
    assert g == complete_graph(4) and labels == ("0", "1", "2", "3")
    g, labels = parse_graph("x y", "edge-list")
    assert g.n == 2 and labels == ("x", "y")
    with pytest.raises(FormatError):
        parse_graph("C~", "dot")


def test_fixture_fig1_matches_edge_list():
    g, labels = fixture_fig1()
    assert g == fig1_graph()
    assert labels == tuple(str(i) for i in range(1, 10))


def test_graph6_large_order_roundtrip():
    g = path_graph(62)
    assert parse_graph6(to_graph6(g)) == g
    with pytest.raises(FormatError):
        to_graph6(path_graph(63))
