import networkx as nx
import pytest
from hypothesis import given

from permpoly.corpus import _nx
from permpoly.errors import ParseError
from permpoly.formats import (
    format_edge_list,
    format_graph6,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    sniff_format,
)
from permpoly.graph import Graph

from conftest import K2
from test_graph import graphs


def test_edge_list_k2():
    assert parse_edge_list("2 1\n0 1") == K2


def test_edge_list_comments_and_blanks():
    text = "# a square\n4 4\n0 1  # first\n\n1 2\n2 3\n3 0\n"
    assert parse_edge_list(text).m == 4


@pytest.mark.parametrize(
    "text",
    ["2 1\n0 2", "", "2\n0 1", "2 2\n0 1", "3 1\n1 1", "2 1\n0 x", "a b\n"],
)
def test_edge_list_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_graph6_k4():
    g = parse_graph6("C~")
    assert (g.n, g.m) == (4, 6)


def test_graph6_header_and_empty():
    assert parse_graph6(">>graph6<<A_") == K2
    assert parse_graph6("?") == Graph.from_edges(0, ())


@pytest.mark.parametrize("text", ["C~~", "C", "C\x7f", "Cé", "", "B@"])
def test_graph6_errors(text):
    with pytest.raises(ParseError):
        parse_graph6(text)


@given(graphs(12))
def test_graph6_matches_networkx(g):
    ours = format_graph6(g)
    theirs = nx.to_graph6_bytes(_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert parse_graph6(ours) == g


def test_graph6_large_n():
    g = Graph.from_edges(100, [(0, 99), (5, 6)])
    assert parse_graph6(format_graph6(g)) == g


@given(graphs(10))
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_sniff():
    assert sniff_format("C~\n") == "graph6"
    assert sniff_format("2 1\n0 1\n") == "edge_list"
    assert sniff_format("0 0\n") == "edge_list"
    assert parse_graph("C~") == parse_graph("C~", "graph6")
    with pytest.raises(ParseError):
        parse_graph("C~", "dot")
