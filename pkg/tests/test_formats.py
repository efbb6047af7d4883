import networkx as nx
import numpy as np
import pytest

from kiteratio.formats import (
    EdgeListError,
    Graph6ByteError,
    Graph6LengthError,
    Graph6TrailingError,
    format_edge_list,
    graph6_decode,
    graph6_encode,
    parse_edge_list,
)
from kiteratio.graph import Graph, make_complete, make_kite, make_path
from oracles import random_connected_graph


def nx_graph6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


@pytest.mark.parametrize("g,text", [
    (make_complete(4), "C~"),
    (make_complete(3), "Bw"),
    (Graph.from_edges(1, []), "@"),
])
def test_known_strings(g, text):
    assert nx_graph6(g) == text
    assert graph6_encode(g) == text
    assert graph6_decode(text) == g


def test_matches_reference_encoder(rng):
    for n in range(1, 65, 3):
        g = random_connected_graph(rng, n, 0.2) if n > 1 else Graph.from_edges(1, [])
        assert graph6_encode(g) == nx_graph6(g)


def test_large_n_size_field():
    for n in (62, 63, 64):
        g = make_path(n)
        text = graph6_encode(g)
        assert text == nx_graph6(g)
        assert graph6_decode(text) == g


def test_round_trip_random(rng):
    for _ in range(1000):
        n = int(rng.integers(3, 13))
        g = random_connected_graph(rng, n, float(rng.random()))
        assert graph6_decode(graph6_encode(g)) == g


def test_encode_decode_identity_on_strings(rng):
    for _ in range(200):
        g = random_connected_graph(rng, int(rng.integers(2, 20)), 0.3)
        text = graph6_encode(g)
        assert graph6_encode(graph6_decode(text)) == text


def test_header_and_newline():
    assert graph6_decode(">>graph6<<C~\n") == make_complete(4)


def test_errors_are_distinguished():
    with pytest.raises(Graph6LengthError):
        graph6_decode("C")  # n=4 needs one data byte
    with pytest.raises(Graph6LengthError):
        graph6_decode("")
    with pytest.raises(Graph6ByteError):
        graph6_decode("C ")
    with pytest.raises(Graph6ByteError):
        graph6_decode("C\x7f")
    with pytest.raises(Graph6TrailingError):
        graph6_decode("C~~")
    with pytest.raises(Graph6TrailingError):
        graph6_decode("Bx")  # K3 with a padding bit set
    with pytest.raises(Graph6LengthError):
        graph6_decode("~~??????")


def test_edge_list_round_trip():
    g = make_kite(3, 4)
    text = format_edge_list(g)
    assert text.startswith("n 6\n")
    assert parse_edge_list(text) == g
    assert parse_edge_list("# comment\nn 3\n0 1 # edge\n1 2\n") == make_path(3)


@pytest.mark.parametrize("text", ["", "0 1\n", "n 3\n0\n", "n 3\n0 x\n", "n 3\n0 5\n"])
def test_edge_list_errors(text):
    with pytest.raises(EdgeListError):
        parse_edge_list(text)
