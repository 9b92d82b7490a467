"""Tests for hlindex.core.codec."""

import pytest

from hlindex.catalog.constructions import cycle_graph, heawood, path_graph
from hlindex.core.codec import (
    detect_format,
    edge_list_decode,
    edge_list_encode,
    graph6_decode,
    graph6_encode,
    iter_graph6_lines,
    parse_graphs,
)
from hlindex.core.graph import Graph
from hlindex.errors import Graph6Error, GraphError

# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


class TestGraph6:
    def test_single_edge(self):
        assert graph6_encode(path_graph(2)) == "A_"
        assert graph6_decode("A_") == path_graph(2)

    def test_empty_graph(self):
        assert graph6_decode("?") == Graph.empty(0)

    def test_heawood_roundtrip(self, heawood_graph):
        assert graph6_decode(graph6_encode(heawood_graph)) == heawood_graph

    def test_header_stripped(self):
        assert graph6_decode(">>graph6<<A_") == path_graph(2)

    def test_surrounding_whitespace(self):
        assert graph6_decode("  A_\n") == path_graph(2)

    def test_bad_character(self):
        with pytest.raises(Graph6Error, match="outside 63..126"):
            graph6_decode("A!")

    def test_truncated(self):
        with pytest.raises(Graph6Error, match="truncated"):
            graph6_decode("C")

    def test_trailing_bytes(self):
        with pytest.raises(Graph6Error, match="trailing"):
            graph6_decode("A__")

    def test_empty_string(self):
        with pytest.raises(Graph6Error):
            graph6_decode("")

    def test_graph6_error_is_graph_error(self):
        with pytest.raises(GraphError):
            graph6_decode("A!")

    def test_iter_lines_skips_blanks(self):
        lines = [graph6_encode(cycle_graph(6)), "", "A_", "   "]
        graphs = list(iter_graph6_lines(lines))
        assert graphs == [cycle_graph(6), path_graph(2)]


# ---------------------------------------------------------------------------
# Edge lists
# ---------------------------------------------------------------------------


class TestEdgeList:
    def test_encode(self):
        assert edge_list_encode(path_graph(3)) == "3 2\n0 1\n1 2\n"

    def test_decode(self):
        assert edge_list_decode("3 2\n0 1\n1 2\n") == path_graph(3)

    def test_decode_isolated_vertices(self):
        g = edge_list_decode("4 1\n0 1\n")
        assert g.n == 4
        assert g.degree(3) == 0

    def test_count_mismatch(self):
        with pytest.raises(GraphError, match="declares 2 edges"):
            edge_list_decode("3 2\n0 1\n")

    def test_malformed(self):
        with pytest.raises(GraphError, match="malformed"):
            edge_list_decode("3 x\n")

    def test_empty(self):
        with pytest.raises(GraphError):
            edge_list_decode("\n\n")


class TestParseGraphs:
    def test_detect_format(self):
        assert detect_format("A_\n") == "graph6"
        assert detect_format("\n2 1\n0 1\n") == "edgelist"

    def test_detect_empty(self):
        with pytest.raises(GraphError):
            detect_format("  \n")

    def test_autodetect_graph6_stream(self):
        text = "\n".join(graph6_encode(g) for g in (cycle_graph(6), heawood())) + "\n"
        assert parse_graphs(text) == [cycle_graph(6), heawood()]

    def test_autodetect_edgelist(self):
        assert parse_graphs("2 1\n0 1\n") == [path_graph(2)]

    def test_explicit_format(self):
        assert parse_graphs("A_", "graph6") == [path_graph(2)]

    def test_unknown_format(self):
        with pytest.raises(GraphError, match="unknown graph format"):
            parse_graphs("A_", "dot")
