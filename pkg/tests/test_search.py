"""Tests for hlindex.analysis.search."""

import pytest

from hlindex.analysis.imbalance import replay
from hlindex.analysis.search import STRATEGIES, search_increasing_set
from hlindex.core.graph import Bipartition, Graph, VertexSet, bipartition
from hlindex.errors import GraphError, PartitionError, SearchRefused
from hlindex.models import IncreaseCertificate, SearchExhausted, Side


class TestLadder:
    def test_cycle_default(self, c6, c6_bip):
        cert = search_increasing_set(c6, c6_bip, 0)
        assert isinstance(cert, IncreaseCertificate)
        assert cert.c_set.to_list() == [0, 2]
        assert cert.side is Side.AB
        assert cert.strategy == "degree_two"

    def test_leaf_found_first(self, p5):
        cert = search_increasing_set(p5, bipartition(p5), 2)
        assert cert.strategy == "degree_le_1"
        assert cert.c_set.to_list() == [0]

    def test_isolated_vertex(self):
        g = Graph.empty(1)
        cert = search_increasing_set(g, bipartition(g), 0)
        assert (cert.imb_before, cert.imb_after) == (0, 1)

    def test_cube(self, cube):
        bip = bipartition(cube)
        cert = search_increasing_set(cube, bip, 0)
        assert isinstance(cert, IncreaseCertificate)
        assert replay(cube, bip, cert) == []

    def test_corpus_always_succeeds(self, small_corpus):
        for g in small_corpus:
            bip = bipartition(g)
            cert = search_increasing_set(g, bip, 0)
            assert isinstance(cert, IncreaseCertificate)
            assert cert.imb_after > cert.imb_before
            assert replay(g, bip, cert) == []


class TestExhaustive:
    def test_cycle(self, c6, c6_bip):
        cert = search_increasing_set(c6, c6_bip, 0, strategies=["exhaustive"])
        assert cert.c_set.to_list() == [1, 5]
        assert cert.side is Side.BA
        assert cert.strategy == "exhaustive"

    def test_budget(self, c6, c6_bip):
        out = search_increasing_set(c6, c6_bip, 0, budget=1, strategies=["exhaustive"])
        assert isinstance(out, SearchExhausted)
        assert out.budget_hit
        assert out.radius_reached == 1
        assert out.candidates_tried == {"(A,B)": 1, "(B,A)": 1}

    def test_ladder_without_enumeration(self, c6, c6_bip):
        out = search_increasing_set(c6, c6_bip, 0, strategies=["degree_le_1"])
        assert isinstance(out, SearchExhausted)
        assert out.strategies == ("degree_le_1",)
        assert not out.budget_hit

    def test_strategy_names(self):
        assert STRATEGIES[-1] == "exhaustive"


class TestRefusalsAndErrors:
    def test_heawood_refused(self, heawood_graph):
        with pytest.raises(SearchRefused, match="Heawood"):
            search_increasing_set(heawood_graph, bipartition(heawood_graph), 3)

    def test_heawood_elsewhere_is_fine(self, heawood_graph, c6):
        g = heawood_graph.disjoint_union(c6)
        cert = search_increasing_set(g, bipartition(g), 14)
        assert cert.c_set.issubset(range(14, 20))

    def test_unknown_strategy(self, c6, c6_bip):
        with pytest.raises(GraphError, match="unknown search strategies"):
            search_increasing_set(c6, c6_bip, 0, strategies=["greedy"])

    def test_vertex_out_of_range(self, c6, c6_bip):
        with pytest.raises(GraphError, match="out of range"):
            search_increasing_set(c6, c6_bip, 6)

    def test_bad_bipartition(self, c6):
        bad = Bipartition(VertexSet.of(6, [0, 1, 2]), VertexSet.of(6, [3, 4, 5]))
        with pytest.raises(PartitionError, match="inside one side"):
            search_increasing_set(c6, bad, 0)

    def test_not_subcubic(self):
        star4 = Graph.from_edge_list(5, [(0, i) for i in range(1, 5)])
        with pytest.raises(GraphError):
            search_increasing_set(star4, bipartition(star4), 0)
