"""Tests for hlindex.spectra.numeric."""

import pytest

from hlindex.core.graph import Graph
from hlindex.errors import SpectrumError
from hlindex.spectra.numeric import adjacency_matrix, eigenvalues, verify_interlacing


class TestEigenvalues:
    def test_cycle(self, c6):
        spectrum = eigenvalues(c6)
        assert spectrum.values == pytest.approx([2, 1, 1, -1, -1, -2], abs=1e-9)
        assert spectrum.residual_bound < 1e-9

    def test_descending(self, small_corpus):
        for g in small_corpus:
            values = eigenvalues(g).values
            assert list(values) == sorted(values, reverse=True)

    def test_empty(self):
        assert eigenvalues(Graph.empty()).values == ()

    def test_adjacency_symmetric(self, p5):
        a = adjacency_matrix(p5)
        assert (a == a.T).all()
        assert a.sum() == 2 * p5.edge_count


class TestInterlacing:
    def test_heawood_one_vertex(self, heawood_graph):
        report = verify_interlacing(heawood_graph, [0])
        assert report.holds
        assert report.k == 1
        assert report.pairs_checked == 13

    def test_corpus(self, small_corpus):
        for g in small_corpus:
            assert verify_interlacing(g, [0, g.n - 1]).holds

    def test_repeated_vertices_count_once(self, c6):
        assert verify_interlacing(c6, [2, 2]).k == 1

    def test_empty_remainder(self, p5):
        with pytest.raises(SpectrumError, match="non-empty"):
            verify_interlacing(p5, range(5))
