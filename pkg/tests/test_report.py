"""Tests for hlindex.spectra.report."""

import math

import pytest

from hlindex.core.graph import Graph
from hlindex.errors import GraphError, SpectrumError
from hlindex.spectra.report import (
    median_at_most_sqrt2,
    median_indices,
    median_report,
    theorem_verdict,
)


class TestMedianIndices:
    @pytest.mark.parametrize("n, expected", [(1, (1, 1)), (6, (3, 4)), (7, (4, 4)), (14, (7, 8))])
    def test_indices(self, n, expected):
        assert median_indices(n) == expected


class TestMedianReport:
    def test_heawood(self, heawood_graph):
        report = median_report(heawood_graph)
        assert (report.h, report.ell) == (7, 8)
        assert report.hl_index == pytest.approx(math.sqrt(2), abs=1e-9)
        assert not report.exact_at_most_one

    def test_cycle(self, c6):
        report = median_report(c6)
        assert report.lambda_h == pytest.approx(1)
        assert report.lambda_ell == pytest.approx(-1)
        assert report.hl_index == pytest.approx(1)
        assert report.exact_at_most_one

    def test_exact_agrees_with_float(self, small_corpus):
        for g in small_corpus:
            report = median_report(g)
            if report.hl_index < 1 - 1e-6:
                assert report.exact_at_most_one
            if report.hl_index > 1 + 1e-6:
                assert not report.exact_at_most_one

    def test_empty_graph(self):
        with pytest.raises(SpectrumError):
            median_report(Graph.empty())


class TestSqrt2:
    def test_heawood(self, heawood_graph):
        assert median_at_most_sqrt2(heawood_graph)

    def test_corpus(self, small_corpus):
        assert all(median_at_most_sqrt2(g) for g in small_corpus)

    def test_needs_bipartite(self):
        triangle = Graph.from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(SpectrumError, match="bipartite"):
            median_at_most_sqrt2(triangle)


class TestTheoremVerdict:
    def test_cycle(self, c6):
        verdict = theorem_verdict(c6)
        assert verdict.exact_at_most_one
        assert not verdict.is_heawood
        assert not verdict.violates
        assert verdict.witness == {}

    def test_heawood_union(self, heawood_graph):
        verdict = theorem_verdict(heawood_graph.disjoint_union(heawood_graph))
        assert verdict.is_heawood
        assert not verdict.exact_at_most_one
        assert not verdict.violates
        assert verdict.witness["at_most_sqrt2"] is True
        assert verdict.witness["inertia_at_1"]["greater"] == 14

    def test_heawood_with_cycle(self, heawood_graph, c6):
        verdict = theorem_verdict(heawood_graph.disjoint_union(c6))
        assert not verdict.is_heawood
        assert verdict.exact_at_most_one

    def test_not_subcubic(self):
        star4 = Graph.from_edge_list(5, [(0, i) for i in range(1, 5)])
        with pytest.raises(GraphError):
            theorem_verdict(star4)
