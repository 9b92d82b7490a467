"""Tests for hlindex.spectra.exact."""

from fractions import Fraction

import pytest

from hlindex.catalog.constructions import h6_0_residual, h7_residual, path_graph
from hlindex.errors import SpectrumError
from hlindex.spectra.exact import (
    bareiss_determinant,
    char_poly,
    characteristic_value,
    check_eigenvector,
    count_in_interval,
    inertia,
    lambda_k_at_most,
    lambda_k_equals,
    matrix_inertia,
    sturm_inertia,
)

# ---------------------------------------------------------------------------
# Inertia by elimination
# ---------------------------------------------------------------------------


def _triple(count):
    return count.greater, count.equal, count.less


class TestInertia:
    def test_cycle_at_one(self, c6):
        assert _triple(inertia(c6, 1)) == (1, 2, 3)

    def test_path_at_one(self, p5):
        assert _triple(inertia(p5, 1)) == (1, 1, 3)

    def test_heawood_at_one(self, heawood_graph):
        assert _triple(inertia(heawood_graph, 1)) == (7, 0, 7)
        assert count_in_interval(heawood_graph, -1, 1) == 0

    def test_k33_at_zero(self, k33):
        assert _triple(inertia(k33, 0)) == (1, 4, 1)

    def test_string_threshold(self, c6):
        count = inertia(c6, "1/2")
        assert count.threshold == Fraction(1, 2)
        assert _triple(count) == (3, 0, 3)

    def test_counts_sum_to_order(self, small_corpus):
        for g in small_corpus:
            assert inertia(g, Fraction(3, 2)).n == g.n

    def test_whole_spectrum_in_range(self, small_corpus):
        for g in small_corpus:
            assert count_in_interval(g, -3, 3) == g.n

    def test_bad_threshold(self, c6):
        with pytest.raises(SpectrumError, match="not a rational"):
            inertia(c6, "abc")

    def test_unknown_method(self, c6):
        with pytest.raises(SpectrumError, match="unknown inertia method"):
            inertia(c6, 1, method="qr")

    def test_empty_interval(self, c6):
        with pytest.raises(SpectrumError, match="empty interval"):
            count_in_interval(c6, 1, -1)


class TestMatrixInertia:
    def test_zero_diagonal_pivot(self):
        assert _triple(matrix_inertia([[0, 1], [1, 0]])) == (1, 0, 1)

    def test_shift(self):
        assert _triple(matrix_inertia([[2, 0], [0, 1]], 1)) == (1, 1, 0)

    def test_not_square(self):
        with pytest.raises(SpectrumError, match="not square"):
            matrix_inertia([[1, 0], [0]])

    def test_not_symmetric(self):
        with pytest.raises(SpectrumError, match="not symmetric"):
            matrix_inertia([[0, 1], [0, 0]])


# ---------------------------------------------------------------------------
# Characteristic polynomial and Sturm counting
# ---------------------------------------------------------------------------


class TestCharPoly:
    def test_cycle(self, c6):
        poly = char_poly(c6)
        assert poly.coefficients == (1, 0, -6, 0, 9, 0, -4)
        assert poly.to_text() == "x^6 - 6x^4 + 9x^2 - 4"

    def test_path(self):
        assert char_poly(path_graph(3)).coefficients == (1, 0, -2, 0)

    def test_size_limit(self, heawood_graph):
        with pytest.raises(SpectrumError, match="n <= 10"):
            char_poly(heawood_graph, max_n=10)

    def test_matches_bareiss(self, c6, p5, k33):
        for g in (c6, p5, k33):
            poly = char_poly(g)
            for t in range(-3, 4):
                assert poly.evaluate(t) == characteristic_value(g, t)

    def test_h7_residual(self):
        poly = char_poly(h7_residual())
        assert poly.coefficients == (1, 0, -9, 0, 24, 0, -20, 0, 4, 0, 0)
        assert poly.evaluate(1) == 0

    def test_h6_0_residual(self):
        poly = char_poly(h6_0_residual())
        assert poly.coefficients == (1, 0, -14, 0, 76, 0, -200, 0, 259, 0, -146, 0, 24, 0, 0, 0)
        assert poly.evaluate(1) == 0
        # simple root at 1
        assert poly.derivative().evaluate(1) == 24


class TestSturm:
    @pytest.mark.parametrize("t", [1, Fraction(1, 2), -1, Fraction(3, 2)])
    def test_agrees_with_elimination(self, small_corpus, t):
        for g in small_corpus:
            assert sturm_inertia(char_poly(g), t) == inertia(g, t)

    def test_method_switch(self, heawood_graph):
        assert inertia(heawood_graph, 1, method="sturm") == inertia(heawood_graph, 1)


# ---------------------------------------------------------------------------
# Point queries
# ---------------------------------------------------------------------------


class TestQueries:
    def test_lambda_k_equals(self, c6):
        assert lambda_k_equals(c6, 1, 2)
        assert lambda_k_equals(c6, 2, 1)
        assert lambda_k_equals(c6, 3, 1)
        assert not lambda_k_equals(c6, 4, 1)

    def test_lambda_k_at_most(self, c6):
        assert lambda_k_at_most(c6, 3, 1)
        assert not lambda_k_at_most(c6, 1, 1)

    def test_index_range(self, c6):
        with pytest.raises(SpectrumError, match="outside"):
            lambda_k_equals(c6, 7, 1)

    def test_eigenvectors(self, c6):
        assert check_eigenvector(c6, [1] * 6, 2)
        assert check_eigenvector(c6, [1, -1, 1, -1, 1, -1], -2)
        assert not check_eigenvector(c6, [1, 0, 0, 0, 0, 0], 0)

    def test_rational_eigenvector(self, p5):
        # lambda = 1 on P5: (1, 1, 0, -1, -1)
        assert check_eigenvector(p5, ["1/2", "1/2", 0, "-1/2", "-1/2"], 1)

    def test_eigenvector_errors(self, c6):
        with pytest.raises(SpectrumError, match="zero vector"):
            check_eigenvector(c6, [0] * 6, 1)
        with pytest.raises(SpectrumError, match="length"):
            check_eigenvector(c6, [1] * 5, 2)


class TestBareiss:
    def test_values(self):
        assert bareiss_determinant([[2, 1], [1, 2]]) == 3
        assert bareiss_determinant([[1, 2], [2, 4]]) == 0
        assert bareiss_determinant([[0, 1], [1, 0]]) == -1

    def test_empty_matrix(self):
        assert bareiss_determinant([]) == 1
