"""Tests for hlindex.core.structure."""

from itertools import combinations

import pytest

from hlindex.catalog.constructions import cycle_graph, path_graph
from hlindex.catalog.generators import random_corpus
from hlindex.core.graph import Graph, ball, bipartition
from hlindex.core.structure import (
    ThickKind,
    canonical_cycle,
    cycle_view,
    cycles_through,
    find_2_induced_path,
    find_k_chords,
    girth,
    is_good_cycle,
    is_heawood,
    is_internal_edge,
    is_k_induced,
    is_thick,
    path_view,
)
from hlindex.errors import GraphError


def _c8_with_bridges(both: bool) -> Graph:
    """8-cycle with vertex 8 joined to 0 and 2, and optionally 9 joined to 1 and 3."""
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(8, 0), (8, 2)]
    n = 9
    if both:
        edges += [(9, 1), (9, 3)]
        n = 10
    return Graph.from_edge_list(n, edges)


# ---------------------------------------------------------------------------
# Chords
# ---------------------------------------------------------------------------


class TestChords:
    def test_one_chord_closes_path(self, c6):
        assert find_k_chords(c6, path_view([0, 1, 2, 3, 4, 5]), 1) == [(0, 5)]

    def test_cycle_has_no_one_chord(self, c6):
        assert find_k_chords(c6, cycle_view(range(6)), 1) == []

    def test_two_chord(self, c6):
        assert find_k_chords(c6, path_view([0, 1, 2, 3, 4]), 2) == [(0, 5, 4)]

    def test_no_two_chord_on_short_path(self, c6):
        assert find_k_chords(c6, path_view([0, 1, 2]), 2) == []

    def test_is_k_induced(self, c6):
        view = path_view([0, 1, 2, 3, 4])
        assert is_k_induced(c6, view, 1)
        assert not is_k_induced(c6, view, 2)

    def test_k_must_be_positive(self, c6):
        with pytest.raises(GraphError):
            find_k_chords(c6, path_view([0, 1]), 0)


# ---------------------------------------------------------------------------
# Cycles and girth
# ---------------------------------------------------------------------------


class TestCycles:
    def test_canonical_rotation_and_direction(self):
        assert canonical_cycle([3, 4, 5, 0, 1, 2]) == (0, 1, 2, 3, 4, 5)
        assert canonical_cycle([0, 5, 4, 3, 2, 1]) == (0, 1, 2, 3, 4, 5)

    def test_hexagon(self, c6):
        assert cycles_through(c6, 0, 6) == [(0, 1, 2, 3, 4, 5)]
        assert cycles_through(c6, 0, 4) == []

    def test_k33_four_cycles(self, k33):
        assert len(cycles_through(k33, 0, 4)) == 6

    def test_heawood_hexagons_per_edge(self, heawood_graph):
        # 28 hexagons, 6 edges each, spread over 21 edges
        for edge in heawood_graph.edges():
            assert len(cycles_through(heawood_graph, edge, 6)) == 8

    def test_edge_anchor_must_be_edge(self, c6):
        with pytest.raises(GraphError, match="not an edge"):
            cycles_through(c6, (0, 3), 6)

    def test_short_length_rejected(self, c6):
        with pytest.raises(GraphError):
            cycles_through(c6, 0, 2)

    def test_girth(self, c6, k33, cube, p5, heawood_graph):
        assert girth(c6) == 6
        assert girth(k33) == 4
        assert girth(cube) == 4
        assert girth(heawood_graph) == 6
        assert girth(p5) is None
        assert girth(cycle_graph(10)) == 10

    def test_internal_edges(self, c6, p5):
        assert all(is_internal_edge(c6, e) for e in c6.edges())
        assert not any(is_internal_edge(p5, e) for e in p5.edges())


class TestGoodCycle:
    def test_bare_cycle_is_good(self):
        assert is_good_cycle(cycle_graph(8), list(range(8)))

    def test_one_spread_class_suffices(self):
        assert is_good_cycle(_c8_with_bridges(both=False), list(range(8)))

    def test_both_classes_blocked(self):
        assert not is_good_cycle(_c8_with_bridges(both=True), list(range(8)))

    def test_odd_length_rejected(self):
        with pytest.raises(GraphError, match="even length"):
            is_good_cycle(cycle_graph(5), list(range(5)))

    def test_non_cycle_rejected(self, c6):
        with pytest.raises(GraphError, match="not a cycle"):
            is_good_cycle(c6, [0, 1, 2, 4])

    def test_chord_rejected(self):
        g = cycle_graph(8).with_edges([(0, 5)])
        with pytest.raises(GraphError, match="not induced"):
            is_good_cycle(g, list(range(8)))


# ---------------------------------------------------------------------------
# Thick sets
# ---------------------------------------------------------------------------


class TestThick:
    def test_a_thick(self):
        p3 = path_graph(3)
        assert is_thick(p3, bipartition(p3), [0, 1, 2]) is ThickKind.A_THICK

    def test_b_thick(self, claw):
        assert is_thick(claw, bipartition(claw), [0, 1, 2, 3]) is ThickKind.B_THICK

    def test_balanced_fails(self, c6, c6_bip):
        assert is_thick(c6, c6_bip, range(6)) is ThickKind.BOTH_FAIL

    def test_outside_vertex_with_two_neighbours_inside(self, c6, c6_bip):
        # outside vertices 3 and 5 each see one vertex of U
        assert is_thick(c6, c6_bip, [0, 1, 2]) is ThickKind.A_THICK
        # U = {0, 1, 2, 3, 4}: outside vertex 5 sees both 0 and 4
        assert is_thick(c6, c6_bip, [0, 1, 2, 3, 4]) is ThickKind.BOTH_FAIL


# ---------------------------------------------------------------------------
# 2-induced paths
# ---------------------------------------------------------------------------


class TestTwoInducedPath:
    def test_octagon(self):
        c8 = cycle_graph(8)
        assert find_2_induced_path(c8, 0, 4, 2, 6) == (2, 1, 0, 7, 6)

    def test_same_vertex(self):
        c8 = cycle_graph(8)
        assert find_2_induced_path(c8, 0, 2, 1, 1) == (1,)

    def test_adjacent(self):
        c8 = cycle_graph(8)
        assert find_2_induced_path(c8, 0, 2, 1, 2) == (1, 2)

    def test_outside_ball(self):
        c8 = cycle_graph(8)
        assert find_2_induced_path(c8, 0, 2, 1, 4) is None

    def test_girth_four_refused(self, k33):
        assert find_2_induced_path(k33, 0, 2, 0, 1) is None

    def test_odd_cycle_refused(self):
        assert find_2_induced_path(cycle_graph(7), 0, 3, 1, 6) is None

    def test_random_girth6_paths_are_2_induced(self, girth6_corpus):
        checked = 0
        for g in girth6_corpus:
            bip = bipartition(g)
            r = 3
            region = ball(g, 0, r)
            same_side = [v for v in region if (v in bip.a_side) == (0 in bip.a_side)]
            for x, y in zip(same_side, same_side[1:], strict=False):
                path = find_2_induced_path(g, 0, r, x, y)
                assert path is not None
                assert path[0] == x
                assert path[-1] == y
                assert is_k_induced(g, path_view(path), 2)
                assert set(path) <= set(ball(g, 0, r + 1))
                checked += 1
        assert checked > 0

    @pytest.mark.slow
    def test_girth6_paths_full(self):
        checked = 0
        for g in random_corpus(30, 12, 30, seed=23, girth_floor=6):
            bip = bipartition(g)
            for v0 in sorted({0, g.n // 3, 2 * g.n // 3, g.n - 1}):
                for r in (1, 2, 3):
                    region = ball(g, v0, r)
                    outer = set(ball(g, v0, r + 1))
                    for side in (bip.a_side, bip.b_side):
                        members = [v for v in region if v in side]
                        for x, y in combinations(members, 2):
                            path = find_2_induced_path(g, v0, r, x, y)
                            assert path is not None, (v0, r, x, y)
                            assert (path[0], path[-1]) == (x, y)
                            assert is_k_induced(g, path_view(path), 2)
                            assert set(path) <= outer
                            checked += 1
        assert checked >= 1000


# ---------------------------------------------------------------------------
# Heawood recognition
# ---------------------------------------------------------------------------


class TestHeawood:
    def test_recognised(self, heawood_graph):
        assert is_heawood(heawood_graph)

    def test_relabelled(self, heawood_graph):
        perm = [(5 * v + 3) % 14 for v in range(14)]
        assert is_heawood(heawood_graph.relabel(perm))

    def test_other_cubic_graphs(self, cube, k33):
        assert not is_heawood(cube)
        assert not is_heawood(k33)

    def test_missing_edge(self, heawood_graph):
        g = Graph.from_edge_list(14, heawood_graph.edges()[1:])
        assert not is_heawood(g)
