"""Tests for the catalog: constructions, entries and their verification."""

import dataclasses

import pytest

from hlindex.analysis.imbalance import increases_imbalance
from hlindex.catalog.constructions import (
    LabeledGraph,
    c6_plus_graph,
    cycle_graph,
    heawood,
    plant,
    plant_entry,
    qc_closure,
)
from hlindex.catalog.entries import (
    BUILDERS,
    P_HAT_RANGE,
    catalog,
    entry_names,
    equals_one,
    get_entry,
    p_hat,
)
from hlindex.catalog.verify import find_residual_deletion, verify_catalog, verify_entry
from hlindex.core.structure import is_heawood
from hlindex.errors import GraphError
from hlindex.models import Provenance, ResidualRecipe

PINNED_NAMES = [n for n in entry_names() if get_entry(n).provenance is Provenance.TEXT_PINNED]
RECONSTRUCTED_NAMES = [
    n for n in entry_names() if get_entry(n).provenance is Provenance.RECONSTRUCTED and n != "c6_hat"
]

# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


class TestLabeledGraph:
    def test_numbered_on_first_use(self):
        g, labels = LabeledGraph().add_cycle("x", "y", "z", "w").build()
        assert labels == ("x", "y", "z", "w")
        assert g == cycle_graph(4)

    def test_repeated_edge_ignored(self):
        g, _ = LabeledGraph().add_edge("a", "b").add_edge("b", "a").build()
        assert g.edge_count == 1

    def test_self_loop(self):
        with pytest.raises(GraphError, match="self-loop"):
            LabeledGraph().add_edge("a", "a")


class TestClosure:
    def test_pendant_names(self):
        host = LabeledGraph().add_path("a", "b")
        g, labels, marked = qc_closure(host, ["a"])
        assert labels == ("a", "b", "a'1", "a'2")
        assert marked.to_list() == [0]
        assert g.degree(0) == 3

    def test_override(self):
        host = LabeledGraph().add_path("a", "b")
        _, labels, _ = qc_closure(host, ["a"], overrides={"a": 2})
        assert labels == ("a", "b", "a'")

    def test_adjacent_marks(self):
        host = LabeledGraph().add_path("a", "b")
        with pytest.raises(GraphError, match="adjacent"):
            qc_closure(host, ["a", "b"])

    def test_degree_too_high(self):
        host = LabeledGraph().add_path("x", "a", "y")
        with pytest.raises(GraphError, match="degree 2 > 1"):
            qc_closure(host, ["a"], overrides={"a": 1})


class TestStandardGraphs:
    def test_heawood(self):
        g = heawood()
        assert g.n == 14
        assert g.degrees() == [3] * 14
        assert is_heawood(g)

    def test_c6_plus(self):
        g = c6_plus_graph()
        assert (g.n, g.edge_count) == (7, 7)

    def test_short_cycle(self):
        with pytest.raises(GraphError):
            cycle_graph(2)


class TestPlanting:
    def test_plant_entry(self, c6):
        entry = get_entry("c4_plus")
        g, bip, moved = plant_entry(entry, c6, 0)
        assert g.n == entry.graph.n + 6
        assert moved.to_list() == entry.marked.to_list()
        assert moved.issubset(bip.a_side)
        cert = increases_imbalance(g, bip.a_side, bip.b_side, moved)
        assert cert is not None
        assert cert.imb_after > cert.imb_before

    @pytest.mark.parametrize(
        "name", ["c4_plus", "p7_minus", "b3", "p_hat_1", "p_hat_2", "p_hat_3", "p_hat_4"]
    )
    def test_planted_entry_raises_imbalance(self, name):
        entry = get_entry(name)
        g, bip, moved = plant_entry(entry, cycle_graph(12), 0)
        assert len(moved) == entry.claim.k
        cert = increases_imbalance(g, bip.a_side, bip.b_side, moved)
        assert cert is not None
        assert cert.imb_after > cert.imb_before

    def test_anchor_out_of_range(self, c6):
        with pytest.raises(GraphError, match="anchor"):
            plant_entry(get_entry("c4_plus"), c6, 6)

    def test_marked_vertex_not_attachable(self, c6):
        entry = get_entry("c4_plus")
        with pytest.raises(GraphError, match="cannot be attached"):
            plant(entry.graph, entry.marked, c6, [(entry.marked.to_list()[0], 0)])


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


class TestRegistry:
    def test_names(self):
        names = entry_names()
        assert len(names) == len(BUILDERS) + len(P_HAT_RANGE)
        assert [e.name for e in catalog()] == names

    def test_p_hat_spellings(self):
        assert get_entry("p_hat(3)").name == "p_hat_3"
        assert get_entry("p_hat_12").graph.n == 3 * 12 + 2

    def test_cached(self):
        assert get_entry("b3") is get_entry("b3")

    def test_unknown(self):
        with pytest.raises(GraphError, match="unknown catalog entry"):
            get_entry("h99")

    def test_negative_p_hat(self):
        with pytest.raises(GraphError):
            p_hat(-1)

    def test_b3_shape(self):
        entry = get_entry("b3")
        assert entry.graph.n == 22
        assert len(entry.marked) == 7


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


class TestVerify:
    @pytest.mark.parametrize("name", PINNED_NAMES)
    def test_pinned_entries(self, name):
        report = verify_entry(get_entry(name))
        assert report.passed, [c.to_dict() for c in report.checks if not c.passed]

    @pytest.mark.parametrize("t", list(P_HAT_RANGE))
    def test_p_hat_order(self, t):
        entry = p_hat(t)
        assert entry.graph.n == 3 * t + 2
        assert len(entry.marked) == t + 1

    def test_c6_hat(self):
        report = verify_entry(get_entry("c6_hat"))
        assert report.passed, [c.to_dict() for c in report.checks if not c.passed]

    @pytest.mark.parametrize("name", RECONSTRUCTED_NAMES)
    def test_reconstructed_entries(self, name):
        assert verify_entry(get_entry(name)).passed

    def test_wrong_claim_fails(self):
        entry = dataclasses.replace(get_entry("c4_plus"), claims=(equals_one(1),))
        report = verify_entry(entry)
        assert not report.passed
        assert not report.checks[0].passed

    def test_claim_beyond_order(self):
        entry = dataclasses.replace(get_entry("c4_plus"), claims=(equals_one(99),))
        assert "only 6 vertices" in verify_entry(entry).checks[0].detail

    def test_fixed_residual_deletion(self):
        entry = get_entry("c6_plus")
        assert find_residual_deletion(entry.graph, entry.residual) == entry.residual.squares

    def test_verify_catalog(self):
        entries = [get_entry("c4_plus"), get_entry("p_hat_1")]
        assert [r.name for r in verify_catalog(entries)] == ["c4_plus", "p_hat_1"]

    def test_search_prefers_exact_size(self):
        host = (
            LabeledGraph()
            .add_cycle("a1", "a2", "a3", "a4", "a5", "a6")
            .add_edge("a1", "p")
            .add_cycle("b1", "b2", "b3", "b4", "b5", "b6")
            .add_edge("b1", "q")
            .add_edge("b4", "r")
        )
        g, labels = host.build()
        recipe = ResidualRecipe(None, 2, "C6", cycle_graph(6), 3, "contains")
        found = find_residual_deletion(g, recipe)
        assert sorted(labels[v] for v in found) == ["q", "r"]
        loose = dataclasses.replace(recipe, size=3)
        assert [labels[v] for v in find_residual_deletion(g, loose)] == ["p"]


# ---------------------------------------------------------------------------
# Residual recipes
# ---------------------------------------------------------------------------


RECIPE_NAMES = [n for n in entry_names() if get_entry(n).residual is not None]


class TestResidualRecipes:
    @pytest.mark.parametrize("name", RECIPE_NAMES)
    def test_squares_recorded(self, name):
        recipe = get_entry(name).residual
        assert recipe.squares is not None
        assert len(recipe.squares) == recipe.size

    @pytest.mark.parametrize("name", RECIPE_NAMES)
    def test_residual_check_passes(self, name):
        checks = {c.name: c for c in verify_entry(get_entry(name)).checks}
        assert checks["residual"].passed, checks["residual"].detail

    @pytest.mark.parametrize(
        "name, squares",
        [
            ("h2_circ", ["2", "6", "x", "d2", "d4"]),
            ("h6_0", ["1", "5", "a", "c"]),
            ("h7_hat", ["2", "4", "12", "q", "r2", "13"]),
            ("h12", ["u1", "v3", "b2", "b4", "a2", "a4"]),
            ("h13", ["u1", "u3", "a2", "a4", "c2", "c4"]),
        ],
    )
    def test_square_labels(self, name, squares):
        entry = get_entry(name)
        assert [entry.labels[v] for v in entry.residual.squares] == squares

    @pytest.mark.parametrize("name", ["h2_circ", "h6_1", "h12_prime", "l33_hat"])
    def test_spare_edges_noted(self, name):
        entry = get_entry(name)
        assert entry.residual.mode == "contains"
        assert "isolated edges" in entry.derivation

    @pytest.mark.parametrize("name", ["h4_minus", "n0_hat", "h6_star", "h123"])
    def test_certificate_holds(self, name):
        checks = {c.name: c for c in verify_entry(get_entry(name)).checks}
        assert checks["certificate"].passed

    @pytest.mark.parametrize("name", ["h5_hat", "h14"])
    def test_unrecorded_squares_noted(self, name):
        entry = get_entry(name)
        assert entry.residual is None
        assert "inertia" in entry.derivation
