"""Shared test fixtures for hlindex tests."""

import pytest

from hlindex.catalog.constructions import (
    complete_bipartite,
    cycle_graph,
    heawood,
    path_graph,
    star_graph,
)
from hlindex.catalog.generators import random_corpus
from hlindex.core.graph import Graph, bipartition


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def p5():
    return path_graph(5)


@pytest.fixture
def k33():
    return complete_bipartite(3, 3)


@pytest.fixture
def claw():
    return star_graph(3)


@pytest.fixture
def heawood_graph():
    return heawood()


@pytest.fixture
def c6_bip(c6):
    return bipartition(c6)


@pytest.fixture
def cube():
    """The 3-cube Q3: cubic, bipartite, girth 4."""
    edges = [(u, u ^ (1 << i)) for u in range(8) for i in range(3) if u < u ^ (1 << i)]
    return Graph.from_edge_list(8, edges)


@pytest.fixture(scope="session")
def small_corpus():
    """Twenty seeded connected bipartite subcubic graphs, 6 to 16 vertices."""
    return list(random_corpus(20, 6, 16, seed=7))


@pytest.fixture(scope="session")
def girth6_corpus():
    """Seeded graphs with girth at least 6, for the 2-induced path properties."""
    return list(random_corpus(15, 12, 24, seed=11, girth_floor=6))
