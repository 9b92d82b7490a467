"""Named graphs and the builders used to assemble catalog entries.

Catalog graphs are drawn with labelled vertices (``1..16``, ``a``, ``v3``,
...). :class:`LabeledGraph` collects edges by label and freezes them into a
:class:`Graph` whose vertex ``i`` carries ``labels[i]``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

from hlindex.core.graph import Bipartition, Graph, VertexSet, bipartition
from hlindex.errors import GraphError
from hlindex.models import CatalogEntry


class LabeledGraph:
    """Mutable edge collector keyed by vertex label; vertices numbered on first use."""

    def __init__(self) -> None:
        self.labels: list[str] = []
        self._index: dict[str, int] = {}
        self._nbrs: dict[str, list[str]] = {}

    def vertex(self, label: object) -> int:
        key = str(label)
        if key not in self._index:
            self._index[key] = len(self.labels)
            self.labels.append(key)
            self._nbrs[key] = []
        return self._index[key]

    def add_edge(self, a: object, b: object) -> LabeledGraph:
        ka, kb = str(a), str(b)
        self.vertex(ka)
        self.vertex(kb)
        if ka == kb:
            raise GraphError(f"self-loop at {ka}")
        if kb not in self._nbrs[ka]:
            self._nbrs[ka].append(kb)
            self._nbrs[kb].append(ka)
        return self

    def add_path(self, *labels: object) -> LabeledGraph:
        for a, b in zip(labels, labels[1:], strict=False):
            self.add_edge(a, b)
        return self

    def add_cycle(self, *labels: object) -> LabeledGraph:
        self.add_path(*labels)
        return self.add_edge(labels[-1], labels[0])

    def neighbors(self, label: object) -> list[str]:
        return list(self._nbrs[str(label)])

    def __contains__(self, label: object) -> bool:
        return str(label) in self._index

    def build(self) -> tuple[Graph, tuple[str, ...]]:
        edges = [
            (self._index[a], self._index[b])
            for a, nbrs in self._nbrs.items()
            for b in nbrs
            if self._index[a] < self._index[b]
        ]
        return Graph.from_edge_list(len(self.labels), edges), tuple(self.labels)


def qc_closure(
    host: LabeledGraph,
    marked: Iterable[object],
    degree: int = 3,
    overrides: Mapping[object, int] | None = None,
) -> tuple[Graph, tuple[str, ...], VertexSet]:
    """Marked vertices, their host neighbours, and pendants up to full degree.

    Each marked vertex ends with degree ``degree`` (or its override) by
    gaining fresh pendant vertices labelled ``c'`` (``c'1``, ``c'2`` when
    several are needed).
    """
    wanted = {str(k): v for k, v in (overrides or {}).items()}
    marks = [str(c) for c in marked]
    mark_set = set(marks)
    out = LabeledGraph()
    for c in marks:
        out.vertex(c)
        nbrs = host.neighbors(c)
        if mark_set & set(nbrs):
            raise GraphError(f"marked vertex {c} is adjacent to another marked vertex")
        target = wanted.get(c, degree)
        if len(nbrs) > target:
            raise GraphError(f"marked vertex {c} already has degree {len(nbrs)} > {target}")
        for w in nbrs:
            out.add_edge(c, w)
        missing = target - len(nbrs)
        for i in range(missing):
            out.add_edge(c, f"{c}'" if missing == 1 else f"{c}'{i + 1}")
    g, labels = out.build()
    return g, labels, VertexSet.of(g.n, (labels.index(c) for c in marks))


# ---------------------------------------------------------------------------
# Standard graphs
# ---------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycles need at least 3 vertices, got {n}")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edge_list(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def matching_graph(edges: int) -> Graph:
    return Graph.from_edge_list(2 * edges, [(2 * i, 2 * i + 1) for i in range(edges)])


def heawood() -> Graph:
    """Incidence graph of the Fano plane: points 0..6, lines {i, i+1, i+3} as 7..13."""
    edges = [(p % 7, 7 + i) for i in range(7) for p in (i, i + 1, i + 3)]
    return Graph.from_edge_list(14, edges)


def h0_host() -> LabeledGraph:
    """8-cycle 1..8 with the paths 1-12-5 and 2-11-6."""
    return LabeledGraph().add_cycle(*range(1, 9)).add_path(1, 12, 5).add_path(2, 11, 6)


def h1_host() -> LabeledGraph:
    return h0_host().add_path(3, 10, 7).add_path(4, 9, 8)


def h2_host() -> LabeledGraph:
    """Heawood graph minus the edge 13-14."""
    return h1_host().add_path(10, 13, 12).add_path(9, 14, 11)


def h0_graph() -> Graph:
    return h0_host().build()[0]


def c6_plus_graph() -> Graph:
    """6-cycle with one pendant edge."""
    return cycle_graph(6).with_edges([(0, 6)], extra_vertices=1)


def p7_minus_graph() -> Graph:
    return p7_minus_host()[0]


def p7_minus_host() -> tuple[Graph, tuple[str, ...], VertexSet]:
    host = LabeledGraph().add_path("v2", "v1", "v", "v1'", "v2'")
    return qc_closure(host, ["v2", "v", "v2'"], overrides={"v": 2})


def h7_residual() -> Graph:
    """Path v1..v6 with a pendant edge at each of v2..v5."""
    edges = [(i, i + 1) for i in range(5)] + [(i, 5 + i) for i in range(1, 5)]
    return Graph.from_edge_list(10, edges)


def h6_0_residual() -> Graph:
    """Path of length 10 with two pendant edges at each end."""
    edges = [(i, i + 1) for i in range(10)] + [(0, 11), (0, 12), (10, 13), (10, 14)]
    return Graph.from_edge_list(15, edges)


# ---------------------------------------------------------------------------
# Planting
# ---------------------------------------------------------------------------


def plant(
    entry_graph: Graph,
    marked: VertexSet,
    host: Graph,
    attachments: Iterable[tuple[int, int]],
) -> tuple[Graph, Bipartition, VertexSet]:
    """Disjoint union of entry and host joined by ``(entry vertex, host vertex)`` edges.

    Marked entry vertices must keep all their neighbours inside the entry, so
    they may not be attached. Returns the combined graph, its bipartition
    ordered so that the marked set lies in A, and the marked set relabelled.
    """
    pairs = list(attachments)
    for ev, _ in pairs:
        if ev in marked:
            raise GraphError(f"marked vertex {ev} cannot be attached to the host")
    g = entry_graph.disjoint_union(host)
    g = g.with_edges((ev, entry_graph.n + hv) for ev, hv in pairs)
    g.require_subcubic()
    bip = bipartition(g)
    if bip is None:
        raise GraphError("planting produced an odd cycle")
    moved = VertexSet.of(g.n, marked)
    if not moved.issubset(bip.a_side):
        if not moved.issubset(bip.b_side):
            raise GraphError("marked set straddles both sides after planting")
        bip = bip.swapped()
    return g, bip, moved


def plant_entry(entry: CatalogEntry, host: Graph, anchor: int) -> tuple[Graph, Bipartition, VertexSet]:
    """Plant ``entry`` by a single bridge from its first free unmarked vertex to ``anchor``."""
    free = [
        v
        for v in range(entry.graph.n)
        if v not in entry.marked and entry.graph.degree(v) < 3
    ]
    if not free:
        raise GraphError(f"entry {entry.name} has no unmarked vertex of degree below 3")
    if not 0 <= anchor < host.n:
        raise GraphError(f"anchor {anchor} out of range for host with n={host.n}")
    return plant(entry.graph, entry.marked, host, [(free[0], anchor)])
