"""Immutable graph values and the set-level primitives built on them.

Vertices are dense integers ``0..n-1``. Every value here is frozen, so graphs
and vertex sets can be shared between worker processes without copying
concerns.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import networkx as nx

from hlindex.errors import GraphError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency tuples.

    Build instances with :meth:`from_edge_list`; the constructor trusts its
    arguments.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        return cls(n=n, adjacency=adjacency, edge_count=sum(len(s) for s in nbrs) // 2)

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls.from_edge_list(n, [])

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        """Convert a networkx graph, relabeling nodes in sorted order."""
        order = {node: i for i, node in enumerate(sorted(g.nodes()))}
        return cls.from_edge_list(len(order), ((order[u], order[v]) for u, v in g.edges()))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def is_subcubic(self) -> bool:
        return self.max_degree() <= 3

    def require_subcubic(self) -> None:
        if not self.is_subcubic():
            raise GraphError(f"graph has maximum degree {self.max_degree()}, expected at most 3")

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def vertices(self) -> VertexSet:
        return VertexSet(tuple(range(self.n)), self.n)

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        return Graph.from_edge_list(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def disjoint_union(self, other: Graph) -> Graph:
        """Place ``other`` after this graph, shifting its labels by ``self.n``."""
        shifted = ((u + self.n, v + self.n) for u, v in other.edges())
        return Graph.from_edge_list(self.n + other.n, [*self.edges(), *shifted])

    def with_edges(self, extra: Iterable[tuple[int, int]], extra_vertices: int = 0) -> Graph:
        return Graph.from_edge_list(self.n + extra_vertices, [*self.edges(), *extra])


@dataclass(frozen=True)
class VertexSet:
    """Sorted, duplicate-free set of vertices of a graph on ``n`` vertices."""

    members: tuple[int, ...]
    n: int

    @classmethod
    def of(cls, n: int, items: Iterable[int] = ()) -> VertexSet:
        members = tuple(sorted(set(items)))
        if members and (members[0] < 0 or members[-1] >= n):
            raise GraphError(f"vertex set {list(members)} not inside 0..{n - 1}")
        return cls(members, n)

    def __contains__(self, v: object) -> bool:
        return v in self._lookup

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    @property
    def _lookup(self) -> frozenset[int]:
        # frozen dataclass: cache through object.__setattr__
        cached = self.__dict__.get("_lookup_cache")
        if cached is None:
            cached = frozenset(self.members)
            object.__setattr__(self, "_lookup_cache", cached)
        return cached

    def as_frozenset(self) -> frozenset[int]:
        return self._lookup

    def union(self, other: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, [*self.members, *other])

    def difference(self, other: Iterable[int]) -> VertexSet:
        drop = set(other)
        return VertexSet(tuple(v for v in self.members if v not in drop), self.n)

    def intersection(self, other: Iterable[int]) -> VertexSet:
        keep = set(other)
        return VertexSet(tuple(v for v in self.members if v in keep), self.n)

    def complement(self) -> VertexSet:
        return VertexSet(tuple(v for v in range(self.n) if v not in self._lookup), self.n)

    def issubset(self, other: Iterable[int]) -> bool:
        return self._lookup <= set(other)

    def to_list(self) -> list[int]:
        return list(self.members)


@dataclass(frozen=True)
class Bipartition:
    a_side: VertexSet
    b_side: VertexSet

    def swapped(self) -> Bipartition:
        return Bipartition(self.b_side, self.a_side)

    def side_of(self, v: int) -> str:
        return "A" if v in self.a_side else "B"

    def to_dict(self) -> dict:
        return {"a_side": self.a_side.to_list(), "b_side": self.b_side.to_list()}


@dataclass(frozen=True)
class SubgraphHandle:
    """Induced subgraph plus the map from its local indices back to the host."""

    vertices: VertexSet
    induced_graph: Graph
    vertex_map: tuple[int, ...]

    def to_host(self, local: Iterable[int]) -> list[int]:
        return [self.vertex_map[i] for i in local]

    def to_local(self) -> dict[int, int]:
        return {host: i for i, host in enumerate(self.vertex_map)}


# ---------------------------------------------------------------------------
# Set-level operations
# ---------------------------------------------------------------------------


def bipartition(g: Graph) -> Bipartition | None:
    """Canonical 2-colouring, or None when an odd cycle exists.

    Within each component the side holding its lowest vertex becomes A.
    """
    colour: list[int | None] = [None] * g.n
    for root in range(g.n):
        if colour[root] is not None:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if colour[w] is None:
                    colour[w] = 1 - colour[u]  # type: ignore[operator]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    a = [v for v in range(g.n) if colour[v] == 0]
    b = [v for v in range(g.n) if colour[v] == 1]
    return Bipartition(VertexSet(tuple(a), g.n), VertexSet(tuple(b), g.n))


def distances_from(g: Graph, sources: Iterable[int], limit: int | None = None) -> dict[int, int]:
    """BFS distances from a set of sources, optionally cut off at ``limit``."""
    dist: dict[int, int] = {}
    queue: deque[int] = deque()
    for s in sources:
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        if limit is not None and dist[u] >= limit:
            continue
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def ball(g: Graph, v: int, r: int) -> VertexSet:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    if r < 0:
        raise GraphError(f"radius must be non-negative, got {r}")
    return VertexSet.of(g.n, distances_from(g, [v], limit=r))


def neighbors_of_set(g: Graph, c: Iterable[int]) -> VertexSet:
    inside = set(c)
    out = {w for u in inside for w in g.adjacency[u] if w not in inside}
    return VertexSet.of(g.n, out)


def induced_subgraph(g: Graph, s: Iterable[int]) -> SubgraphHandle:
    vs = s if isinstance(s, VertexSet) else VertexSet.of(g.n, s)
    local = {host: i for i, host in enumerate(vs.members)}
    edges = [
        (local[u], local[w])
        for u in vs.members
        for w in g.adjacency[u]
        if w in local and u < w
    ]
    return SubgraphHandle(vs, Graph.from_edge_list(len(vs), edges), vs.members)


def delete_vertices(g: Graph, s: Iterable[int]) -> SubgraphHandle:
    """``G - S`` as an induced subgraph handle."""
    drop = set(s)
    return induced_subgraph(g, [v for v in range(g.n) if v not in drop])


def connected_components(g: Graph) -> list[VertexSet]:
    seen: set[int] = set()
    components = []
    for root in range(g.n):
        if root in seen:
            continue
        comp = distances_from(g, [root])
        seen.update(comp)
        components.append(VertexSet.of(g.n, comp))
    return components


def component_of(g: Graph, v: int) -> VertexSet:
    return VertexSet.of(g.n, distances_from(g, [v]))


def components_meeting(g: Graph, within: Iterable[int], seeds: Iterable[int]) -> VertexSet:
    """Union of the components of ``G(within)`` that contain a seed vertex."""
    allowed = set(within)
    reached: set[int] = set()
    queue = deque(s for s in seeds if s in allowed)
    reached.update(queue)
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w in allowed and w not in reached:
                reached.add(w)
                queue.append(w)
    return VertexSet.of(g.n, reached)
