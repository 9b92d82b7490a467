"""Combinatorial structure used by the imbalance arguments.

k-chords, 2-induced paths, thick sets, short cycles, good cycles and the
Heawood test. All functions are pure; ``find_2_induced_path`` is the only one
that logs.
"""

from __future__ import annotations

import enum
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import networkx as nx

from hlindex.core.graph import (
    Bipartition,
    Graph,
    SubgraphHandle,
    VertexSet,
    bipartition,
    distances_from,
)
from hlindex.errors import GraphError

logger = logging.getLogger(__name__)

Path = tuple[int, ...]
Cycle = tuple[int, ...]


class ThickKind(enum.Enum):
    A_THICK = "a_thick"
    B_THICK = "b_thick"
    BOTH_FAIL = "both_fail"


@dataclass(frozen=True)
class SubgraphView:
    """A (not necessarily induced) subgraph given by its vertices and edges."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def path_view(path: Sequence[int]) -> SubgraphView:
    return SubgraphView(
        frozenset(path), frozenset(_edge(a, b) for a, b in zip(path, path[1:], strict=False))
    )


def cycle_view(cycle: Sequence[int]) -> SubgraphView:
    closing = [_edge(cycle[-1], cycle[0])] if len(cycle) > 2 else []
    return SubgraphView(
        frozenset(cycle),
        frozenset([*(_edge(a, b) for a, b in zip(cycle, cycle[1:], strict=False)), *closing]),
    )


def handle_view(handle: SubgraphHandle) -> SubgraphView:
    vmap = handle.vertex_map
    return SubgraphView(
        frozenset(vmap), frozenset(_edge(vmap[u], vmap[v]) for u, v in handle.induced_graph.edges())
    )


def _as_view(h: SubgraphHandle | SubgraphView) -> SubgraphView:
    return handle_view(h) if isinstance(h, SubgraphHandle) else h


# ---------------------------------------------------------------------------
# Chords
# ---------------------------------------------------------------------------


def find_k_chords(g: Graph, h: SubgraphHandle | SubgraphView, k: int) -> list[Path]:
    """All paths of length ``k`` meeting ``h`` exactly in their two ends.

    A 1-chord is an edge of G between vertices of ``h`` that is not an edge of
    ``h``. Each chord is reported once, oriented so the first end is smaller.
    """
    if k < 1:
        raise GraphError(f"chord length must be at least 1, got {k}")
    view = _as_view(h)
    found: list[Path] = []
    if k == 1:
        for u in sorted(view.vertices):
            for w in g.adjacency[u]:
                if u < w and w in view.vertices and not view.has_edge(u, w):
                    found.append((u, w))
        return found

    def extend(path: list[int]) -> Iterator[Path]:
        last = path[-1]
        if len(path) == k:
            for w in g.adjacency[last]:
                if w in view.vertices and w > path[0]:
                    yield (*path, w)
            return
        for w in g.adjacency[last]:
            if w not in view.vertices and w not in path:
                path.append(w)
                yield from extend(path)
                path.pop()

    for start in sorted(view.vertices):
        found.extend(extend([start]))
    return found


def is_k_induced(g: Graph, h: SubgraphHandle | SubgraphView, k: int) -> bool:
    return all(not find_k_chords(g, h, j) for j in range(1, k + 1))


# ---------------------------------------------------------------------------
# Cycles and girth
# ---------------------------------------------------------------------------


def canonical_cycle(cycle: Sequence[int]) -> Cycle:
    """Minimum rotation, then the lexicographically smaller direction."""
    i = cycle.index(min(cycle))
    forward = tuple(cycle[i:]) + tuple(cycle[:i])
    backward = (forward[0], *reversed(forward[1:]))
    return min(forward, backward)


def cycles_through(g: Graph, anchor: int | tuple[int, int], length: int) -> list[Cycle]:
    if length < 3:
        raise GraphError(f"cycle length must be at least 3, got {length}")
    found: set[Cycle] = set()

    if isinstance(anchor, tuple):
        u, v = anchor
        if not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        start, path = u, [u, v]
    else:
        start, path = anchor, [anchor]

    def extend(path: list[int]) -> None:
        last = path[-1]
        if len(path) == length:
            if g.has_edge(last, start):
                found.add(canonical_cycle(path))
            return
        for w in g.adjacency[last]:
            if w not in path:
                path.append(w)
                extend(path)
                path.pop()

    extend(path)
    return sorted(found)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest."""
    best: int | None = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adjacency[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w:
                        cyc = dist[u] + dist[w] + 1
                        if best is None or cyc < best:
                            best = cyc
            if best is not None and 2 * dist[frontier[0]] + 1 >= best:
                break
            frontier = nxt
    return best


def is_internal_edge(g: Graph, e: tuple[int, int]) -> bool:
    """An edge is internal when some 6-cycle passes through it."""
    return bool(cycles_through(g, e, 6))


def is_good_cycle(g: Graph, d: Sequence[int]) -> bool:
    """Whether one colour class of the induced even cycle ``d`` is 2-spread.

    A class fails when two of its members have a common neighbour off ``d``.
    """
    if len(d) % 2 or len(d) < 4:
        raise GraphError(f"good cycles have even length at least 4, got {len(d)}")
    view = cycle_view(d)
    if len(view.edges) != len(d) or any(not g.has_edge(*e) for e in view.edges):
        raise GraphError(f"{list(d)} is not a cycle of the graph")
    if find_k_chords(g, view, 1):
        raise GraphError(f"cycle {list(d)} is not induced")

    def spread(cls: Sequence[int]) -> bool:
        members = set(cls)
        for u in cls:
            for w in g.adjacency[u]:
                if w in view.vertices:
                    continue
                if any(x != u and x in members for x in g.adjacency[w]):
                    return False
        return True

    return spread(d[0::2]) or spread(d[1::2])


# ---------------------------------------------------------------------------
# Thick sets
# ---------------------------------------------------------------------------


def _thick_for(g: Graph, a: VertexSet, b: VertexSet, u: set[int]) -> bool:
    ua = [v for v in a if v in u]
    ub = [v for v in b if v in u]
    if len(ua) <= len(ub):
        return False
    if any(sum(w not in u for w in g.adjacency[v]) > 1 for v in ua):
        return False
    return all(sum(w in u for w in g.adjacency[v]) <= 1 for v in b if v not in u)


def is_thick(g: Graph, bip: Bipartition, u: Iterable[int]) -> ThickKind:
    us = set(u)
    if _thick_for(g, bip.a_side, bip.b_side, us):
        return ThickKind.A_THICK
    if _thick_for(g, bip.b_side, bip.a_side, us):
        return ThickKind.B_THICK
    return ThickKind.BOTH_FAIL


# ---------------------------------------------------------------------------
# 2-induced paths
# ---------------------------------------------------------------------------


def _on_geodesics(g: Graph, x: int, dist: dict[int, int]) -> set[int]:
    """Vertices lying on some shortest path from ``x`` down to the BFS root."""
    seen = {x}
    stack = [x]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if dist.get(w) == dist[u] - 1 and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _above(g: Graph, z: int, dist: dict[int, int]) -> set[int]:
    """Vertices from which ``z`` is reached by stepping down one level at a time."""
    seen = {z}
    stack = [z]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if dist.get(w) == dist[u] + 1 and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _descend(g: Graph, x: int, z: int, dist: dict[int, int], on_x: set[int]) -> list[int]:
    """Shortest path from ``x`` down to ``z``, smallest index first at each step."""
    allowed = on_x & _above(g, z, dist)
    path = [x]
    while path[-1] != z:
        u = path[-1]
        path.append(min(w for w in g.adjacency[u] if dist.get(w) == dist[u] - 1 and w in allowed))
    return path


def _two_chord_free_extension(g: Graph, path: Sequence[int], w: int) -> bool:
    """Whether appending ``w`` keeps ``path`` free of 1- and 2-chords."""
    last = path[-1]
    on_path = set(path)
    for p in path[:-1]:
        if g.has_edge(p, w):
            return False
    for p in path:
        if p == last:
            continue
        for c in g.adjacency[p]:
            if c not in on_path and c != w and g.has_edge(c, w):
                return False
    return True


def _exhaustive_2_induced(g: Graph, x: int, y: int, region: set[int]) -> Path | None:
    """Shortest 2-induced x-y path inside ``region`` by iterative deepening."""
    for limit in range(1, len(region)):
        stack: list[tuple[list[int], Iterator[int]]] = [([x], iter(g.adjacency[x]))]
        while stack:
            path, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                continue
            if w not in region or w in path or not _two_chord_free_extension(g, path, w):
                continue
            if w == y:
                return (*path, w)
            if len(path) < limit:
                stack.append(([*path, w], iter(g.adjacency[w])))
    return None


def find_2_induced_path(
    g: Graph, v0: int, r: int, x: int, y: int, *, trusted: bool = False
) -> Path | None:
    """A path from x to y with no 1-chord or 2-chord inside ``ball(v0, r+1)``.

    Follows the shortest-paths construction: geodesics from x and y to v0 that
    share the longest possible tail, joined at the branch point, then the
    single 2-chord repair. Ties in the branch point are resolved by exhaustive
    search instead of guessing.

    ``trusted`` skips the bipartite and girth scans for callers that already
    ran them on ``g``.
    """
    if not trusted:
        if bipartition(g) is None:
            return None
        gg = girth(g)
        if gg is not None and gg < 6:
            return None
    dist = distances_from(g, [v0], limit=r + 1)
    if dist.get(x, r + 1) > r or dist.get(y, r + 1) > r:
        return None
    if x == y:
        return (x,)
    if g.has_edge(x, y):
        return (x, y)
    region = set(dist)

    on_x = _on_geodesics(g, x, dist)
    on_y = _on_geodesics(g, y, dist)
    common = on_x & on_y
    depth = max(dist[z] for z in common)
    branch = sorted(z for z in common if dist[z] == depth)
    ambiguous = len(branch) > 1
    if ambiguous:
        logger.info(
            "2-induced path %d-%d around %d: %d branch points at depth %d, searching exhaustively",
            x, y, v0, len(branch), depth,
        )
        found = _exhaustive_2_induced(g, x, y, region)
        if found is not None:
            return found

    z = branch[0]
    px = _descend(g, x, z, dist, on_x)
    py = _descend(g, y, z, dist, on_y)
    candidate = _repair_two_chord(g, px, py, dist)
    if candidate is not None and is_k_induced(g, path_view(candidate), 2):
        return candidate
    logger.info("2-induced path %d-%d: constructed path has chords, searching exhaustively", x, y)
    return _exhaustive_2_induced(g, x, y, region)


def _repair_two_chord(
    g: Graph, px: list[int], py: list[int], dist: dict[int, int]
) -> Path | None:
    """Join px (x..z) and py (y..z); splice along the deepest crossing 2-chord."""
    joined = (*px, *reversed(py[:-1]))
    view = path_view(joined)
    side_x = set(px[:-1])
    side_y = set(py[:-1])
    crossing = [
        c for c in find_k_chords(g, view, 2)
        if (c[0] in side_x and c[2] in side_y) or (c[0] in side_y and c[2] in side_x)
    ]
    if not crossing:
        return joined
    z = px[-1]

    def depth(c: Path) -> int:
        ux = c[0] if c[0] in side_x else c[2]
        return dist[ux] - dist[z]

    best = max(crossing, key=lambda c: (depth(c), -c[0], -c[2]))
    ux, mid, uy = (best if best[0] in side_x else tuple(reversed(best)))
    head = px[: px.index(ux) + 1]
    tail = list(reversed(py[: py.index(uy) + 1]))
    return (*head, mid, *tail)


# ---------------------------------------------------------------------------
# Heawood
# ---------------------------------------------------------------------------


def is_heawood(g: Graph) -> bool:
    if g.n != 14 or g.edge_count != 21 or any(d != 3 for d in g.degrees()):
        return False
    if bipartition(g) is None or girth(g) != 6:
        return False
    from hlindex.catalog.constructions import heawood

    return nx.is_isomorphic(g.to_networkx(), heawood().to_networkx())
