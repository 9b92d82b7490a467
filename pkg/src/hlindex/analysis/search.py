"""Bounded search for a vertex set that raises imbalance near a given vertex.

The search walks a ladder of cheap structural patterns before falling back
to enumeration, and every certificate it returns has been replayed from
scratch. Rungs, in order:

``degree_le_1``  a vertex of degree at most one
``four_cycle``   opposite corners of a 4-cycle
``degree_two``   2-induced paths between degree-2 vertices, depth-2 trees,
                 good 8- and 12-cycles
``thick``        thick balls around nearby vertices
``catalog``      induced catalog graphs whose marked vertices are closed
``exhaustive``   connected candidate sets by radius, then size
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from itertools import islice

from networkx.algorithms.isomorphism import GraphMatcher

from hlindex.analysis.imbalance import increases_imbalance, ordered_sides, q_test, replay
from hlindex.core.graph import (
    Bipartition,
    Graph,
    ball,
    component_of,
    distances_from,
    induced_subgraph,
)
from hlindex.core.structure import (
    ThickKind,
    cycles_through,
    find_2_induced_path,
    find_k_chords,
    cycle_view,
    girth,
    is_good_cycle,
    is_heawood,
    is_thick,
)
from hlindex.errors import CertificateError, GraphError, PartitionError, SearchRefused
from hlindex.models import IncreaseCertificate, SearchExhausted, Side

logger = logging.getLogger(__name__)

STRATEGIES = ("degree_le_1", "four_cycle", "degree_two", "thick", "catalog", "exhaustive")
PATTERN_RADIUS = 3
CATALOG_PATTERNS = ("c4_plus", "c6_plus", "p7_minus", "c8_plus", "h0_eq", "c6_hat", "b3")
MAX_MATCHES_PER_PATTERN = 200

DEFAULT_RADIUS = 17
DEFAULT_MAX_SIZE = 8
DEFAULT_BUDGET = 10_000_000


@dataclass
class _Search:
    g: Graph
    bip: Bipartition
    v0: int
    radius: int
    max_size: int
    budget: int
    dist: dict[int, int] = field(default_factory=dict)
    tried: dict[Side, int] = field(default_factory=lambda: {Side.AB: 0, Side.BA: 0})
    seen: set[tuple[Side, frozenset[int]]] = field(default_factory=set)

    def side_of(self, v: int) -> Side:
        return Side.AB if v in self.bip.a_side else Side.BA

    def near(self, limit: int = PATTERN_RADIUS) -> list[int]:
        r = min(self.radius, limit)
        return sorted((v for v, d in self.dist.items() if d <= r), key=lambda v: (self.dist[v], v))

    def attempt(self, c: Iterable[int], strategy: str) -> IncreaseCertificate | None:
        cs = frozenset(c)
        if not cs:
            return None
        side = self.side_of(min(cs))
        first, second = ordered_sides(self.bip, side)
        if not cs <= first.as_frozenset() or (side, cs) in self.seen:
            return None
        self.seen.add((side, cs))
        self.tried[side] += 1
        _, _, passes = q_test(self.g, second, cs)
        if not passes:
            return None
        cert = increases_imbalance(self.g, first, second, cs, side=side, strategy=strategy)
        if cert is None:
            return None
        problems = replay(self.g, self.bip, cert)
        if problems:
            raise CertificateError(f"certificate for {sorted(cs)} failed replay: {problems}")
        logger.debug("v0=%d: %s found C=%s (%s)", self.v0, strategy, sorted(cs), side.value)
        return cert


# ---------------------------------------------------------------------------
# Pattern rungs
# ---------------------------------------------------------------------------


def _degree_le_1(s: _Search) -> Iterator[frozenset[int]]:
    for v in s.near(s.radius):
        if s.g.degree(v) <= 1:
            yield frozenset([v])


def _four_cycle(s: _Search) -> Iterator[frozenset[int]]:
    for v in s.near():
        for cyc in cycles_through(s.g, v, 4):
            yield frozenset(cyc[0::2])
            yield frozenset(cyc[1::2])
            for i, corner in enumerate(cyc):
                after, before = cyc[(i + 1) % 4], cyc[i - 1]
                for u in s.g.adjacency[corner]:
                    if u in cyc:
                        continue
                    yield frozenset([u, after])
                    yield frozenset([u, before])
                    # K3,3 shape: both neighbours of the corner on the cycle plus one off it
                    yield frozenset([after, before, u])


def _degree_two(s: _Search) -> Iterator[frozenset[int]]:
    g = s.g
    near = s.near()
    gg = girth(g)
    if gg is None or gg >= 6:
        twos = [v for v in near if g.degree(v) == 2]
        for i, x in enumerate(twos):
            for y in twos[i + 1:]:
                if s.side_of(x) is not s.side_of(y):
                    continue
                path = find_2_induced_path(g, s.v0, PATTERN_RADIUS, x, y, trusted=True)
                if path is not None:
                    yield frozenset(path[0::2])
    for w in near:
        sphere = sorted(v for v, d in distances_from(g, [w], limit=2).items() if d == 2)
        if not sphere:
            continue
        yield frozenset([w, *sphere])
        if g.degree(w) == 2 and not cycles_through(g, w, 6):
            for i, x in enumerate(sphere):
                for y in sphere[i + 1:]:
                    yield frozenset([w, x, y])
    for w in near:
        for length in (8, 12):
            for cyc in cycles_through(g, w, length):
                if find_k_chords(g, cycle_view(cyc), 1):
                    continue
                if is_good_cycle(g, cyc):
                    yield frozenset(cyc[0::2])
                    yield frozenset(cyc[1::2])


def _thick(s: _Search) -> Iterator[frozenset[int]]:
    for w in s.near():
        for r in range(1, PATTERN_RADIUS + 1):
            u = set(ball(s.g, w, r))
            kind = is_thick(s.g, s.bip, u)
            if kind is ThickKind.A_THICK:
                yield frozenset(u & s.bip.a_side.as_frozenset())
            elif kind is ThickKind.B_THICK:
                yield frozenset(u & s.bip.b_side.as_frozenset())


def _catalog(s: _Search) -> Iterator[frozenset[int]]:
    from hlindex.catalog.entries import get_entry

    region = induced_subgraph(s.g, s.near(PATTERN_RADIUS + 2))
    host = region.induced_graph.to_networkx()
    for name in CATALOG_PATTERNS:
        entry = get_entry(name)
        if entry.graph.n > region.induced_graph.n:
            continue
        matcher = GraphMatcher(host, entry.graph.to_networkx())
        for mapping in islice(matcher.subgraph_isomorphisms_iter(), MAX_MATCHES_PER_PATTERN):
            image = {e: region.vertex_map[h] for h, e in mapping.items()}
            marked = [image[m] for m in entry.marked]
            if all(s.g.degree(image[m]) == entry.graph.degree(m) for m in entry.marked):
                yield frozenset(marked)


# ---------------------------------------------------------------------------
# Enumeration rung
# ---------------------------------------------------------------------------


def _two_step(g: Graph, v: int) -> list[int]:
    return sorted({x for w in g.adjacency[v] for x in g.adjacency[w] if x != v})


def _connected_sets(
    s: _Search, root: int, size: int, cache: dict[int, list[int]]
) -> Iterator[list[int]]:
    """Sets of ``size`` same-side vertices, connected through common neighbours,
    whose farthest vertex (by distance, then index) is ``root``."""

    def key(v: int) -> tuple[int, int]:
        return (s.dist[v], v)

    top = key(root)

    def step(v: int) -> list[int]:
        if v not in cache:
            cache[v] = [x for x in _two_step(s.g, v) if x in s.dist]
        return cache[v]

    def extend(sub: list[int], ext: list[int], closed: set[int]) -> Iterator[list[int]]:
        if len(sub) == size:
            yield sub
            return
        ext = sorted(ext, key=key)
        while ext:
            w = ext.pop(0)
            fresh = [u for u in step(w) if key(u) < top and u not in closed and u not in ext]
            yield from extend([*sub, w], ext + fresh, closed | {w, *step(w)})

    start = [u for u in step(root) if key(u) < top]
    yield from extend([root], start, {root, *step(root)})


def _exhaustive(s: _Search) -> tuple[IncreaseCertificate | None, int, bool]:
    cache: dict[int, list[int]] = {}
    reached = 0
    for r in range(1, s.radius + 1):
        reached = r
        ring = [v for v, d in s.dist.items() if d == r or (r == 1 and d <= 1)]
        if not ring:
            break
        ring.sort(key=lambda v: (s.dist[v], v))
        for size in range(1, s.max_size + 1):
            for side in (Side.AB, Side.BA):
                if s.tried[side] >= s.budget:
                    continue
                for root in ring:
                    if s.side_of(root) is not side:
                        continue
                    for sub in _connected_sets(s, root, size, cache):
                        if s.tried[side] >= s.budget:
                            break
                        cert = s.attempt(sub, "exhaustive")
                        if cert is not None:
                            return cert, r, False
            if all(s.tried[side] >= s.budget for side in Side):
                return None, r, True
    return None, reached, False


RUNGS = {
    "degree_le_1": _degree_le_1,
    "four_cycle": _four_cycle,
    "degree_two": _degree_two,
    "thick": _thick,
    "catalog": _catalog,
}


def _check_bipartition(g: Graph, bip: Bipartition) -> None:
    if len(bip.a_side) + len(bip.b_side) != g.n or set(bip.a_side) & set(bip.b_side):
        raise PartitionError("bipartition does not partition the vertex set")
    a = bip.a_side.as_frozenset()
    for u, v in g.edges():
        if (u in a) == (v in a):
            raise PartitionError(f"edge ({u}, {v}) lies inside one side")


def search_increasing_set(
    g: Graph,
    bip: Bipartition,
    v0: int,
    radius: int = DEFAULT_RADIUS,
    max_size: int = DEFAULT_MAX_SIZE,
    budget: int = DEFAULT_BUDGET,
    strategies: Iterable[str] | None = None,
) -> IncreaseCertificate | SearchExhausted:
    """Find C inside ``ball(v0, radius)`` on either side that raises imbalance.

    Raises :class:`SearchRefused` when the component of ``v0`` is the Heawood
    graph, where no such set exists.
    """
    g.require_subcubic()
    _check_bipartition(g, bip)
    if not 0 <= v0 < g.n:
        raise GraphError(f"vertex {v0} out of range for n={g.n}")
    ladder = tuple(strategies) if strategies is not None else STRATEGIES
    unknown = set(ladder) - set(STRATEGIES)
    if unknown:
        raise GraphError(f"unknown search strategies {sorted(unknown)}")
    comp = component_of(g, v0)
    if len(comp) == 14 and is_heawood(induced_subgraph(g, comp).induced_graph):
        raise SearchRefused(f"component of vertex {v0} is the Heawood graph")

    s = _Search(g, bip, v0, radius, max_size, budget)
    s.dist = distances_from(g, [v0], limit=radius)
    for name in ladder:
        if name == "exhaustive":
            cert, reached, hit = _exhaustive(s)
            if cert is not None:
                return cert
            logger.info("v0=%d: search exhausted at radius %d (budget hit: %s)", v0, reached, hit)
            return SearchExhausted(
                v0=v0,
                radius_reached=reached,
                size_reached=max_size,
                candidates_tried={side.value: s.tried[side] for side in Side},
                strategies=ladder,
                budget_hit=hit,
            )
        for candidate in RUNGS[name](s):
            cert = s.attempt(candidate, name)
            if cert is not None:
                return cert
    return SearchExhausted(
        v0=v0,
        radius_reached=0,
        size_reached=0,
        candidates_tried={side.value: s.tried[side] for side in Side},
        strategies=ladder,
    )
