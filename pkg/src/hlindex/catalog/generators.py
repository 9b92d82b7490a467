"""Random and exhaustive sources of connected bipartite subcubic graphs.

Random graphs grow a degree-bounded spanning tree across two colour classes
and then sprinkle extra edges, so every attempt is connected and bipartite
by construction; the girth floor is enforced edge by edge. Exhaustive
enumeration extends each graph on ``n - 1`` vertices by one vertex joined to
one to three vertices of a single colour class and keeps one representative
per isomorphism class (Weisfeiler-Lehman hash buckets, then an exact test).
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from itertools import combinations

import networkx as nx
import numpy as np

from hlindex.core.graph import Graph, bipartition, connected_components, distances_from
from hlindex.core.structure import girth
from hlindex.errors import GeneratorError
from hlindex.models import GeneratorConfig

logger = logging.getLogger(__name__)

NMAX_DEFAULT = 12
NMAX_LIMIT = 14


# ---------------------------------------------------------------------------
# Random
# ---------------------------------------------------------------------------


def _far_enough(adj: list[set[int]], u: int, v: int, floor: int | None) -> bool:
    """Adding u-v keeps every cycle at length >= floor."""
    if floor is None:
        return True
    g = Graph(len(adj), tuple(tuple(sorted(a)) for a in adj), 0)
    dist = distances_from(g, [u], limit=floor - 2)
    return v not in dist


def _attempt(cfg: GeneratorConfig, rng: np.random.Generator) -> Graph | None:
    n = cfg.n
    lo = max(1, -(-(n - 1) // 3))
    a = int(rng.integers(lo, n // 2 + 1))
    side = [0] * a + [1] * (n - a)
    adj: list[set[int]] = [set() for _ in range(n)]

    if cfg.connected:
        order = [int(v) for v in rng.permutation(n)]
        tree = [order[0]]
        pending = order[1:]
        while pending:
            placed = False
            for idx in rng.permutation(len(pending)):
                u = pending[int(idx)]
                hooks = [w for w in tree if side[w] != side[u] and len(adj[w]) < 3]
                if hooks:
                    w = hooks[int(rng.integers(len(hooks)))]
                    adj[u].add(w)
                    adj[w].add(u)
                    tree.append(u)
                    pending.remove(u)
                    placed = True
                    break
            if not placed:
                return None

    pairs = [(x, y) for x in range(a) for y in range(a, n) if y not in adj[x]]
    room = sum(3 - len(adj[x]) for x in range(a))
    extra = int(rng.integers(0, room + 1)) if room else 0
    for idx in rng.permutation(len(pairs)):
        if extra <= 0:
            break
        x, y = pairs[int(idx)]
        if len(adj[x]) < 3 and len(adj[y]) < 3 and _far_enough(adj, x, y, cfg.girth):
            adj[x].add(y)
            adj[y].add(x)
            extra -= 1

    perm = [int(v) for v in rng.permutation(n)]
    edges = [(perm[u], perm[w]) for u in range(n) for w in adj[u] if u < w]
    return Graph.from_edge_list(n, edges)


def satisfies(g: Graph, cfg: GeneratorConfig) -> bool:
    if g.n != cfg.n or not g.is_subcubic() or bipartition(g) is None:
        return False
    if cfg.connected and len(connected_components(g)) > 1:
        return False
    if cfg.girth is not None:
        gg = girth(g)
        if gg is not None and gg < cfg.girth:
            return False
    return True


def random_bipartite_subcubic(cfg: GeneratorConfig) -> Graph:
    """Seeded random graph meeting ``cfg``; the same config gives the same graph."""
    if cfg.n < 2:
        raise GeneratorError(f"random graphs need n >= 2, got {cfg.n}")
    rng = np.random.default_rng(cfg.seed)
    for attempt in range(cfg.max_tries):
        g = _attempt(cfg, rng)
        if g is not None and satisfies(g, cfg):
            if attempt:
                logger.debug("random graph n=%d seed=%d accepted after %d retries", cfg.n, cfg.seed, attempt)
            return g
    raise GeneratorError(f"no graph satisfying {cfg} after {cfg.max_tries} attempts")


def random_corpus(
    count: int, n_min: int, n_max: int, seed: int = 0, girth_floor: int | None = None
) -> Iterator[Graph]:
    """``count`` graphs with sizes drawn from ``[n_min, n_max]``, seeds derived from ``seed``."""
    sizes = np.random.default_rng(seed).integers(n_min, n_max + 1, size=count)
    for i, n in enumerate(sizes):
        yield random_bipartite_subcubic(GeneratorConfig(n=int(n), seed=seed * 100003 + i, girth=girth_floor))


# ---------------------------------------------------------------------------
# Exhaustive
# ---------------------------------------------------------------------------


class IsomorphismFilter:
    """Keeps the first graph of each isomorphism class it is shown."""

    def __init__(self) -> None:
        self._buckets: dict[str, list[nx.Graph]] = {}

    def add(self, g: Graph) -> bool:
        gx = g.to_networkx()
        key = f"{sorted(g.degrees())}:{nx.weisfeiler_lehman_graph_hash(gx, iterations=3)}"
        bucket = self._buckets.setdefault(key, [])
        if any(nx.is_isomorphic(gx, other) for other in bucket):
            return False
        bucket.append(gx)
        return True

    def __len__(self) -> int:
        return sum(len(b) for b in self._buckets.values())


def _children(g: Graph) -> Iterator[Graph]:
    bip = bipartition(g)
    assert bip is not None
    for cls in (bip.a_side, bip.b_side):
        open_slots = [v for v in cls if g.degree(v) < 3]
        for size in range(1, 4):
            for nbrs in combinations(open_slots, size):
                yield g.with_edges(((g.n, v) for v in nbrs), extra_vertices=1)


def enumerate_bipartite_subcubic(
    n_max: int = NMAX_DEFAULT, n_min: int = 1, limit: int = NMAX_LIMIT
) -> Iterator[Graph]:
    """Every connected bipartite subcubic graph with ``n_min <= n <= n_max``, once each.

    Output is grouped by ``n`` in increasing order.
    """
    if n_max > limit:
        raise GeneratorError(f"enumeration is capped at n <= {limit}, got {n_max}")
    if n_max < 1:
        return
    level = [Graph.empty(1)]
    for n in range(1, n_max + 1):
        if n > 1:
            seen = IsomorphismFilter()
            level = [child for g in level for child in _children(g) if seen.add(child)]
        logger.info("n=%d: %d connected bipartite subcubic graphs", n, len(level))
        if n >= n_min:
            yield from level
