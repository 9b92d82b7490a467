"""Positive-fraction pipeline: spread-out searches combined into one median bound.

A greedy set ``V0`` of vertices pairwise ``separation`` apart each gets an
independent search. Successful A-side sets are moved together into B, B-side
sets into A, and whichever ordered partition ends up with the larger
imbalance is turned into a count of eigenvalues forced into ``[-1, 1]``.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from hlindex.analysis.imbalance import imbalance, median_bound
from hlindex.analysis.search import (
    DEFAULT_BUDGET,
    DEFAULT_MAX_SIZE,
    search_increasing_set,
)
from hlindex.core.graph import Bipartition, Graph, VertexSet, bipartition, distances_from
from hlindex.errors import PartitionError, SearchRefused
from hlindex.models import (
    IncreaseCertificate,
    PipelineReport,
    SearchOutcome,
    SearchRefusal,
    Side,
)
from hlindex.spectra.exact import count_in_interval
from hlindex.spectra.report import median_indices

logger = logging.getLogger(__name__)

CONFORMING_SEPARATION = 38
CONFORMING_RADIUS = 17
MOVED_SET_GAP = 4


def separated_set(g: Graph, separation: int) -> VertexSet:
    """Greedy, by vertex index: every pair of chosen vertices is ``separation`` apart."""
    blocked: set[int] = set()
    chosen = []
    for v in range(g.n):
        if v in blocked:
            continue
        chosen.append(v)
        blocked.update(distances_from(g, [v], limit=separation - 1))
    return VertexSet.of(g.n, chosen)


def _search_one(
    v: int, g: Graph, bip: Bipartition, radius: int, max_size: int, budget: int
) -> SearchOutcome:
    try:
        return search_increasing_set(g, bip, v, radius=radius, max_size=max_size, budget=budget)
    except SearchRefused as exc:
        return SearchRefusal(v0=v, reason=str(exc))


def _accept(
    g: Graph, outcomes: dict[int, SearchOutcome]
) -> tuple[dict[Side, list[IncreaseCertificate]], list[int]]:
    """Keep certificates whose moved sets stay 4 apart from earlier ones on the same side."""
    kept: dict[Side, list[IncreaseCertificate]] = {Side.AB: [], Side.BA: []}
    near: dict[Side, set[int]] = {Side.AB: set(), Side.BA: set()}
    dropped = []
    for v, outcome in sorted(outcomes.items()):
        if not isinstance(outcome, IncreaseCertificate):
            continue
        side = outcome.side
        if any(c in near[side] for c in outcome.c_set):
            logger.info("v0=%d: moved set %s too close to an earlier one, dropped", v, outcome.c_set.to_list())
            dropped.append(v)
            continue
        kept[side].append(outcome)
        near[side].update(distances_from(g, outcome.c_set, limit=MOVED_SET_GAP - 1))
    return kept, dropped


def fraction_pipeline(
    g: Graph,
    separation: int = CONFORMING_SEPARATION,
    radius: int = CONFORMING_RADIUS,
    max_size: int = DEFAULT_MAX_SIZE,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> PipelineReport:
    g.require_subcubic()
    bip = bipartition(g)
    if bip is None:
        raise PartitionError("the pipeline needs a bipartite graph")
    if separation < 1:
        raise PartitionError(f"separation must be positive, got {separation}")
    conforming = (separation, radius) == (CONFORMING_SEPARATION, CONFORMING_RADIUS)
    if not conforming:
        logger.warning(
            "non-conforming pipeline parameters: separation=%d radius=%d", separation, radius
        )

    v0_set = separated_set(g, separation)
    logger.info("pipeline: %d separated start vertices on n=%d", len(v0_set), g.n)
    run = partial(_search_one, g=g, bip=bip, radius=radius, max_size=max_size, budget=budget)
    if workers > 1 and len(v0_set) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, v0_set))
    else:
        results = [run(v) for v in v0_set]
    outcomes = dict(zip(v0_set, results, strict=True))

    kept, dropped = _accept(g, outcomes)
    a, b = len(kept[Side.AB]), len(kept[Side.BA])
    moved_a = {v for cert in kept[Side.AB] for v in cert.c_set}
    moved_b = {v for cert in kept[Side.BA] for v in cert.c_set}
    a_prime, b_prime = bip.a_side.difference(moved_a), bip.b_side.union(moved_a)
    b_second, a_second = bip.b_side.difference(moved_b), bip.a_side.union(moved_b)

    imb_ab = imbalance(g, bip.a_side, bip.b_side).imb
    imb_ba = imbalance(g, bip.b_side, bip.a_side).imb
    imb_moved_ab = imbalance(g, a_prime, b_prime).imb
    imb_moved_ba = imbalance(g, b_second, a_second).imb
    inequalities = {
        "eq1": imb_ab + imb_ba >= 0,
        "ineq2": imb_moved_ab >= imb_ab + a,
        "ineq3": imb_moved_ba >= imb_ba + b,
        "ineq4": imb_moved_ab + imb_moved_ba >= a + b,
    }
    failed = [name for name, ok in inequalities.items() if not ok]
    if failed:
        logger.warning("pipeline inequalities failed: %s", ", ".join(failed))

    if imb_moved_ab >= imb_moved_ba:
        final_imb, first, second = imb_moved_ab, a_prime, b_prime
    else:
        final_imb, first, second = imb_moved_ba, b_second, a_second
    bound = median_bound(g, first, second)
    h, ell = median_indices(g.n)
    implied = min(g.n, max(0, ell - h + 2 * bound.r + 1))
    exact = count_in_interval(g, -1, 1)
    logger.info(
        "pipeline: a=%d b=%d final imbalance %d, %d eigenvalues forced into [-1, 1], exact %d",
        a, b, final_imb, implied, exact,
    )

    return PipelineReport(
        v0_set=v0_set,
        outcomes=outcomes,
        a=a,
        b=b,
        imb_ab=imb_ab,
        imb_ba=imb_ba,
        imb_moved_ab=imb_moved_ab,
        imb_moved_ba=imb_moved_ba,
        final_imb=final_imb,
        implied_bound=implied,
        median_bound=bound,
        eigen_interval_count=exact,
        inequalities=inequalities,
        separation=separation,
        radius=radius,
        conforming=conforming,
        dropped=tuple(dropped),
    )
