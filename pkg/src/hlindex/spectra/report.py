"""Median eigenvalues and the HL-index, with an exact ``R <= 1`` decision."""

from __future__ import annotations

import logging

from hlindex.core.codec import graph6_encode
from hlindex.core.graph import Graph, bipartition, connected_components, induced_subgraph
from hlindex.core.structure import is_heawood
from hlindex.errors import SpectrumError
from hlindex.models import MedianReport, Verdict
from hlindex.spectra.exact import inertia, matrix_inertia
from hlindex.spectra.numeric import eigenvalues

logger = logging.getLogger(__name__)


def median_indices(n: int) -> tuple[int, int]:
    """(h, ell) = (floor((n+1)/2), ceil((n+1)/2))."""
    return (n + 1) // 2, (n + 2) // 2


def median_report(g: Graph) -> MedianReport:
    if g.n < 1:
        raise SpectrumError("median eigenvalues are undefined for the empty graph")
    h, ell = median_indices(g.n)
    spectrum = eigenvalues(g).values
    lam_h, lam_ell = spectrum[h - 1], spectrum[ell - 1]
    above = inertia(g, 1).greater
    below = inertia(g, -1).less
    exact = above <= h - 1 and below <= g.n - ell
    return MedianReport(
        n=g.n,
        h=h,
        ell=ell,
        lambda_h=lam_h,
        lambda_ell=lam_ell,
        hl_index=max(abs(lam_h), abs(lam_ell)),
        exact_at_most_one=exact,
    )


def median_at_most_sqrt2(g: Graph) -> bool:
    """Exact test of ``R(G) <= sqrt(2)`` for bipartite graphs.

    Counts eigenvalues with ``lambda^2 > 2`` as the positive inertia of
    ``A^2 - 2I``; bipartite symmetry splits them evenly between the two ends.
    """
    if g.n < 1:
        raise SpectrumError("median eigenvalues are undefined for the empty graph")
    if bipartition(g) is None:
        raise SpectrumError("the sqrt(2) test relies on bipartite symmetry")
    square = [[0] * g.n for _ in range(g.n)]
    for v in range(g.n):
        for w in g.adjacency[v]:
            for x in g.adjacency[w]:
                square[v][x] += 1
    outside = matrix_inertia(square, 2).greater
    h, _ = median_indices(g.n)
    above = outside // 2
    logger.debug("sqrt(2) test: %d eigenvalues above sqrt(2), h=%d", above, h)
    return above <= h - 1


def theorem_verdict(g: Graph) -> Verdict:
    """Check ``R(G) <= 1`` exactly; all-Heawood graphs are the documented exception.

    When either this bound or ``R <= sqrt(2)`` fails, the witness carries the
    median eigenvalues and the inertia at both ends.
    """
    g.require_subcubic()
    report = median_report(g)
    sqrt2 = median_at_most_sqrt2(g)
    components = connected_components(g)
    all_heawood = all(
        len(c) == 14 and is_heawood(induced_subgraph(g, c).induced_graph) for c in components
    )
    witness: dict = {}
    if not report.exact_at_most_one or not sqrt2:
        witness = {
            "lambda_h": report.lambda_h,
            "lambda_ell": report.lambda_ell,
            "inertia_at_1": inertia(g, 1).to_dict(),
            "inertia_at_minus_1": inertia(g, -1).to_dict(),
            "at_most_sqrt2": sqrt2,
        }
        if not sqrt2:
            logger.warning("R > sqrt(2) on %s", graph6_encode(g))
    return Verdict(
        graph6=graph6_encode(g),
        n=g.n,
        hl_index=report.hl_index,
        exact_at_most_one=report.exact_at_most_one,
        is_heawood=all_heawood,
        witness=witness,
    )
