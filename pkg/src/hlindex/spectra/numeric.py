"""Floating-point spectra via numpy's symmetric eigensolver."""

from __future__ import annotations

import numpy as np

from hlindex.core.graph import Graph, delete_vertices
from hlindex.errors import SpectrumError
from hlindex.models import InterlacingReport, InterlacingViolation, Spectrum

INTERLACING_TOL = 1e-9


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=float)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def eigenvalues(g: Graph) -> Spectrum:
    if g.n == 0:
        return Spectrum((), 0.0)
    a = adjacency_matrix(g)
    w, vecs = np.linalg.eigh(a)
    residual = float(np.max(np.abs(a @ vecs - vecs * w)))
    return Spectrum(tuple(float(x) for x in w[::-1]), residual)


def verify_interlacing(g: Graph, removed: list[int] | tuple[int, ...]) -> InterlacingReport:
    """Check both Cauchy interlacing chains for ``K = G - removed``."""
    k = len(set(removed))
    if k >= g.n:
        raise SpectrumError("interlacing needs a non-empty remainder graph")
    lam_g = eigenvalues(g).values
    lam_k = eigenvalues(delete_vertices(g, removed).induced_graph).values
    violations = []
    for i in range(g.n - k):
        upper = lam_g[i] - lam_k[i]
        lower = lam_k[i] - lam_g[i + k]
        if upper < -INTERLACING_TOL:
            violations.append(InterlacingViolation(i + 1, "upper", upper))
        if lower < -INTERLACING_TOL:
            violations.append(InterlacingViolation(i + 1, "lower", lower))
    return InterlacingReport(k=k, pairs_checked=g.n - k, violations=tuple(violations))
