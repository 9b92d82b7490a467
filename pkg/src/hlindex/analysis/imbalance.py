"""Imbalance of ordered partitions and the tests that move sets across them.

For an ordered partition (A, B), ``s`` is the smallest index with
``lambda_s(G(B)) <= 1`` and ``t = floor((|B| - |A| + 1) / 2)``; the imbalance
is ``t - s + 1``. Moving a set ``C`` from A to B can only be certified by
exact inertia, never by float eigenvalues.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable

from hlindex.core.graph import (
    Bipartition,
    Graph,
    VertexSet,
    bipartition,
    components_meeting,
    induced_subgraph,
    neighbors_of_set,
)
from hlindex.core.structure import ThickKind, is_thick
from hlindex.errors import CertificateError, PartitionError
from hlindex.models import (
    ImbalanceReport,
    IncreaseCertificate,
    InertiaCount,
    MedianBound,
    Side,
)
from hlindex.spectra.exact import inertia, lambda_k_at_most
from hlindex.spectra.report import median_indices

logger = logging.getLogger(__name__)


def _checked_partition(g: Graph, a: Iterable[int], b: Iterable[int]) -> tuple[VertexSet, VertexSet]:
    sa = a if isinstance(a, VertexSet) else VertexSet.of(g.n, a)
    sb = b if isinstance(b, VertexSet) else VertexSet.of(g.n, b)
    if set(sa) & set(sb):
        raise PartitionError(f"sides overlap on {sorted(set(sa) & set(sb))}")
    if len(sa) + len(sb) != g.n:
        raise PartitionError(f"sides cover {len(sa) + len(sb)} of {g.n} vertices")
    return sa, sb


def imbalance(g: Graph, a: Iterable[int], b: Iterable[int]) -> ImbalanceReport:
    sa, sb = _checked_partition(g, a, b)
    # empty B has an empty spectrum: s = 1
    s = 1 + inertia(induced_subgraph(g, sb).induced_graph, 1).greater
    t = (len(sb) - len(sa) + 1) // 2
    return ImbalanceReport(s=s, t=t, imb=t - s + 1)


def median_bound(g: Graph, a: Iterable[int], b: Iterable[int]) -> MedianBound:
    """Index ``h - r`` with ``lambda_{h-r}(G) <= 1`` for ``r = imb(A, B) - 1``."""
    sa, sb = _checked_partition(g, a, b)
    report = imbalance(g, sa, sb)
    h, _ = median_indices(g.n)
    r = report.imb - 1
    index = h - r
    assert index == len(sa) + report.s, (index, len(sa), report.s)
    if not 1 <= index <= g.n:
        raise PartitionError(f"degenerate partition: bound index {index} outside 1..{g.n}")
    return MedianBound(r=r, index=index, certified=lambda_k_at_most(g, index, 1))


def converse_applies(g: Graph, b: VertexSet, c: Iterable[int]) -> bool:
    """N(C) lies in B and every vertex of N(C) has all its neighbours in A."""
    nc = neighbors_of_set(g, c)
    return all(v in b and not any(w in b for w in g.adjacency[v]) for v in nc)


def q_region(g: Graph, b: Iterable[int], c: Iterable[int]) -> VertexSet:
    """Union of the components of G(B u C) that meet C."""
    cs = list(c)
    return components_meeting(g, [*b, *cs], cs)


def q_test(g: Graph, b: Iterable[int], c: Iterable[int]) -> tuple[VertexSet, InertiaCount, bool]:
    """Local half of the increase test: is ``lambda_|C|(Q) <= 1``?"""
    cs = list(c)
    q = q_region(g, b, cs)
    count = inertia(induced_subgraph(g, q).induced_graph, 1)
    return q, count, count.greater <= len(cs) - 1


def increases_imbalance(
    g: Graph,
    a: Iterable[int],
    b: Iterable[int],
    c: Iterable[int],
    side: Side = Side.AB,
    strategy: str = "",
) -> IncreaseCertificate | None:
    """Certificate that moving C from A to B raises imb, or None.

    Both outcomes are confirmed by recomputing the imbalance directly; the
    negative outcome only when the converse precondition holds.
    """
    sa, sb = _checked_partition(g, a, b)
    cs = VertexSet.of(g.n, c)
    if not cs:
        raise PartitionError("moved set is empty")
    if not cs.issubset(sa):
        raise PartitionError(f"moved set {cs.to_list()} is not inside the first side")
    q, count, passes = q_test(g, sb, cs)
    if not passes and not converse_applies(g, sb, cs):
        return None

    before = imbalance(g, sa, sb).imb
    after = imbalance(g, sa.difference(cs), sb.union(cs)).imb
    if passes:
        if after <= before:
            raise CertificateError(
                f"lambda_{len(cs)}(Q) <= 1 but imbalance went {before} -> {after} for C={cs.to_list()}"
            )
        return IncreaseCertificate(
            side=side,
            c_set=cs,
            q_subgraph=induced_subgraph(g, q),
            q_inertia=count,
            imb_before=before,
            imb_after=after,
            strategy=strategy,
        )
    if after > before:
        raise CertificateError(
            f"lambda_{len(cs)}(Q) > 1 yet imbalance rose {before} -> {after} for C={cs.to_list()}"
        )
    return None


def thick_increase(g: Graph, bip: Bipartition, u: Iterable[int]) -> IncreaseCertificate | None:
    us = set(u)
    kind = is_thick(g, bip, us)
    if kind is ThickKind.BOTH_FAIL:
        return None
    if kind is ThickKind.A_THICK:
        first, second, side = bip.a_side, bip.b_side, Side.AB
    else:
        first, second, side = bip.b_side, bip.a_side, Side.BA
    c = [v for v in first if v in us]
    cert = increases_imbalance(g, first, second, c, side=side, strategy="thick")
    if cert is None:
        raise CertificateError(f"{kind.value} set {sorted(us)} produced no increase")
    return cert


def ordered_sides(bip: Bipartition, side: Side) -> tuple[VertexSet, VertexSet]:
    return (bip.a_side, bip.b_side) if side is Side.AB else (bip.b_side, bip.a_side)


def replay(g: Graph, bip: Bipartition, cert: IncreaseCertificate) -> list[str]:
    """Recompute a certificate from scratch; returns the mismatches found."""
    first, second = ordered_sides(bip, cert.side)
    problems = []
    if not cert.c_set.issubset(first):
        return [f"c_set {cert.c_set.to_list()} not inside {cert.side.value} first side"]
    q, count, passes = q_test(g, second, cert.c_set)
    if q != cert.q_subgraph.vertices:
        problems.append(f"q_vertices differ: expected {q.to_list()}")
    if count != cert.q_inertia:
        problems.append(f"q_inertia differs: expected {count.to_dict()}")
    if not passes:
        problems.append(f"lambda_{len(cert.c_set)}(Q) exceeds 1")
    before = imbalance(g, first, second).imb
    after = imbalance(g, first.difference(cert.c_set), second.union(cert.c_set)).imb
    if (before, after) != (cert.imb_before, cert.imb_after):
        problems.append(f"imbalance {before} -> {after}, certificate says {cert.imb_before} -> {cert.imb_after}")
    if after <= before:
        problems.append("no increase")
    return problems


def replay_certificate(g: Graph, data: dict) -> list[str]:
    """Replay a certificate given in its JSON form against the canonical bipartition."""
    bip = bipartition(g)
    if bip is None:
        return ["graph is not bipartite"]
    try:
        side = Side(data["side"])
        c_set = VertexSet.of(g.n, data["c_set"])
        q_vertices = VertexSet.of(g.n, data["q_vertices"])
        cert = IncreaseCertificate(
            side=side,
            c_set=c_set,
            q_subgraph=induced_subgraph(g, q_vertices),
            q_inertia=InertiaCount.from_dict(data["q_inertia"]),
            imb_before=int(data["imb_before"]),
            imb_after=int(data["imb_after"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise PartitionError(f"malformed certificate: {exc}") from exc
    return replay(g, bip, cert)
