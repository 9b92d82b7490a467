"""Executable checks for catalog entries."""

from __future__ import annotations

import logging
from collections.abc import Collection

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from hlindex.core.graph import (
    Graph,
    bipartition,
    connected_components,
    delete_vertices,
    induced_subgraph,
    neighbors_of_set,
)
from hlindex.models import (
    CatalogEntry,
    CheckResult,
    ClaimKind,
    EntryReport,
    ResidualRecipe,
)
from hlindex.spectra.exact import check_eigenvector, inertia, lambda_k_at_most
from hlindex.spectra.numeric import eigenvalues

logger = logging.getLogger(__name__)

FLOAT_MARGIN = 1e-6


def _nontrivial_part(g: Graph) -> Graph:
    keep = [v for comp in connected_components(g) if len(comp) > 1 for v in comp]
    return induced_subgraph(g, keep).induced_graph


def _residual_matches(g: Graph, squares: tuple[int, ...], recipe: ResidualRecipe) -> bool:
    rest = delete_vertices(g, squares).induced_graph
    target = _nontrivial_part(recipe.residual).to_networkx()
    if recipe.mode == "only":
        return nx.is_isomorphic(_nontrivial_part(rest).to_networkx(), target)
    return any(
        nx.is_isomorphic(induced_subgraph(rest, comp).induced_graph.to_networkx(), target)
        for comp in connected_components(rest)
        if len(comp) == recipe.residual.n
    )


def find_residual_deletion(g: Graph, recipe: ResidualRecipe) -> tuple[int, ...] | None:
    """Search for at most ``recipe.size`` vertices to delete.

    For each induced copy of the residual, its outer neighbourhood must go;
    in ``only`` mode a minimum vertex cover of what is left goes too.
    Deletions of exactly ``recipe.size`` win, then the smallest.
    """
    if recipe.squares is not None:
        return recipe.squares
    bip = bipartition(g)
    pattern = _nontrivial_part(recipe.residual).to_networkx()
    seen: set[frozenset[int]] = set()
    best: tuple[int, ...] | None = None

    def rank(d: Collection[int]) -> tuple[bool, int]:
        return len(d) != recipe.size, len(d)

    for mapping in GraphMatcher(g.to_networkx(), pattern).subgraph_isomorphisms_iter():
        copy = frozenset(mapping)
        if copy in seen:
            continue
        seen.add(copy)
        boundary = set(neighbors_of_set(g, copy))
        if len(boundary) > recipe.size:
            continue
        deletion = boundary
        if recipe.mode == "only":
            rest = [v for v in range(g.n) if v not in copy and v not in boundary]
            h = induced_subgraph(g, rest)
            hx = h.induced_graph.to_networkx()
            if hx.number_of_edges():
                local = h.to_local()
                top = {local[v] for v in rest if bip is not None and v in bip.a_side}
                matching = nx.bipartite.hopcroft_karp_matching(hx, top_nodes=top)
                cover = nx.bipartite.to_vertex_cover(hx, matching, top_nodes=top)
                deletion = boundary | {h.vertex_map[i] for i in cover}
        if len(deletion) <= recipe.size and (best is None or rank(deletion) < rank(best)):
            best = tuple(sorted(deletion))
    return best


def _check_residual(e: CatalogEntry) -> CheckResult:
    recipe = e.residual
    assert recipe is not None
    squares = find_residual_deletion(e.graph, recipe)
    if squares is None:
        return CheckResult(
            "residual", False, f"no deletion of <= {recipe.size} vertices leaves {recipe.residual_name}"
        )
    names = [e.labels[v] for v in squares] if e.labels else list(squares)
    if not _residual_matches(e.graph, squares, recipe):
        return CheckResult("residual", False, f"deleting {names} does not leave {recipe.residual_name}")
    index = recipe.k - len(squares)
    if index < 1:
        return CheckResult("residual", False, f"deleting {len(squares)} vertices exceeds k={recipe.k}")
    rest = delete_vertices(e.graph, squares).induced_graph
    ok = lambda_k_at_most(rest, index, 1)
    return CheckResult(
        "residual",
        ok,
        f"deleting {names} leaves {recipe.residual_name}; lambda_{index} of remainder "
        f"{'<=' if ok else '>'} 1",
    )


def verify_entry(e: CatalogEntry) -> EntryReport:
    g = e.graph
    checks: list[CheckResult] = []
    spectrum = eigenvalues(g).values

    for claim in e.claims:
        if claim.k > g.n:
            checks.append(CheckResult(f"claim {claim.label()}", False, f"graph has only {g.n} vertices"))
            continue
        lam = spectrum[claim.k - 1]
        if claim.kind is ClaimKind.EQUALS_ONE:
            count = inertia(g, 1)
            ok = count.greater <= claim.k - 1 < count.greater + count.equal
            detail = f"inertia at 1: {count.greater} above, {count.equal} equal; float {lam:.9f}"
        else:
            count = inertia(g, claim.bound)
            ok = count.greater <= claim.k - 1 and lam < float(claim.bound) - FLOAT_MARGIN
            detail = f"inertia at {claim.bound}: {count.greater} above; float {lam:.9f}"
        checks.append(CheckResult(f"claim {claim.label()}", ok, detail))

    bip = bipartition(g)
    marked_side = bip is not None and (
        e.marked.issubset(bip.a_side) or e.marked.issubset(bip.b_side)
    )
    checks.append(
        CheckResult("marked class", marked_side, "marked set lies in one colour class" if marked_side else "marked set straddles colour classes")
    )

    rest = delete_vertices(g, e.marked).induced_graph
    above = inertia(rest, 1).greater
    checks.append(
        CheckResult("side condition", above == 0, f"{above} eigenvalues of graph - marked exceed 1")
    )

    closed = set(neighbors_of_set(g, e.marked)) | set(e.marked)
    checks.append(
        CheckResult("closure", len(closed) == g.n, f"marked vertices and neighbours cover {len(closed)}/{g.n}")
    )

    if e.certificate is not None:
        ok = check_eigenvector(g, e.certificate.values, e.certificate.eigenvalue)
        checks.append(
            CheckResult("certificate", ok, f"A x {'=' if ok else '!='} {e.certificate.eigenvalue} x")
        )

    if e.residual is not None:
        checks.append(_check_residual(e))

    report = EntryReport(e.name, e.provenance, tuple(checks))
    if not report.passed:
        failed = [c.name for c in checks if not c.passed]
        logger.warning("catalog entry %s failed: %s", e.name, ", ".join(failed))
    return report


def verify_catalog(entries: tuple[CatalogEntry, ...] | list[CatalogEntry]) -> list[EntryReport]:
    return [verify_entry(e) for e in entries]
