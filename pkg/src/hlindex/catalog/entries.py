"""The catalog of small graphs whose marked class raises imbalance.

Every entry is a closure: marked vertices, all their neighbours, and pendants
bringing each marked vertex up to degree 3 unless noted. Hosts are written
with the vertex names used in the case analysis (``1..16`` around the
Heawood-like cores, letters for attached paths and hexagons).

Label tables
------------
``h0_host``     8-cycle 1..8, paths 1-12-5 and 2-11-6
``h1_host``     h0 plus 3-10-7 and 4-9-8
``h2_host``     h1 plus 10-13-12 and 9-14-11 (Heawood minus edge 13-14)
``D``           hexagon v1..v6 used by the h1j, h123 and l33 families
pendants        ``c'`` for the single pendant of ``c``; ``c'1``, ``c'2`` for two
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Mapping
from fractions import Fraction

from hlindex.catalog.constructions import (
    LabeledGraph,
    c6_plus_graph,
    cycle_graph,
    h0_host,
    h1_host,
    h2_host,
    h6_0_residual,
    h7_residual,
    matching_graph,
    p7_minus_graph,
    p7_minus_host,
    qc_closure,
)
from hlindex.core.graph import Graph, VertexSet, bipartition
from hlindex.errors import GraphError
from hlindex.models import (
    CatalogEntry,
    Claim,
    ClaimKind,
    Eigenvector,
    Provenance,
    ResidualRecipe,
)
from hlindex.spectra.exact import inertia

logger = logging.getLogger(__name__)

PINNED = Provenance.TEXT_PINNED
RECON = Provenance.RECONSTRUCTED

SPARE_EDGES = "deleting the squares also leaves isolated edges beside the residual"
UNRECORDED_SQUARES = "square deletion not recorded; the claim rests on the exact inertia count"


def equals_one(k: int) -> Claim:
    return Claim(k, ClaimKind.EQUALS_ONE)


def less_than(k: int, bound: str) -> Claim:
    return Claim(k, ClaimKind.LESS_THAN, Fraction(bound))


def _vector(labels: tuple[str, ...], values: Mapping[str, int], eigenvalue: int = 1) -> Eigenvector:
    """Certificate from label values; unlisted vertices carry 0."""
    unknown = set(values) - set(labels)
    if unknown:
        raise GraphError(f"certificate names unknown vertices {sorted(unknown)}")
    return Eigenvector(
        tuple(Fraction(values.get(lab, 0)) for lab in labels), Fraction(eigenvalue)
    )


def _recipe(
    labels: tuple[str, ...],
    squares: list[str] | None,
    size: int,
    name: str,
    residual: Graph,
    k: int,
    mode: str = "only",
) -> ResidualRecipe:
    fixed = tuple(labels.index(s) for s in squares) if squares is not None else None
    return ResidualRecipe(
        squares=fixed, size=size, residual_name=name, residual=residual, k=k, mode=mode
    )


def _claims_hold(g: Graph, claims: tuple[Claim, ...]) -> bool:
    for claim in claims:
        count = inertia(g, 1 if claim.kind is ClaimKind.EQUALS_ONE else claim.bound)
        if count.greater > claim.k - 1:
            return False
        if claim.kind is ClaimKind.EQUALS_ONE and count.greater + count.equal < claim.k:
            return False
    return True


def _derived_class(
    name: str,
    host: LabeledGraph,
    claims: tuple[Claim, ...],
    residual: tuple | None = None,
    note: str = "",
) -> CatalogEntry:
    """Entry whose marked set is the host colour class that satisfies the claims.

    The class containing ``v1`` is tried first; if neither class satisfies
    the claims the ``v1`` class is kept and verification will report it.
    ``residual`` is ``(squares, size, name, graph, k[, mode])`` with squares
    named in the ``v1`` class closure.
    """
    hg, hlabels = host.build()
    bip = bipartition(hg)
    if bip is None:
        raise GraphError(f"{name}: host is not bipartite")
    first = bip.a_side if hlabels.index("v1") in bip.a_side else bip.b_side
    second = bip.b_side if first is bip.a_side else bip.a_side
    options = []
    for cls in (first, second):
        marks = [hlabels[i] for i in cls]
        options.append(qc_closure(host, marks))
    chosen, derivation = options[0], "colour class of v1; neither class met the claims"
    for i, option in enumerate(options):
        if _claims_hold(option[0], claims):
            side = "of v1" if i == 0 else "opposite v1"
            chosen, derivation = option, f"colour class {side}, selected by the claims"
            break
    logger.debug("%s: %s", name, derivation)
    g, labels, marked = chosen
    recipe = None
    if residual:
        squares, *rest = residual
        recipe = _recipe(labels, squares, *rest)
    if note:
        derivation = f"{derivation}; {note}"
    return CatalogEntry(
        name, g, marked, claims, RECON, labels, residual=recipe, derivation=derivation
    )


def _closure_entry(
    name: str,
    host: LabeledGraph,
    marks: list[object],
    claims: tuple[Claim, ...],
    provenance: Provenance,
    overrides: Mapping[object, int] | None = None,
    certificate: Mapping[str, int] | None = None,
    residual: tuple | None = None,
    note: str = "",
) -> CatalogEntry:
    g, labels, marked = qc_closure(host, marks, overrides=overrides)
    cert = _vector(labels, certificate) if certificate else None
    recipe = None
    if residual:
        squares, *rest = residual
        recipe = _recipe(labels, squares, *rest)
    derivation = f"quoted; {note}" if note else "quoted"
    return CatalogEntry(
        name, g, marked, claims, provenance, labels, cert, recipe, derivation=derivation
    )


# ---------------------------------------------------------------------------
# Small entries fixed by their descriptions
# ---------------------------------------------------------------------------


def c4_plus() -> CatalogEntry:
    host = LabeledGraph().add_cycle("v1", "v2", "v3", "v4")
    cert = {"v1": 1, "v1'": 1, "v3": -1, "v3'": -1}
    return _closure_entry("c4_plus", host, ["v1", "v3"], (equals_one(2),), PINNED, certificate=cert)


def c6_plus() -> CatalogEntry:
    host = LabeledGraph().add_cycle("v1", "v2", "v3", "v4", "v5", "v6").add_edge("v1", "u")
    g, labels = host.build()
    marked = VertexSet.of(g.n, (labels.index(v) for v in ("v1", "v3", "v5")))
    cert = _vector(labels, {"v2": 1, "v3": 1, "v5": -1, "v6": -1})
    recipe = _recipe(labels, ["v1", "v4"], 2, "2K2", matching_graph(2), 3)
    return CatalogEntry("c6_plus", g, marked, (equals_one(3),), PINNED, labels, cert, recipe, "quoted")


def _cycle_plus(name: str, length: int, k: int) -> CatalogEntry:
    names = [f"v{i}" for i in range(1, length + 1)]
    host = LabeledGraph().add_cycle(*names)
    odd = names[0::2]
    cert = {}
    for i, v in enumerate(odd):
        sign = 1 if i % 2 == 0 else -1
        cert[v] = cert[f"{v}'"] = sign
    return _closure_entry(name, host, odd, (equals_one(k),), PINNED, certificate=cert)


def c8_plus() -> CatalogEntry:
    return _cycle_plus("c8_plus", 8, 4)


def c12_plus() -> CatalogEntry:
    return _cycle_plus("c12_plus", 12, 6)


def p7_minus() -> CatalogEntry:
    g, labels, marked = p7_minus_host()
    cert = _vector(
        labels,
        {"v2'1": 1, "v2'2": 1, "v2''1": 1, "v2''2": 1, "v2": 1, "v2'": 1, "v1": -1, "v1'": -1, "v": -2},
    )
    return CatalogEntry("p7_minus", g, marked, (equals_one(3),), PINNED, labels, cert, None, "quoted")


def b3() -> CatalogEntry:
    host = LabeledGraph()
    grandchildren = []
    for i in range(1, 4):
        host.add_edge("r", f"c{i}")
        for j in range(1, 3):
            host.add_edge(f"c{i}", f"g{i}{j}")
            grandchildren.append(f"g{i}{j}")
    g, labels, marked = qc_closure(host, ["r", *grandchildren])
    values = {lab: -1 for lab in labels}
    values["r"] = 3
    values.update({f"c{i}": 1 for i in range(1, 4)})
    return CatalogEntry(
        "b3", g, marked, (equals_one(7),), PINNED, labels, _vector(labels, values), None, "quoted"
    )


def h0_eq() -> CatalogEntry:
    return _closure_entry(
        "h0_eq",
        h0_host(),
        [1, 3, 5, 7],
        (equals_one(4),),
        PINNED,
        overrides={3: 2},
        residual=(["6", "8"], 2, "C6", cycle_graph(6), 4, "contains"),
    )


def p_hat(t: int) -> CatalogEntry:
    """Path v1..v_{2t+1} with a pendant at every odd position; marked = odd positions."""
    if t < 0:
        raise GraphError(f"p_hat needs t >= 0, got {t}")
    names = [f"v{i}" for i in range(1, 2 * t + 2)]
    host = LabeledGraph()
    host.vertex(names[0])
    host.add_path(*names)
    odd = names[0::2]
    overrides = {names[0]: 1} if t == 0 else {names[0]: 2, names[-1]: 2}
    return _closure_entry(
        f"p_hat_{t}",
        host,
        odd,
        (equals_one(t + 1),),
        PINNED,
        overrides=overrides,
        residual=(names[1::2], t, f"{t + 1}K2", matching_graph(t + 1), t + 1),
    )


# ---------------------------------------------------------------------------
# Entries rebuilt from the case analysis
# ---------------------------------------------------------------------------


def c6_hat() -> CatalogEntry:
    host = (
        LabeledGraph()
        .add_cycle("v", "v1", "v2", "v3", "v4", "v5")
        .add_path("v1", "u1", "u4", "v4")
        .add_path("v2", "u2", "u5", "v5")
        .add_path("u1", "w", "u5")
        .add_path("u2", "z", "u4")
    )
    return _closure_entry(
        "c6_hat",
        host,
        ["v", "v2", "v4", "u1", "u5", "z"],
        (less_than(6, "91/100"),),
        RECON,
        overrides={"v": 2},
        residual=(["u1", "u5", "u2", "u4"], 4, "C6", cycle_graph(6), 6, "contains"),
    )


def h2_circ() -> CatalogEntry:
    host = h2_host().add_edge(13, "x").add_cycle("x", "d1", "d2", "d3", "d4", "d5")
    return _closure_entry(
        "h2_circ",
        host,
        [3, 5, 11, 13, "d1", "d3", "d5"],
        (equals_one(7),),
        RECON,
        residual=(["2", "6", "x", "d2", "d4"], 5, "C6", cycle_graph(6), 7, "contains"),
        note=SPARE_EDGES,
    )


def h4_minus() -> CatalogEntry:
    host = h1_host().add_path(9, 16, 15, 10).add_path(12, 13, 14, 11)
    cert = {
        "3": -1, "5": 1, "7": -1, "11": 1, "13": -1, "15": 1,
        "6": 1, "8": -1, "10": -1, "16": 1, "13'": -1, "15'": 1,
    }
    return _closure_entry(
        "h4_minus",
        host,
        [3, 5, 7, 9, 11, 13, 15],
        (equals_one(7),),
        RECON,
        certificate=cert,
    )


def n0_hat() -> CatalogEntry:
    host = (
        h0_host()
        .add_path(3, 13, 14, 12)
        .add_edge(4, "a")
        .add_cycle("a", "b", "c", "d", "e", "g")
    )
    # 8 stays outside the closure, so 7 hangs off 6 alone
    cert = {
        "4": -2, "6": 1, "13": 1, "b": 1, "d": -1, "g": 1,
        "3": -1, "5": -1, "7": 1, "11": 1, "14": 1, "13'": 1, "b'": 1, "d'": -1, "g'": 1,
    }
    return _closure_entry(
        "n0_hat",
        host,
        [2, 4, 6, 12, 13, "b", "d", "g"],
        (equals_one(8),),
        RECON,
        certificate=cert,
        note="whole-graph eigenvector for 1 in place of the three-square reduction",
    )


def h5_hat() -> CatalogEntry:
    host = (
        h0_host()
        .add_path(3, "a", "b", "c", "d", 4)
        .add_edge(11, "c")
        .add_edge(12, "b")
        .add_path("a", "e", "f", "d")
    )
    return _closure_entry(
        "h5_hat",
        host,
        [2, 4, 6, 8, 12, "a", "c", "f"],
        (less_than(8, "92/100"),),
        RECON,
        note=UNRECORDED_SQUARES,
    )


def _h6_host() -> LabeledGraph:
    return h0_host().add_path(3, "a", "x1", "b", "y1", 4).add_path(7, "c", "x2", "d", "y2", 8)


H6_MARKED: list[object] = [2, 4, 6, 8, 12, "a", "b", "c", "d"]
H6_SQUARES = ["6", "12", "x2", "7", "3", "y1", "x1"]


def h6_0() -> CatalogEntry:
    return _closure_entry(
        "h6_0",
        _h6_host(),
        H6_MARKED,
        (equals_one(9),),
        RECON,
        residual=(["1", "5", "a", "c"], 4, "h6_0_residual", h6_0_residual(), 9, "contains"),
        note=SPARE_EDGES,
    )


def h6_1() -> CatalogEntry:
    return _closure_entry(
        "h6_1",
        _h6_host().add_edge(11, "d"),
        H6_MARKED,
        (equals_one(9),),
        RECON,
        residual=(H6_SQUARES, 7, "C6", cycle_graph(6), 9, "contains"),
        note=SPARE_EDGES,
    )


def h6_2() -> CatalogEntry:
    return _closure_entry(
        "h6_2",
        _h6_host().add_edge(11, "d").add_edge(12, "x1"),
        H6_MARKED,
        (equals_one(9), equals_one(8)),
        RECON,
        residual=(H6_SQUARES, 7, "C6", cycle_graph(6), 9, "contains"),
        note=SPARE_EDGES,
    )


def h6_star() -> CatalogEntry:
    # b and d share their pendant
    host = _h6_host().add_path("b", "w", "d")
    cert = {
        "2": 1, "6": -1, "a": -1, "b": 1, "c": 1, "d": -1,
        "1": 1, "5": -1, "y1": 1, "y2": -1, "a'": -1, "c'": 1,
    }
    return _closure_entry(
        "h6_star",
        host,
        H6_MARKED,
        (equals_one(9),),
        RECON,
        certificate=cert,
        note="whole-graph eigenvector for 1 in place of the five-square reduction",
    )


H7_SQUARES = ["2", "4", "12", "q", "r2", "13"]


def h7_hat() -> CatalogEntry:
    host = (
        h0_host()
        .add_path(3, 13, 14, 12)
        .add_path(4, "p", "q", 11)
        .add_path(7, "r1", "r2", "r3", "r4", 8)
    )
    return _closure_entry(
        "h7_hat",
        host,
        [1, 3, 5, 7, 11, 14, "p", "r2", "r4"],
        (equals_one(9),),
        RECON,
        residual=(H7_SQUARES, 6, "h7_residual", h7_residual(), 9, "contains"),
        note=SPARE_EDGES,
    )


def _hexagon_d() -> LabeledGraph:
    return LabeledGraph().add_cycle("v1", "v2", "v3", "v4", "v5", "v6")


def _hang_hexagon(host: LabeledGraph, at: int, tag: str) -> LabeledGraph:
    """Edge v_at - u_at and a hexagon u_at, tag1..tag5."""
    u = f"u{at}"
    host.add_edge(f"v{at}", u)
    return host.add_cycle(u, *(f"{tag}{i}" for i in range(1, 6)))


H12_SQUARES = ["u1", "v3", "b2", "b4", "a2", "a4"]


def h12() -> CatalogEntry:
    host = _hang_hexagon(_hang_hexagon(_hexagon_d(), 1, "a"), 2, "b")
    return _derived_class(
        "h12",
        host,
        (less_than(9, "95/100"),),
        (H12_SQUARES, 6, "p7_minus", p7_minus_graph(), 9, "contains"),
        SPARE_EDGES,
    )


def h12_prime() -> CatalogEntry:
    host = _hang_hexagon(_hang_hexagon(_hexagon_d(), 1, "a"), 2, "b").add_edge("a3", "b3")
    return _derived_class(
        "h12_prime",
        host,
        (equals_one(8), equals_one(9)),
        (H12_SQUARES, 6, "p7_minus", p7_minus_graph(), 9, "contains"),
        SPARE_EDGES,
    )


def h13() -> CatalogEntry:
    host = _hang_hexagon(_hang_hexagon(_hexagon_d(), 1, "a"), 3, "c")
    return _derived_class(
        "h13",
        host,
        (equals_one(9),),
        (["u1", "u3", "a2", "a4", "c2", "c4"], 6, "c6_plus", c6_plus_graph(), 9, "contains"),
        SPARE_EDGES,
    )


def h14() -> CatalogEntry:
    host = _hang_hexagon(_hang_hexagon(_hexagon_d(), 1, "a"), 4, "c")
    return _derived_class("h14", host, (less_than(9, "96/100"),), note=UNRECORDED_SQUARES)


def h123() -> CatalogEntry:
    host = _hexagon_d()
    for i, tag in ((1, "a"), (3, "b"), (5, "c")):
        host.add_path(f"v{i}", *(f"{tag}{j}" for j in range(1, 5)), f"v{i + 1}")
    marks = ["v1", "v3", "v5", "a2", "a4", "b2", "b4", "c2", "c4"]
    # one vector of the two-dimensional eigenspace
    cert = {
        "v1": 2, "v3": -1, "v5": -1, "a2": -1, "b4": 1, "c2": 1, "c4": -1,
        "v2": 1, "v4": -1, "a1": 1, "a3": -1, "b1": -1, "b3": 1,
        "a2'": -1, "b4'": 1, "c2'": 1, "c4'": -1,
    }
    return _closure_entry(
        "h123", host, marks, (equals_one(8), equals_one(9)), RECON, certificate=cert
    )


L33_SQUARES = ["w6", "v3", "v5", "f2", "g1", "s1", "s3"]


def l33_hat() -> CatalogEntry:
    host = (
        _hexagon_d()
        .add_path("v4", "w5", "w6", "v1")
        .add_path("v2", "u2", "f1", "f2", "u3", "v3")
        .add_path("v5", "u5", "g1", "g2", "u6", "v6")
        .add_path("w5", "s1", "s2", "s3", "s4", "w6")
    )
    marks = ["v1", "v3", "v5", "w5", "u2", "f2", "g1", "u6", "s2", "s4"]
    return _closure_entry(
        "l33_hat",
        host,
        marks,
        (less_than(10, "92/100"),),
        RECON,
        residual=(L33_SQUARES, 7, "p7_minus", p7_minus_graph(), 10, "contains"),
        note=SPARE_EDGES,
    )


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

P_HAT_RANGE = range(0, 9)

BUILDERS = {
    "c4_plus": c4_plus,
    "c6_plus": c6_plus,
    "c8_plus": c8_plus,
    "c12_plus": c12_plus,
    "p7_minus": p7_minus,
    "c6_hat": c6_hat,
    "b3": b3,
    "h2_circ": h2_circ,
    "h4_minus": h4_minus,
    "h0_eq": h0_eq,
    "n0_hat": n0_hat,
    "h12": h12,
    "h12_prime": h12_prime,
    "h13": h13,
    "h14": h14,
    "h123": h123,
    "h5_hat": h5_hat,
    "h7_hat": h7_hat,
    "l33_hat": l33_hat,
    "h6_star": h6_star,
    "h6_0": h6_0,
    "h6_1": h6_1,
    "h6_2": h6_2,
}


@functools.lru_cache(maxsize=1)
def catalog() -> tuple[CatalogEntry, ...]:
    entries = [build() for build in BUILDERS.values()]
    entries.extend(p_hat(t) for t in P_HAT_RANGE)
    return tuple(entries)


def entry_names() -> list[str]:
    return [*BUILDERS, *(f"p_hat_{t}" for t in P_HAT_RANGE)]


@functools.lru_cache(maxsize=None)
def get_entry(name: str) -> CatalogEntry:
    """Look up ``name``; ``p_hat_<t>`` and ``p_hat(<t>)`` build any t."""
    if name in BUILDERS:
        return BUILDERS[name]()
    for prefix, suffix in (("p_hat_", ""), ("p_hat(", ")")):
        if name.startswith(prefix) and name.endswith(suffix):
            body = name[len(prefix): len(name) - len(suffix)]
            if body.isdigit():
                return p_hat(int(body))
    raise GraphError(f"unknown catalog entry {name!r}")
