"""Report and certificate records shared across hlindex.

Each record is a frozen dataclass with a ``to_dict`` that produces the JSON
shape printed by the CLI and consumed by ``hlindex replay``. Rationals are
serialized as strings (``"1"``, ``"91/100"``) so nothing is rounded.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from hlindex.core.graph import Graph, SubgraphHandle, VertexSet


def fraction_text(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class Spectrum:
    """Float eigenvalues, descending."""

    values: tuple[float, ...]
    residual_bound: float  # max_i ||A x_i - lambda_i x_i||_inf

    def to_dict(self) -> dict:
        return {"values": list(self.values), "residual_bound": self.residual_bound}


@dataclass(frozen=True)
class InertiaCount:
    """Exact eigenvalue counts relative to a rational threshold."""

    threshold: Fraction
    greater: int
    equal: int
    less: int

    @property
    def n(self) -> int:
        return self.greater + self.equal + self.less

    def to_dict(self) -> dict:
        return {
            "threshold": fraction_text(self.threshold),
            "greater": self.greater,
            "equal": self.equal,
            "less": self.less,
        }

    @classmethod
    def from_dict(cls, data: dict) -> InertiaCount:
        return cls(Fraction(data["threshold"]), data["greater"], data["equal"], data["less"])


@dataclass(frozen=True)
class CharPoly:
    """Integer coefficients of det(xI - A), leading coefficient first."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, x: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def derivative(self) -> CharPoly:
        d = self.degree
        return CharPoly(tuple(c * (d - i) for i, c in enumerate(self.coefficients[:-1])) or (0,))

    def to_text(self, var: str = "x") -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            power = self.degree - i
            mag = abs(c)
            mono = "" if power == 0 else (var if power == 1 else f"{var}^{power}")
            body = str(mag) if power == 0 or mag != 1 else ""
            body = f"{body}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_dict(self) -> dict:
        return {"degree": self.degree, "coefficients": list(self.coefficients), "text": self.to_text()}


@dataclass(frozen=True)
class MedianReport:
    n: int
    h: int
    ell: int
    lambda_h: float
    lambda_ell: float
    hl_index: float
    exact_at_most_one: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "h": self.h,
            "ell": self.ell,
            "lambda_h": self.lambda_h,
            "lambda_ell": self.lambda_ell,
            "hl_index": self.hl_index,
            "exact_at_most_one": self.exact_at_most_one,
        }


@dataclass(frozen=True)
class InterlacingViolation:
    index: int  # i, 1-based
    chain: str  # "upper" for lambda_i(G) >= lambda_i(K), "lower" for lambda_i(K) >= lambda_{i+k}(G)
    margin: float


@dataclass(frozen=True)
class InterlacingReport:
    k: int
    pairs_checked: int
    violations: tuple[InterlacingViolation, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class ImbalanceReport:
    s: int  # smallest index with lambda_s(G(B)) <= 1
    t: int  # floor((|B| - |A| + 1) / 2)
    imb: int

    def to_dict(self) -> dict:
        return {"s": self.s, "t": self.t, "imb": self.imb}


@dataclass(frozen=True)
class MedianBound:
    r: int
    index: int  # h - r, equal to |A| + s
    certified: bool

    def to_dict(self) -> dict:
        return {"r": self.r, "index": self.index, "certified": self.certified}


class Side(enum.Enum):
    """Which ordered partition a moved set increases."""

    AB = "(A,B)"
    BA = "(B,A)"


@dataclass(frozen=True)
class IncreaseCertificate:
    side: Side
    c_set: VertexSet
    q_subgraph: SubgraphHandle
    q_inertia: InertiaCount
    imb_before: int
    imb_after: int
    strategy: str = ""  # search rung that produced it, empty for direct calls

    def to_dict(self) -> dict:
        return {
            "side": self.side.value,
            "c_set": self.c_set.to_list(),
            "q_vertices": self.q_subgraph.vertices.to_list(),
            "q_inertia": self.q_inertia.to_dict(),
            "imb_before": self.imb_before,
            "imb_after": self.imb_after,
        }


@dataclass(frozen=True)
class SearchExhausted:
    """Frontier reached by a search that produced no certificate."""

    v0: int
    radius_reached: int
    size_reached: int
    candidates_tried: dict[str, int]
    strategies: tuple[str, ...]
    budget_hit: bool = False

    def to_dict(self) -> dict:
        return {
            "v0": self.v0,
            "radius_reached": self.radius_reached,
            "size_reached": self.size_reached,
            "candidates_tried": dict(self.candidates_tried),
            "strategies": list(self.strategies),
            "budget_hit": self.budget_hit,
        }


@dataclass(frozen=True)
class SearchRefusal:
    v0: int
    reason: str

    def to_dict(self) -> dict:
        return {"v0": self.v0, "refused": self.reason}


SearchOutcome = IncreaseCertificate | SearchExhausted | SearchRefusal


@dataclass(frozen=True)
class PipelineReport:
    v0_set: VertexSet
    outcomes: dict[int, SearchOutcome]
    a: int  # successes moving A-side sets
    b: int  # successes moving B-side sets
    imb_ab: int
    imb_ba: int
    imb_moved_ab: int  # imb(A', B')
    imb_moved_ba: int  # imb(B'', A'')
    final_imb: int
    implied_bound: int  # eigenvalues forced into [-1, 1]
    median_bound: MedianBound
    eigen_interval_count: int
    inequalities: dict[str, bool]
    separation: int
    radius: int
    conforming: bool
    dropped: tuple[int, ...] = ()  # certificates discarded for overlapping moved sets
    epsilon: Fraction = Fraction(1, 2**40)
    delta: Fraction = Fraction(1, 2**41)

    @property
    def consistent(self) -> bool:
        return self.eigen_interval_count >= self.implied_bound

    def to_dict(self) -> dict:
        return {
            "v0_set": self.v0_set.to_list(),
            "outcomes": {str(v): o.to_dict() for v, o in self.outcomes.items()},
            "a": self.a,
            "b": self.b,
            "imb_ab": self.imb_ab,
            "imb_ba": self.imb_ba,
            "imb_moved_ab": self.imb_moved_ab,
            "imb_moved_ba": self.imb_moved_ba,
            "final_imb": self.final_imb,
            "implied_bound": self.implied_bound,
            "median_bound": self.median_bound.to_dict(),
            "eigen_interval_count": self.eigen_interval_count,
            "consistent": self.consistent,
            "inequalities": dict(self.inequalities),
            "separation": self.separation,
            "radius": self.radius,
            "conforming": self.conforming,
            "dropped": list(self.dropped),
            "epsilon": fraction_text(self.epsilon),
            "delta": fraction_text(self.delta),
        }


# ---------------------------------------------------------------------------
# Catalog records
# ---------------------------------------------------------------------------


class ClaimKind(enum.Enum):
    EQUALS_ONE = "equals_one"
    LESS_THAN = "less_than"


class Provenance(enum.Enum):
    TEXT_PINNED = "text_pinned"
    RECONSTRUCTED = "reconstructed"


@dataclass(frozen=True)
class Claim:
    k: int
    kind: ClaimKind
    bound: Fraction | None = None  # only for LESS_THAN

    def label(self) -> str:
        if self.kind is ClaimKind.EQUALS_ONE:
            return f"lambda_{self.k} = 1"
        return f"lambda_{self.k} < {self.bound}"

    def to_dict(self) -> dict:
        out: dict = {"k": self.k, "kind": self.kind.value}
        if self.bound is not None:
            out["bound"] = fraction_text(self.bound)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> Claim:
        bound = data.get("bound")
        return cls(data["k"], ClaimKind(data["kind"]), Fraction(bound) if bound else None)


@dataclass(frozen=True)
class Eigenvector:
    values: tuple[Fraction, ...]
    eigenvalue: Fraction

    def to_dict(self) -> dict:
        return {
            "values": [fraction_text(v) for v in self.values],
            "eigenvalue": fraction_text(self.eigenvalue),
        }

    @classmethod
    def from_dict(cls, data: dict) -> Eigenvector:
        return cls(tuple(Fraction(v) for v in data["values"]), Fraction(data["eigenvalue"]))


@dataclass(frozen=True)
class ResidualRecipe:
    """Delete square vertices; what remains contains ``residual``.

    Interlacing then bounds lambda_k(graph) by lambda_{k - |squares|} of the
    remainder, which the verifier checks exactly at 1. When ``squares`` is
    None the verifier searches for a deletion set of at most ``size``
    vertices, preferring exactly ``size``. In ``only`` mode ``residual``
    must be the whole nontrivial part of the remainder; in ``contains`` mode
    one of its components.
    """

    squares: tuple[int, ...] | None
    size: int
    residual_name: str
    residual: Graph
    k: int
    mode: str = "only"

    def to_dict(self) -> dict:
        return {
            "squares": None if self.squares is None else list(self.squares),
            "size": self.size,
            "residual": self.residual_name,
            "k": self.k,
            "mode": self.mode,
        }


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    marked: VertexSet
    claims: tuple[Claim, ...]
    provenance: Provenance
    labels: tuple[str, ...] = ()  # display label of each vertex index
    certificate: Eigenvector | None = None
    residual: ResidualRecipe | None = None
    derivation: str = ""  # how the marked class was fixed

    @property
    def claim(self) -> Claim:
        return self.claims[0]

    def vertex(self, label: str) -> int:
        return self.labels.index(label)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class EntryReport:
    name: str
    provenance: Provenance
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "provenance": self.provenance.value,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    seed: int = 0
    connected: bool = True
    girth: int | None = None  # minimum girth, None for no floor
    max_tries: int = 1000


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking one graph against the HL-index bound."""

    graph6: str
    n: int
    hl_index: float
    exact_at_most_one: bool
    is_heawood: bool
    witness: dict = field(default_factory=dict)

    @property
    def violates(self) -> bool:
        if self.witness.get("at_most_sqrt2") is False:
            return True
        return not self.exact_at_most_one and not self.is_heawood

    def to_dict(self) -> dict:
        out = {
            "graph6": self.graph6,
            "n": self.n,
            "hl_index": self.hl_index,
            "exact_at_most_one": self.exact_at_most_one,
            "is_heawood": self.is_heawood,
        }
        if self.witness:
            out["witness"] = self.witness
        return out
