"""Exact eigenvalue counting over the rationals.

Two engines give the same answers:

* ``elimination`` - symmetric Gaussian elimination of ``A - tI`` over
  :class:`fractions.Fraction`. Inertia is preserved under congruence, so the
  signs of the pivots are the eigenvalue counts. A zero diagonal is handled
  with a 2x2 pivot ``[[0, b], [b, 0]]`` (one positive, one negative).
* ``sturm`` - sign variations of a Sturm sequence of each square-free factor
  of the characteristic polynomial, with sympy doing the polynomial work.

Elimination is the default; it works on any size and stays sparse on
subcubic graphs. Sturm is bounded by ``char_poly_max_n``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

import sympy

from hlindex.core.graph import Graph
from hlindex.errors import SpectrumError
from hlindex.models import CharPoly, InertiaCount

CHAR_POLY_MAX_N = 64

Rational = Fraction | int | str


def as_fraction(t: Rational) -> Fraction:
    try:
        return Fraction(t)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpectrumError(f"not a rational threshold: {t!r}") from exc


# ---------------------------------------------------------------------------
# Elimination engine
# ---------------------------------------------------------------------------


def symmetric_inertia(rows: dict[int, dict[int, Fraction]], n: int) -> tuple[int, int, int]:
    """(positive, zero, negative) counts of a sparse symmetric matrix.

    ``rows`` maps each index to its nonzero entries, diagonal included; it is
    consumed.
    """
    positive = negative = 0
    active = set(range(n))
    for i in active:
        rows.setdefault(i, {})
    while active:
        pivots = [i for i in active if rows[i].get(i)]
        if pivots:
            i = min(pivots, key=lambda v: (len(rows[v]), v))
            d = rows[i][i]
            if d > 0:
                positive += 1
            else:
                negative += 1
            _eliminate_one(rows, i, d)
            active.discard(i)
            continue
        live = [i for i in active if rows[i]]
        if not live:
            break
        i = min(live, key=lambda v: (len(rows[v]), v))
        j = min(rows[i])
        _eliminate_two(rows, i, j)
        active.discard(i)
        active.discard(j)
        positive += 1
        negative += 1
    return positive, n - positive - negative, negative


def _eliminate_one(rows: dict[int, dict[int, Fraction]], i: int, d: Fraction) -> None:
    row = rows.pop(i)
    others = [j for j in row if j != i]
    for j in others:
        rows[j].pop(i, None)
    for j in others:
        scale = row[j] / d
        target = rows[j]
        for k in others:
            value = target.get(k, 0) - scale * row[k]
            if value:
                target[k] = value
            else:
                target.pop(k, None)


def _eliminate_two(rows: dict[int, dict[int, Fraction]], i: int, j: int) -> None:
    # Schur complement against [[0, b], [b, 0]]; its inverse swaps and divides by b.
    b = rows[i][j]
    row_i = rows.pop(i)
    row_j = rows.pop(j)
    others = (set(row_i) | set(row_j)) - {i, j}
    for k in others:
        rows[k].pop(i, None)
        rows[k].pop(j, None)
    for k in others:
        ki, kj = row_i.get(k, 0), row_j.get(k, 0)
        target = rows[k]
        for m in others:
            value = target.get(m, 0) - (ki * row_j.get(m, 0) + kj * row_i.get(m, 0)) / b
            if value:
                target[m] = value
            else:
                target.pop(m, None)


def shifted_adjacency(g: Graph, t: Fraction) -> dict[int, dict[int, Fraction]]:
    """Sparse rows of ``A - tI``."""
    rows: dict[int, dict[int, Fraction]] = {}
    for v in range(g.n):
        row = {w: Fraction(1) for w in g.adjacency[v]}
        if t:
            row[v] = -t
        rows[v] = row
    return rows


def matrix_inertia(matrix: Sequence[Sequence[Rational]], t: Rational = 0) -> InertiaCount:
    """Inertia of a dense symmetric rational matrix shifted by ``-tI``."""
    t = as_fraction(t)
    n = len(matrix)
    rows: dict[int, dict[int, Fraction]] = {}
    for i in range(n):
        if len(matrix[i]) != n:
            raise SpectrumError("matrix is not square")
        row = {}
        for j in range(n):
            value = Fraction(matrix[i][j]) - (t if i == j else 0)
            if value != Fraction(matrix[j][i]) - (t if i == j else 0):
                raise SpectrumError("matrix is not symmetric")
            if value:
                row[j] = value
        rows[i] = row
    greater, equal, less = symmetric_inertia(rows, n)
    return InertiaCount(t, greater, equal, less)


# ---------------------------------------------------------------------------
# Characteristic polynomial and the Sturm engine
# ---------------------------------------------------------------------------

_X = sympy.Symbol("x")


def char_poly(g: Graph, max_n: int = CHAR_POLY_MAX_N) -> CharPoly:
    if g.n > max_n:
        raise SpectrumError(
            f"characteristic polynomial limited to n <= {max_n} (got n={g.n}); "
            "use inertia for exact eigenvalue counts instead"
        )
    if g.n == 0:
        return CharPoly((1,))
    m = sympy.zeros(g.n, g.n)
    for u, v in g.edges():
        m[u, v] = m[v, u] = 1
    coeffs = m.charpoly(_X).all_coeffs()
    return CharPoly(tuple(int(c) for c in coeffs))


def _variations(values: Iterable[sympy.Expr]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:], strict=False) if a != b)


def sturm_inertia(poly: CharPoly, t: Rational) -> InertiaCount:
    """Inertia from the characteristic polynomial alone."""
    t = as_fraction(t)
    if poly.degree == 0:
        return InertiaCount(t, 0, 0, 0)
    at = sympy.Rational(t.numerator, t.denominator)
    p = sympy.Poly(list(poly.coefficients), _X)
    greater = equal = less = 0
    _, factors = p.sqf_list()
    for factor, mult in factors:
        if factor.degree() < 1:
            continue
        seq = factor.sturm()
        v_t = _variations(s.eval(at) for s in seq)
        v_plus = _variations(s.LC() for s in seq)
        v_minus = _variations(s.LC() * (-1) ** s.degree() for s in seq)
        root = factor.eval(at) == 0
        greater += mult * (v_t - v_plus)
        less += mult * (v_minus - v_t - (1 if root else 0))
        equal += mult if root else 0
    return InertiaCount(t, greater, equal, less)


# ---------------------------------------------------------------------------
# Public queries
# ---------------------------------------------------------------------------


def inertia(
    g: Graph, t: Rational, method: str = "elimination", max_n: int = CHAR_POLY_MAX_N
) -> InertiaCount:
    t = as_fraction(t)
    if method == "sturm":
        return sturm_inertia(char_poly(g, max_n), t)
    if method != "elimination":
        raise SpectrumError(f"unknown inertia method {method!r}")
    greater, equal, less = symmetric_inertia(shifted_adjacency(g, t), g.n)
    return InertiaCount(t, greater, equal, less)


def count_in_interval(g: Graph, lo: Rational, hi: Rational) -> int:
    """Exact number of eigenvalues in the closed interval ``[lo, hi]``."""
    lo, hi = as_fraction(lo), as_fraction(hi)
    if lo > hi:
        raise SpectrumError(f"empty interval [{lo}, {hi}]")
    return g.n - inertia(g, hi).greater - inertia(g, lo).less


def lambda_k_at_most(g: Graph, k: int, t: Rational) -> bool:
    """Exact test of ``lambda_k(G) <= t`` (1-based, descending order)."""
    if not 1 <= k <= g.n:
        raise SpectrumError(f"eigenvalue index {k} outside 1..{g.n}")
    return inertia(g, t).greater <= k - 1


def lambda_k_equals(g: Graph, k: int, t: Rational) -> bool:
    """Exact test of ``lambda_k(G) == t``."""
    if not 1 <= k <= g.n:
        raise SpectrumError(f"eigenvalue index {k} outside 1..{g.n}")
    count = inertia(g, t)
    return count.greater <= k - 1 < count.greater + count.equal


def check_eigenvector(g: Graph, x: Sequence[Rational], lam: Rational) -> bool:
    if len(x) != g.n:
        raise SpectrumError(f"vector has length {len(x)}, graph has {g.n} vertices")
    vec = [Fraction(v) for v in x]
    if not any(vec):
        raise SpectrumError("zero vector is not an eigenvector")
    lam = as_fraction(lam)
    return all(sum(vec[w] for w in g.adjacency[v]) == lam * vec[v] for v in range(g.n))


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def characteristic_value(g: Graph, t: int) -> int:
    """det(tI - A) by fraction-free elimination, independent of sympy."""
    rows = [[0] * g.n for _ in range(g.n)]
    for v in range(g.n):
        rows[v][v] = t
        for w in g.adjacency[v]:
            rows[v][w] = -1
    return bareiss_determinant(rows)
