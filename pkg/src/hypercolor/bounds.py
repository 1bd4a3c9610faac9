"""Closed-form edge counts and color bounds for embeddable hypergraphs.

Polynomial bounds are exact ``Fraction`` values. Bounds with irrational
exponents are returned as :class:`PowerBound`, which compares exactly
against rationals. The local-lemma color counts involve Euler's number and
are evaluated with outward-rounded interval arithmetic, so the returned
ceiling is certified.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

import mpmath
from mpmath import iv

from .constructions import hd_vertex_count


class BoundError(ValueError):
    pass


@total_ordering
@dataclass(frozen=True)
class PowerBound:
    """The number ``coefficient * base ** exponent + offset``."""

    base: int
    exponent: Fraction
    coefficient: Fraction = Fraction(1)
    offset: Fraction = Fraction(0)

    def _cmp(self, x) -> int:
        y = Fraction(x) - self.offset
        c = self.coefficient
        if c == 0 or self.base == 0:
            lhs_zero = c == 0 or self.exponent > 0
            if lhs_zero:
                return (0 > y) - (0 < y)
            raise BoundError("0 raised to a non-positive exponent")
        if c < 0:
            raise BoundError("negative coefficients are not supported")
        if y <= 0:
            return 1
        p, q = self.exponent.numerator, self.exponent.denominator
        # c * base^(p/q) vs y  <=>  c^q * base^p vs y^q
        lhs = c**q * Fraction(self.base) ** p
        rhs = y**q
        return (lhs > rhs) - (lhs < rhs)

    def __eq__(self, other):
        if isinstance(other, PowerBound):
            return (self.base, self.exponent, self.coefficient, self.offset) == (
                other.base, other.exponent, other.coefficient, other.offset)
        if isinstance(other, (int, Fraction)):
            return self._cmp(other) == 0
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._cmp(other) < 0
        return NotImplemented

    def __hash__(self):
        return hash((self.base, self.exponent, self.coefficient, self.offset))

    def __float__(self):
        return float(self.coefficient) * self.base ** float(self.exponent) + float(self.offset)

    def __str__(self):
        s = f"{self.base}^({self.exponent})"
        if self.coefficient != 1:
            s = f"{self.coefficient}*{s}"
        if self.offset:
            s += f" - {-self.offset}" if self.offset < 0 else f" + {self.offset}"
        return s


def edge_bound(k: int, n: int) -> Fraction:
    """Max edges of a k-uniform hypergraph embeddable in R^k: (6n^(k-1) - 12n^(k-2))/k!."""
    if k < 2 or n < 0:
        raise BoundError(f"edge_bound needs k >= 2 and n >= 0, got k={k}, n={n}")
    return Fraction(6 * n ** (k - 1) - 12 * n ** (k - 2), math.factorial(k))


def adjacency_bound(k: int, n: int) -> Fraction:
    """Max number of other edges meeting a given edge, k-uniform in R^k."""
    if k < 3 or n < 0:
        raise BoundError(f"adjacency_bound needs k >= 3 and n >= 0, got k={k}, n={n}")
    return k * Fraction(6 * n ** (k - 2) - 12 * n ** (k - 3), math.factorial(k - 1)) - 1


def gundert_bound(k: int, n: int) -> PowerBound:
    """Strict edge bound n^(k - 3^(1-k)) for k-uniform in R^(2k-2)."""
    if k < 2 or n < 0:
        raise BoundError(f"gundert_bound needs k >= 2 and n >= 0, got k={k}, n={n}")
    return PowerBound(n, k - Fraction(1, 3 ** (k - 1)))


def gundert_iterated_bound(k: int, l: int, n: int) -> PowerBound:
    """Strict edge bound n^(k - 3^(l-1-k)) for k-uniform in R^(2k-l)."""
    if not k >= l >= 2 or n < 0:
        raise BoundError(f"need k >= l >= 2 and n >= 0, got k={k}, l={l}, n={n}")
    return PowerBound(n, k - Fraction(1, 3 ** (k + 1 - l)))


def gundert_adjacency_bound(k: int, l: int, n: int) -> PowerBound:
    """Max other edges meeting a given edge: k n^(k-1-3^(l-1-k)) - 1."""
    if not k >= l >= 3 or n < 0:
        raise BoundError(f"need k >= l >= 3 and n >= 0, got k={k}, l={l}, n={n}")
    return PowerBound(n, k - 1 - Fraction(1, 3 ** (k + 1 - l)), Fraction(k), Fraction(-1))


def _certified_ceiling(expr, max_prec: int = 1 << 14) -> int:
    prec, saved = 64, iv.prec
    try:
        while prec <= max_prec:
            iv.prec = prec
            x = expr()
            lo, hi = int(mpmath.floor(x.a)), int(mpmath.floor(x.b))
            if lo == hi and x.a > lo:
                return lo + 1
            prec *= 2
    finally:
        iv.prec = saved
    raise BoundError("could not certify the ceiling; value too close to an integer")


def lll_color_count(d: int, n: int, l: int | None = None) -> int:
    """Local-lemma weak color count for d-uniform hypergraphs on n vertices.

    With ``l=None`` the embedding space is R^d; otherwise R^(2d-l), d >= l >= 3.
    """
    if n < 1:
        raise BoundError(f"n must be >= 1, got {n}")
    if l is None:
        if d < 3:
            raise BoundError(f"need d >= 3, got {d}")

        def expr():
            base = iv.mpf(6) * iv.e * d / math.factorial(d - 1)
            return base ** (iv.mpf(1) / (d - 1)) * iv.mpf(n) ** (iv.mpf(d - 2) / (d - 1))
    else:
        if not d >= l >= 3:
            raise BoundError(f"need d >= l >= 3, got d={d}, l={l}")

        def expr():
            expo = 1 - iv.mpf(1) / (3 ** (d + 1 - l)) / (d - 1)
            return (iv.e * d) ** (iv.mpf(1) / (d - 1)) * iv.mpf(n) ** expo
    return _certified_ceiling(expr)


def lll_exponent(d: int, l: int | None = None) -> Fraction:
    if l is None:
        return Fraction(d - 2, d - 1)
    return 1 - Fraction(1, 3 ** (d + 1 - l) * (d - 1))


@dataclass(frozen=True)
class BoundReport:
    d: int
    k: int
    n: int
    regime: str
    edge_bound: Fraction | PowerBound | None = None
    adjacency_bound: Fraction | PowerBound | None = None
    lll_colors: int | None = None

    def to_document(self) -> dict:
        def fmt(x):
            return None if x is None else str(x)

        return {
            "d": self.d, "k": self.k, "n": self.n, "regime": self.regime,
            "edge_bound": fmt(self.edge_bound), "adjacency_bound": fmt(self.adjacency_bound),
            "lll_colors": self.lll_colors,
        }


def bound_report(d: int, k: int, n: int) -> BoundReport:
    """Evaluate whichever edge and color bounds apply in dimension d, uniformity k."""
    if k == d and k >= 2:
        eb = max(edge_bound(k, n), Fraction(0))
        ab = max(adjacency_bound(k, n), Fraction(0)) if k >= 3 else None
        lll = lll_color_count(k, n) if k >= 3 and n >= 1 else None
        return BoundReport(d, k, n, "k=d", eb, ab, lll)
    l = 2 * k - d
    if k >= l >= 2 and k >= 2:
        eb = gundert_iterated_bound(k, l, n)
        ab = gundert_adjacency_bound(k, l, n) if l >= 3 else None
        lll = lll_color_count(k, n, l) if l >= 3 and n >= 1 else None
        return BoundReport(d, k, n, f"2k-l (l={l})", eb, ab, lll)
    return BoundReport(d, k, n, "n/a")


@dataclass(frozen=True)
class Cell:
    value: int | None
    asymptotic: str
    provenance: str


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def recursive_family_order(k: int, n: int) -> int:
    """Largest m whose recursive k-uniform family fits in n vertices (1 if none)."""
    best, m = 1, 2
    while hd_vertex_count(m, k) <= n:
        best, m = m, m + 1
    return best


def strong_cell(d: int, k: int, n: int) -> Cell:
    if k == 1 or d <= k - 2:
        return Cell(1, "1", "trivial")
    if k == 2:
        if d == 1:
            return Cell(2, "2", "stated-in-table")
        if d == 2:
            return Cell(4, "4", "four-color")
        return Cell(n, "n", "complete-hypergraph")
    if d >= 2 * k - 1:
        return Cell(n, "n", "complete-hypergraph")
    if d == 2 and k == 3:
        return Cell(4, "4", "four-color")
    if d >= 3 and k <= d:
        return Cell(n, "n", "shadow-construction")
    # k = d + 1, d >= 3: quadratic construction lifted by cones
    m2 = n - d + 3
    value = math.isqrt(m2) + d - 3 if m2 >= 16 else None
    return Cell(value, "Omega(sqrt n)", "sqrt-construction")


def weak_lower_cell(d: int, k: int, n: int) -> Cell:
    if k == 1 or d <= k - 2:
        return Cell(1, "1", "trivial")
    if k == 2:
        return strong_cell(d, k, n)
    if d >= 2 * k - 1:
        return Cell(_ceil_div(n, k - 1), f"ceil(n/{k - 1})", "complete-hypergraph")
    if d == 2 and k == 3:
        return Cell(2, "2", "planar-parity")
    if d in (2 * k - 3, 2 * k - 2):
        return Cell(recursive_family_order(k, n), "Omega(log n/log log n)", "recursive-construction")
    return Cell(1, "1", "trivial-lower")


def weak_upper_cell(d: int, k: int, n: int) -> Cell:
    if k == 1 or d <= k - 2:
        return Cell(1, "1", "trivial")
    if k == 2:
        return strong_cell(d, k, n)
    if d >= 2 * k - 1:
        return Cell(_ceil_div(n, k - 1), f"ceil(n/{k - 1})", "complete-hypergraph")
    if d == 2 and k == 3:
        return Cell(2, "2", "planar-parity")
    if d >= 3 and k in (d, d + 1):
        e = lll_exponent(d)
        return Cell(lll_color_count(d, n), f"O(n^({e}))", "lll")
    if k < d <= 2 * k - 3:
        l = 2 * k - d
        e = lll_exponent(k, l)
        return Cell(lll_color_count(k, n, l), f"O(n^({e}))", "lll-gundert")
    # d = 2k - 2
    return Cell(_ceil_div(n, k - 1), f"ceil(n/{k - 1})", "stated-in-table")


QUANTITIES = {"strong": strong_cell, "weak_lower": weak_lower_cell, "weak_upper": weak_upper_cell}


def bounds_table(d_max: int, k_max: int, n: int) -> list[dict]:
    """One row per (d, k, quantity) for 1 <= d <= d_max, 2 <= k <= k_max."""
    rows = []
    for d in range(1, d_max + 1):
        for k in range(2, k_max + 1):
            for name, fn in QUANTITIES.items():
                cell = fn(d, k, n)
                rows.append({"d": d, "k": k, "n": n, "quantity": name, "value": cell.value,
                             "asymptotic": cell.asymptotic, "provenance": cell.provenance})
    return rows


def table_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=["d", "k", "n", "quantity", "value", "asymptotic", "provenance"],
                       lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({**r, "value": "n/a" if r["value"] is None else r["value"]})
    return buf.getvalue()
