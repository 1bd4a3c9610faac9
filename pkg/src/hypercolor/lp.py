"""Exact linear programming over the rationals.

Solves ``maximize c.x  s.t.  A x = b, x >= 0`` with a two-phase simplex
method using Bland's rule. The tableau is kept fraction-free (integer
pivoting): every entry is an integer and the true tableau is the stored one
divided by the last pivot element, so no gcd work is done per operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

Number = int | Fraction


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None
    pivots: int = 0


def _integer_row(row: Sequence[Number]) -> list[int]:
    if all(type(v) is int for v in row):
        return list(row)
    row = [Fraction(v) for v in row]
    scale = lcm(*(v.denominator for v in row)) if row else 1
    return [int(v * scale) for v in row]


class _Tableau:
    """Integer tableau; the true entries are ``T[i][j] / det``."""

    def __init__(self, rows: list[list[int]], basis: list[int]):
        self.T = rows
        self.basis = basis
        self.det = 1
        self.pivots = 0

    def pivot(self, r: int, s: int, obj: list[int]) -> list[int]:
        T, det = self.T, self.det
        if T[r][s] < 0:
            T[r] = [-v for v in T[r]]
        row_r = T[r]
        p = row_r[s]
        for i, row in enumerate(T):
            if i == r:
                continue
            f = row[s]
            if f == 0:
                T[i] = [(v * p) // det for v in row]
            else:
                T[i] = [(v * p - f * w) // det for v, w in zip(row, row_r)]
        f = obj[s]
        obj = [(v * p - f * w) // det for v, w in zip(obj, row_r)]
        self.basis[r] = s
        self.det = p
        self.pivots += 1
        return obj

    def run(self, obj: list[int], allowed: int) -> tuple[str, list[int]]:
        """Bland's rule on columns < ``allowed`` until optimal or unbounded."""
        while True:
            s = next((j for j in range(allowed) if obj[j] < 0), None)
            if s is None:
                return OPTIMAL, obj
            best = None
            for i, row in enumerate(self.T):
                a = row[s]
                if a <= 0:
                    continue
                if best is None:
                    best = i
                    continue
                rb = self.T[best]
                lhs, rhs = row[-1] * rb[s], rb[-1] * a
                if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                    best = i
            if best is None:
                return UNBOUNDED, obj
            obj = self.pivot(best, s, obj)

    def reduced_costs(self, c: Sequence[int], width: int) -> list[int]:
        """det-scaled reduced cost row for objective ``c`` in the current basis."""
        obj = [-cj * self.det for cj in c] + [0] * (width - len(c))
        for i, b in enumerate(self.basis):
            cb = c[b] if b < len(c) else 0
            if cb:
                row = self.T[i]
                obj = [o + cb * v for o, v in zip(obj, row)]
        return obj


def maximize(c: Sequence[Number], A: Sequence[Sequence[Number]], b: Sequence[Number]) -> LPResult:
    """Maximize ``c.x`` subject to ``A x = b``, ``x >= 0``, exactly."""
    m, n = len(A), len(c)
    if len(b) != m or any(len(row) != n for row in A):
        raise ValueError("inconsistent LP dimensions")
    rows = []
    for row, bi in zip(A, b):
        r = _integer_row(list(row) + [bi])
        if r[-1] < 0:
            r = [-v for v in r]
        rows.append(r)
    cscale = lcm(*(Fraction(v).denominator for v in c)) if n else 1
    cint = [int(Fraction(v) * cscale) for v in c]

    # phase 1: artificial columns n..n+m-1, RHS last
    width = n + m + 1
    T = []
    for i, r in enumerate(rows):
        art = [0] * m
        art[i] = 1
        T.append(r[:-1] + art + [r[-1]])
    tab = _Tableau(T, list(range(n, n + m)))
    obj = [0] * width
    for r in T:
        obj = [o - v for o, v in zip(obj, r)]
    for j in range(n, n + m):
        obj[j] = 0
    _, obj = tab.run(obj, n)
    if any(b >= n and tab.T[i][-1] != 0 for i, b in enumerate(tab.basis)):
        return LPResult(INFEASIBLE, pivots=tab.pivots)

    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(tab.T):
        if tab.basis[i] < n:
            i += 1
            continue
        s = next((j for j in range(n) if tab.T[i][j] != 0), None)
        if s is None:
            del tab.T[i]
            del tab.basis[i]
            continue
        obj = tab.pivot(i, s, obj)
        i += 1

    status, obj = tab.run(tab.reduced_costs(cint, width), n)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=tab.pivots)
    x = [Fraction(0)] * n
    for i, bvar in enumerate(tab.basis):
        x[bvar] = Fraction(tab.T[i][-1], tab.det)
    value = Fraction(obj[-1], tab.det * cscale)
    return LPResult(OPTIMAL, value, tuple(x), tab.pivots)
