"""Exact rational geometry: affine rank, simplex intersection, embedding check.

Nothing here touches floating point. A point is a tuple of ``Fraction``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import lp
from .hypercore import Edge, Hypergraph, HypergraphError

Point = tuple[Fraction, ...]


class GeometryError(ValueError):
    pass


def point(coords: Iterable) -> Point:
    p = tuple(Fraction(c) for c in coords)
    if not p:
        raise GeometryError("points need dimension >= 1")
    return p


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a rational matrix by Gaussian elimination."""
    M = [list(r) for r in rows]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pr = M[r]
        for i in range(r + 1, len(M)):
            f = M[i][col]
            if f:
                f = f / pr[col]
                M[i] = [a - f * b for a, b in zip(M[i], pr)]
        r += 1
        if r == len(M):
            break
    return r


def affine_rank(points: Sequence[Point]) -> int:
    """Dimension of the affine hull of ``points``."""
    if not points:
        raise GeometryError("affine_rank of an empty point list")
    d = len(points[0])
    if any(len(p) != d for p in points):
        raise GeometryError("dimension mismatch")
    base = points[0]
    return rank([[a - b for a, b in zip(p, base)] for p in points[1:]])


def _integral(row: list[Fraction]) -> list:
    if all(v.denominator == 1 for v in row):
        return [v.numerator for v in row]
    return row


def _max_private_weight(A: Sequence[Point], B: Sequence[Point], private: Sequence[int]) -> Fraction | None:
    """Max total barycentric weight on ``private`` vertices of A over conv A ∩ conv B.

    None means the hulls are disjoint.
    """
    p, q, d = len(A), len(B), len(A[0])
    rows = [[1] * p + [0] * q, [0] * p + [1] * q]
    rhs = [1, 1]
    for t in range(d):
        rows.append(_integral([a[t] for a in A] + [-b[t] for b in B]))
        rhs.append(0)
    c = [1 if i in private else 0 for i in range(p)] + [0] * q
    res = lp.maximize(c, rows, rhs)
    if res.status == lp.INFEASIBLE:
        return None
    if res.status != lp.OPTIMAL:
        raise GeometryError("intersection LP unbounded; inputs are not finite simplices")
    return res.value


def simplex_intersection_is_common_face(
    A: Sequence[Point], B: Sequence[Point], common: Sequence[tuple[int, int]] = ()
) -> bool:
    """True iff conv(A) ∩ conv(B) lies inside the hull of the shared points.

    ``common`` lists index pairs ``(i, j)`` with ``A[i] == B[j]``. Both A and
    B must be affinely independent so barycentric coordinates are unique.
    """
    A = [point(a) for a in A]
    B = [point(b) for b in B]
    if not A or not B:
        raise GeometryError("empty simplex")
    if len({len(x) for x in A + B}) != 1:
        raise GeometryError("dimension mismatch")
    for name, S in (("A", A), ("B", B)):
        if affine_rank(S) != len(S) - 1:
            raise GeometryError(f"not a simplex: {name} is affinely dependent")
    for i, j in common:
        if A[i] != B[j]:
            raise GeometryError(f"common pair ({i}, {j}) refers to different points")
    return _meets_in_common_face(A, B, common)


def _meets_in_common_face(A: Sequence[Point], B: Sequence[Point], common: Sequence[tuple[int, int]]) -> bool:
    shared_a = {i for i, _ in common}
    shared_b = {j for _, j in common}
    wa = _max_private_weight(A, B, [i for i in range(len(A)) if i not in shared_a])
    if wa is not None and wa != 0:
        return False
    wb = _max_private_weight(B, A, [j for j in range(len(B)) if j not in shared_b])
    ok_b = wb is None or wb == 0
    if not ok_b:
        # the A-side LP certified containment; disagreement means a broken invariant
        raise GeometryError("asymmetric intersection verdict")
    return True


@dataclass(frozen=True)
class EmbeddingCoordinates:
    d: int
    points: Mapping[str, Point]

    def __post_init__(self):
        if self.d < 1:
            raise GeometryError("ambient dimension must be >= 1")
        for v, p in self.points.items():
            if len(p) != self.d:
                raise GeometryError(f"point for {v!r} has dimension {len(p)}, expected {self.d}")

    def to_document(self) -> dict:
        return {"d": self.d, "points": {v: [str(c) for c in self.points[v]] for v in sorted(self.points)}}

    @classmethod
    def from_document(cls, doc: Mapping) -> "EmbeddingCoordinates":
        try:
            d = doc["d"]
            pts = doc["points"]
            if not isinstance(d, int) or not isinstance(pts, Mapping):
                raise TypeError("'d' must be int and 'points' an object")
            parsed = {}
            for v, coords in pts.items():
                if not isinstance(coords, list):
                    raise TypeError(f"points[{v!r}] must be a list")
                for c in coords:
                    if not isinstance(c, (str, int)) or isinstance(c, bool) or (isinstance(c, str) and "." in c):
                        raise TypeError(f"points[{v!r}]: coordinate {c!r} is not an exact rational string")
                parsed[str(v)] = tuple(Fraction(c) for c in coords)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise GeometryError(f"malformed coordinates document: {exc}") from exc
        return cls(d, parsed)


@dataclass
class EmbeddingVerdict:
    valid: bool
    bad_edge: Edge | None = None
    bad_pair: tuple[Edge, Edge] | None = None
    checked_pairs: int = 0
    violations: list[tuple[Edge, Edge]] = field(default_factory=list)


def edge_pair_is_proper(e: Edge, f: Edge, points: Mapping[str, Point], validated: bool = False) -> bool:
    """Second embedding condition for one edge pair; ``validated`` skips the simplex checks."""
    A = [points[v] for v in e]
    B = [points[v] for v in f]
    pos_f = {v: j for j, v in enumerate(f)}
    common = [(i, pos_f[v]) for i, v in enumerate(e) if v in pos_f]
    if validated:
        return _meets_in_common_face(A, B, common)
    return simplex_intersection_is_common_face(A, B, common)


_worker_points: Mapping[str, Point] = {}


def _init_worker(points):
    global _worker_points
    _worker_points = points


def _check_chunk(pairs):
    return [(e, f) for e, f in pairs if not edge_pair_is_proper(e, f, _worker_points, validated=True)]


def default_workers() -> int:
    env = os.environ.get("HYPERCOLOR_THREADS")
    if env:
        return max(1, int(env))
    return 1


def verify_embedding(
    h: Hypergraph,
    coords: EmbeddingCoordinates,
    workers: int | None = None,
    all_violations: bool = False,
) -> EmbeddingVerdict:
    """Check both conditions of a linear embedding, pair by pair.

    Stops at the first bad edge pair unless ``all_violations`` is set.
    ``workers > 1`` checks pairs in a process pool.
    """
    missing = [v for v in h.vertices if v not in coords.points]
    if missing:
        raise HypergraphError(f"missing coordinates for {missing[:5]}")
    if coords.d < h.k - 1:
        raise GeometryError(f"dimension {coords.d} too small for {h.k}-uniform edges")
    edges = h.sorted_edges()
    for e in edges:
        pts = [coords.points[v] for v in e]
        if len(set(pts)) != len(pts) or affine_rank(pts) != h.k - 1:
            return EmbeddingVerdict(False, bad_edge=e)
    pairs = [(e, f) for e, f in combinations(edges, 2)]
    workers = default_workers() if workers is None else workers
    bad: list[tuple[Edge, Edge]] = []
    checked = len(pairs)
    if workers > 1 and len(pairs) > 200:
        size = max(50, len(pairs) // (workers * 8))
        chunks = [pairs[i:i + size] for i in range(0, len(pairs), size)]
        with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(dict(coords.points),)) as ex:
            for found in ex.map(_check_chunk, chunks):
                bad.extend(found)
    else:
        for idx, (e, f) in enumerate(pairs):
            if not edge_pair_is_proper(e, f, coords.points, validated=True):
                bad.append((e, f))
                if not all_violations:
                    checked = idx + 1
                    break
    if bad:
        return EmbeddingVerdict(False, bad_pair=bad[0], checked_pairs=checked, violations=bad)
    return EmbeddingVerdict(True, checked_pairs=len(pairs))
