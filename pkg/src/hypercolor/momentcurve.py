"""Combinatorial embedding certificates from vertex orders on the moment curve.

Points on t -> (t, t^2, ..., t^d) are in general position and the face
lattice of their convex hull depends only on the order of the parameters.
This module decides whether two edges meet properly from that order alone,
using the odd-interior-block face test for cyclic polytopes plus the one
extra disjoint 3-in-R^3 pattern that is proper without either edge being a
face.

Pair patterns are strings over ``e`` (vertex only in the first edge), ``f``
(only in the second) and ``s`` (shared), listed in increasing position.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Collection, Hashable, Mapping, Sequence

from .geometry import EmbeddingCoordinates, edge_pair_is_proper
from .hypercore import Edge, Hypergraph, HypergraphError


class PairStatus(str, enum.Enum):
    SAFE = "safe"
    SPECIAL_SAFE = "special_safe"
    UNKNOWN = "unknown"


SPECIAL_PATTERNS = frozenset({"eefeff", "ffefee"})


@dataclass(frozen=True)
class MomentOrder:
    """Distinct integer curve parameters per vertex, in dimension ``d``.

    Parameters may be any distinct integers (zero and negatives included);
    only their relative order matters for certification.
    """

    positions: Mapping[str, int]
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("dimension must be >= 1")
        if len(set(self.positions.values())) != len(self.positions):
            raise ValueError("positions must be injective")

    def to_document(self) -> dict:
        return {"d": self.d, "positions": {v: self.positions[v] for v in sorted(self.positions)}}

    @classmethod
    def from_document(cls, doc: Mapping) -> "MomentOrder":
        try:
            d = doc["d"]
            raw = doc["positions"]
            if not isinstance(d, int) or not isinstance(raw, Mapping):
                raise TypeError("'d' must be int and 'positions' an object")
            pos = {}
            for v, p in raw.items():
                if not isinstance(p, int) or isinstance(p, bool):
                    raise TypeError(f"positions[{v!r}] must be an integer")
                pos[str(v)] = p
            return cls(pos, d)
        except (KeyError, TypeError, ValueError) as exc:
            raise HypergraphError(f"malformed order document: {exc}") from exc


@dataclass(frozen=True)
class ContiguityDecomposition:
    prefix: tuple
    interior: tuple[tuple, ...]
    suffix: tuple

    @property
    def odd_interior(self) -> int:
        return sum(len(b) % 2 for b in self.interior)


def decompose(order: Sequence[Hashable], subset: Collection[Hashable]) -> ContiguityDecomposition:
    """Split ``subset`` into maximal runs of consecutive items of ``order``."""
    members = set(subset)
    unknown = members.difference(order)
    if unknown:
        raise ValueError(f"subset items not in the order: {sorted(map(str, unknown))}")
    runs: list[list] = []
    prev_in = False
    for item in order:
        if item in members:
            if prev_in:
                runs[-1].append(item)
            else:
                runs.append([item])
        prev_in = item in members
    if not runs:
        raise ValueError("subset must be nonempty")
    prefix: tuple = ()
    suffix: tuple = ()
    if runs[0][0] == order[0]:
        prefix = tuple(runs.pop(0))
    if runs and runs[-1][-1] == order[-1]:
        suffix = tuple(runs.pop())
    return ContiguityDecomposition(prefix, tuple(tuple(r) for r in runs), suffix)


def is_face(order: Sequence[Hashable], subset: Collection[Hashable], d: int) -> bool:
    """Whether ``subset`` spans a face of the cyclic polytope on ``order``."""
    k = len(set(subset))
    if k > d:
        raise ValueError(f"face test needs k <= d, got k={k}, d={d}")
    return decompose(order, subset).odd_interior <= d - k


def pair_safe(pattern: str, k: int, d: int) -> PairStatus:
    """Sufficient test that two k-edges in the given merged order meet properly.

    UNKNOWN only means the test is inconclusive.
    """
    if set(pattern) - set("efs"):
        raise ValueError(f"pattern must use only 'e', 'f', 's': {pattern!r}")
    in_e = pattern.count("e") + pattern.count("s")
    in_f = pattern.count("f") + pattern.count("s")
    if in_e != k or in_f != k:
        raise ValueError(f"pattern {pattern!r} does not describe two {k}-element edges")
    if pattern.count("s") >= k:
        raise ValueError("edges must share at most k-1 vertices")
    order = range(len(pattern))
    e = [i for i, t in enumerate(pattern) if t in "es"]
    f = [i for i, t in enumerate(pattern) if t in "fs"]
    if is_face(order, e, d) or is_face(order, f, d):
        return PairStatus.SAFE
    if k == 3 and d == 3 and pattern in SPECIAL_PATTERNS:
        return PairStatus.SPECIAL_SAFE
    return PairStatus.UNKNOWN


def merged_pattern(e: Edge, f: Edge, positions: Mapping[str, int]) -> str:
    fs, es = set(f), set(e)
    union = sorted(es | fs, key=positions.__getitem__)
    return "".join("s" if v in es and v in fs else ("e" if v in es else "f") for v in union)


def _canonical_disjoint(pattern: str) -> str:
    swapped = pattern.translate(str.maketrans("ef", "fe"))
    return min(pattern, swapped)


_DISJOINT_TYPES = sorted(
    {_canonical_disjoint("".join("e" if i in s else "f" for i in range(6))) for s in combinations(range(6), 3)}
)


def configuration_label(pattern: str) -> int:
    """Implementation-local type number 1..10 of a disjoint 3+3 pattern.

    Types are the 20 interleavings up to swapping the two edges, numbered by
    lexicographic rank of the representative starting with ``e``. A type
    and its reversal get different numbers.
    """
    if sorted(pattern) != sorted("eeefff"):
        raise ValueError("configuration labels exist only for two disjoint triples")
    return _DISJOINT_TYPES.index(_canonical_disjoint(pattern)) + 1


def realize_on_curve(order: MomentOrder) -> EmbeddingCoordinates:
    """Exact integer moment-curve coordinates for every vertex of ``order``."""
    pts = {v: tuple(Fraction(p**i) for i in range(1, order.d + 1)) for v, p in order.positions.items()}
    return EmbeddingCoordinates(order.d, pts)


@dataclass
class Certificate:
    valid: bool
    violations: list[tuple[Edge, Edge]] = field(default_factory=list)
    checked_pairs: int = 0
    special_pairs: int = 0
    escalated_pairs: int = 0

    def to_document(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [[list(e), list(f)] for e, f in self.violations],
            "checked_pairs": self.checked_pairs,
        }


def certify_order(
    h: Hypergraph,
    order: MomentOrder,
    escalate: bool = False,
    all_violations: bool = False,
) -> Certificate:
    """Certify that placing ``h`` on the moment curve in ``order`` embeds it.

    Pairs sharing k-1 vertices span at most k+1 curve points, which form a
    simplex, so they are never examined. With ``escalate`` every inconclusive
    pair is settled by the exact geometric check instead of failing.
    """
    missing = [v for v in h.vertices if v not in order.positions]
    if missing:
        raise HypergraphError(f"order misses vertices {missing[:5]}")
    if order.d < h.k:
        raise ValueError(f"certification needs d >= k, got d={order.d}, k={h.k}")
    pos = order.positions
    coords = realize_on_curve(order).points if escalate else None
    edges = h.sorted_edges()
    sets = [frozenset(e) for e in edges]
    cert = Certificate(True)
    status_cache: dict[str, PairStatus] = {}
    for (i, e), (j, f) in combinations(enumerate(edges), 2):
        if len(sets[i] & sets[j]) >= h.k - 1:
            continue
        cert.checked_pairs += 1
        pat = merged_pattern(e, f, pos)
        status = status_cache.get(pat)
        if status is None:
            status = status_cache[pat] = pair_safe(pat, h.k, order.d)
        if status is PairStatus.SPECIAL_SAFE:
            cert.special_pairs += 1
            continue
        if status is PairStatus.SAFE:
            continue
        if escalate:
            cert.escalated_pairs += 1
            if edge_pair_is_proper(e, f, coords):
                continue
        cert.valid = False
        cert.violations.append((e, f))
        if not all_violations:
            break
    return cert
