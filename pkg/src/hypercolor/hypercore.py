"""Uniform hypergraphs, colorings and the derived structures used throughout.

Vertices are strings. Edges are stored as sorted tuples inside a frozenset, so
two hypergraphs compare equal whenever they have the same uniformity, vertex
set and edge set, regardless of the order vertices were supplied in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping


class HypergraphError(ValueError):
    """Raised for structurally invalid hypergraphs or documents."""


Edge = tuple[str, ...]


@dataclass(frozen=True, eq=False)
class Hypergraph:
    k: int
    vertices: tuple[str, ...]
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.k < 1:
            raise HypergraphError(f"uniformity must be >= 1, got {self.k}")
        if len(set(self.vertices)) != len(self.vertices):
            raise HypergraphError("duplicate vertex identifiers")
        vset = set(self.vertices)
        for e in self.edges:
            if len(e) != self.k or len(set(e)) != self.k:
                raise HypergraphError(f"edge {list(e)} does not have {self.k} distinct vertices")
            if tuple(sorted(e)) != e:
                raise HypergraphError(f"edge {list(e)} is not stored sorted")
            missing = [v for v in e if v not in vset]
            if missing:
                raise HypergraphError(f"edge {list(e)} uses unknown vertices {missing}")

    @classmethod
    def from_edges(cls, k: int, vertices: Iterable, edges: Iterable[Iterable]) -> "Hypergraph":
        """Build from arbitrary iterables; rejects duplicate edges."""
        verts = tuple(str(v) for v in vertices)
        seen: set[Edge] = set()
        for e in edges:
            key = tuple(sorted(str(v) for v in e))
            if key in seen:
                raise HypergraphError(f"duplicate edge {list(key)}")
            seen.add(key)
        return cls(k, verts, frozenset(seen))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def incidence(self) -> dict[str, list[Edge]]:
        inc: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.sorted_edges():
            for v in e:
                inc[v].append(e)
        return inc

    def canonical(self) -> tuple:
        return (self.k, tuple(sorted(self.vertices)), tuple(self.sorted_edges()))

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return f"Hypergraph(k={self.k}, n={self.n}, edges={len(self.edges)})"


@dataclass(frozen=True)
class Coloring:
    """Vertex -> color in 1..c, tagged with the kind of validity it claims."""

    assignment: Mapping[str, int]
    c: int
    kind: str = "weak"

    def __post_init__(self):
        if self.kind not in ("weak", "strong"):
            raise ValueError(f"kind must be 'weak' or 'strong', got {self.kind!r}")
        bad = {v: col for v, col in self.assignment.items() if not 1 <= col <= self.c}
        if bad:
            raise ValueError(f"colors outside 1..{self.c}: {bad}")

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def to_document(self) -> dict:
        return {
            "kind": self.kind,
            "c": self.c,
            "assignment": {v: self.assignment[v] for v in sorted(self.assignment)},
        }

    @classmethod
    def from_document(cls, doc: Mapping) -> "Coloring":
        try:
            return cls({str(v): int(col) for v, col in doc["assignment"].items()}, int(doc["c"]), doc["kind"])
        except (KeyError, TypeError, AttributeError) as exc:
            raise HypergraphError(f"malformed coloring document: {exc}") from exc


def complete_hypergraph(n: int, k: int) -> Hypergraph:
    """K_n^(k) on vertices "1".."n"."""
    if n < 0 or k < 1:
        raise HypergraphError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    verts = [str(i) for i in range(1, n + 1)]
    return Hypergraph.from_edges(k, verts, combinations(verts, k))


def shadow(h: Hypergraph) -> Hypergraph:
    """Graph joining every pair of vertices that lie in a common edge."""
    if h.k < 2:
        raise HypergraphError("shadow undefined for k < 2")
    pairs = {pair for e in h.edges for pair in combinations(e, 2)}
    return Hypergraph(2, h.vertices, frozenset(pairs))


def _check_vertex(h: Hypergraph, v: str) -> None:
    if v not in h.incidence:
        raise HypergraphError(f"unknown vertex {v!r}")


def neighbors(h: Hypergraph, v: str) -> list[str]:
    _check_vertex(h, v)
    nb = {u for e in h.incidence[v] for u in e if u != v}
    return [u for u in h.vertices if u in nb]


def link(h: Hypergraph, v: str) -> Hypergraph:
    """The (k-1)-uniform neighborhood hypergraph of ``v``."""
    if h.k < 2:
        raise HypergraphError("link undefined for k < 2")
    _check_vertex(h, v)
    rest = frozenset(tuple(u for u in e if u != v) for e in h.incidence[v])
    return Hypergraph(h.k - 1, tuple(neighbors(h, v)), rest)


def degree(h: Hypergraph, v: str) -> int:
    _check_vertex(h, v)
    return len(h.incidence[v])


def _fresh_name(h: Hypergraph, base: str) -> str:
    name, i = base, 0
    taken = set(h.vertices)
    while name in taken:
        i += 1
        name = f"{base}{i}"
    return name


def cone(h: Hypergraph, apex: str | None = None) -> Hypergraph:
    """Add one new vertex to every edge, raising the uniformity by one."""
    if apex is None:
        apex = _fresh_name(h, "apex")
    elif apex in h.vertices:
        raise HypergraphError(f"apex {apex!r} already a vertex")
    edges = frozenset(tuple(sorted(e + (apex,))) for e in h.edges)
    return Hypergraph(h.k + 1, h.vertices + (apex,), edges)


def induced(h: Hypergraph, keep: Iterable[str]) -> Hypergraph:
    ks = set(keep)
    return Hypergraph(h.k, tuple(v for v in h.vertices if v in ks), frozenset(e for e in h.edges if ks.issuperset(e)))


# serialization -------------------------------------------------------------

def to_document(h: Hypergraph) -> dict:
    return {"k": h.k, "vertices": sorted(h.vertices), "edges": [list(e) for e in h.sorted_edges()]}


def serialize(h: Hypergraph) -> str:
    """Canonical JSON text; byte-identical for equal hypergraphs."""
    return json.dumps(to_document(h), indent=None, separators=(",", ":"), sort_keys=True) + "\n"


def from_document(doc) -> Hypergraph:
    if not isinstance(doc, Mapping):
        raise HypergraphError("hypergraph document must be a JSON object")
    for key in ("k", "vertices", "edges"):
        if key not in doc:
            raise HypergraphError(f"missing key {key!r}")
    k = doc["k"]
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise HypergraphError(f"'k' must be a positive integer, got {k!r}")
    verts = doc["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, (str, int)) and not isinstance(v, bool) for v in verts):
        raise HypergraphError("'vertices' must be a list of strings")
    verts = [str(v) for v in verts]
    if len(set(verts)) != len(verts):
        dup = sorted({v for v in verts if verts.count(v) > 1})
        raise HypergraphError(f"vertices: duplicate identifiers {dup}")
    vset = set(verts)
    raw = doc["edges"]
    if not isinstance(raw, list):
        raise HypergraphError("'edges' must be a list")
    seen: dict[Edge, int] = {}
    for idx, e in enumerate(raw):
        if not isinstance(e, list):
            raise HypergraphError(f"edges[{idx}]: not a list")
        e = [str(v) for v in e]
        if len(e) != k or len(set(e)) != k:
            raise HypergraphError(f"edges[{idx}]: expected {k} distinct vertices, got {e}")
        unknown = [v for v in e if v not in vset]
        if unknown:
            raise HypergraphError(f"edges[{idx}]: unknown vertices {unknown}")
        key = tuple(sorted(e))
        if key in seen:
            raise HypergraphError(f"edges[{idx}]: duplicate of edges[{seen[key]}]")
        seen[key] = idx
    return Hypergraph(k, tuple(verts), frozenset(seen))


def deserialize(text: str) -> Hypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return from_document(doc)
