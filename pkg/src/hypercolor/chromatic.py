"""Exact and randomized hypergraph coloring.

Both exact solvers share one backtracking core over bitmask color domains:

* vertices are statically ranked by (degree desc, name asc), and the next
  vertex is the one with the fewest remaining colors (DSATUR on graphs);
* a new color is only opened as ``max used + 1``;
* whenever all but one vertex of an edge carry the same color, that color is
  removed from the last vertex, and singleton domains are assigned at once.

The strong chromatic number is the chromatic number of the shadow graph, on
which the same core reduces to DSATUR with forward checking.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .hypercore import Coloring, Hypergraph, shadow


class ColoringError(ValueError):
    pass


class ResampleBudgetExhausted(RuntimeError):
    pass


def is_valid_coloring(h: Hypergraph, coloring: Coloring, kind: str | None = None) -> bool:
    """Strong: every edge rainbow. Weak: no edge monochromatic."""
    kind = kind or coloring.kind
    col = coloring.assignment
    missing = [v for v in h.vertices if v not in col]
    if missing:
        raise ColoringError(f"coloring misses vertices {missing[:5]}")
    if kind == "strong":
        return all(len({col[v] for v in e}) == h.k for e in h.edges)
    if kind == "weak":
        return all(len({col[v] for v in e}) > 1 for e in h.edges)
    raise ValueError(f"unknown coloring kind {kind!r}")


@dataclass
class ChromaticResult:
    """Outcome of an exact solve; ``exact`` is False only after a deadline."""

    lower: int
    upper: int
    witness: Coloring
    exact: bool
    refuted: list[int] = field(default_factory=list)
    nodes: int = 0
    seconds: float = 0.0

    @property
    def value(self) -> int | None:
        return self.upper if self.exact else None

    @property
    def exhausted(self) -> bool:
        """At least one color count was refuted by a complete search."""
        return bool(self.refuted)


class _Deadline(Exception):
    pass


class _Search:
    """Backtracking c-colorability test with no monochromatic edge."""

    def __init__(self, h: Hypergraph, deadline: float | None = None):
        deg = {v: len(h.incidence[v]) for v in h.vertices}
        self.names = sorted(h.vertices, key=lambda v: (-deg[v], v))
        index = {v: i for i, v in enumerate(self.names)}
        self.edges = [tuple(index[v] for v in e) for e in h.sorted_edges()]
        self.inc: list[list[int]] = [[] for _ in self.names]
        for ei, e in enumerate(self.edges):
            for v in e:
                self.inc[v].append(ei)
        self.deadline = deadline
        self.nodes = 0

    def color(self, c: int) -> list[int] | None:
        n = len(self.names)
        if any(len(e) == 1 for e in self.edges):
            return None
        self.c = c
        self.col = [-1] * n
        self.dom = [(1 << c) - 1] * n
        self.trail: list[tuple[int, int, int]] = []
        return list(self.col) if self._solve(-1) else None

    def _assign(self, v: int, a: int, queue: list[int]) -> bool:
        """Set v = a and propagate; False on conflict. All changes go on the trail."""
        self.trail.append((v, self.dom[v], -1))
        self.col[v] = a
        self.dom[v] = 1 << a
        bit = 1 << a
        col = self.col
        for ei in self.inc[v]:
            free = -1
            mono = True
            for u in self.edges[ei]:
                cu = col[u]
                if cu == -1:
                    if free != -1:
                        mono = False
                        break
                    free = u
                elif cu != a:
                    mono = False
                    break
            if not mono:
                continue
            if free == -1:
                return False
            if self.dom[free] & bit:
                self.trail.append((free, self.dom[free], -2))
                self.dom[free] &= ~bit
                if self.dom[free] == 0:
                    return False
                if self.dom[free] & (self.dom[free] - 1) == 0:
                    queue.append(free)
        return True

    def _undo(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            v, old, tag = trail.pop()
            self.dom[v] = old
            if tag == -1:
                self.col[v] = -1

    def _propagate(self, v: int, a: int) -> bool:
        queue: list[int] = []
        if not self._assign(v, a, queue):
            return False
        while queue:
            u = queue.pop()
            if self.col[u] != -1:
                continue
            if not self._assign(u, self.dom[u].bit_length() - 1, queue):
                return False
        return True

    def _solve(self, max_used: int) -> bool:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _Deadline
        best, best_size = -1, 1 << 30
        for v, cv in enumerate(self.col):
            if cv == -1:
                size = bin(self.dom[v]).count("1")
                if size < best_size:
                    best, best_size = v, size
                    if size <= 1:
                        break
        if best == -1:
            return True
        limit = min(self.c - 1, max_used + 1)
        dom = self.dom[best]
        for a in range(limit + 1):
            if not dom >> a & 1:
                continue
            mark = len(self.trail)
            if self._propagate(best, a):
                used = max(max_used, max(self.col))
                if self._solve(used):
                    return True
            self._undo(mark)
        return False

    def to_coloring(self, colors: list[int], c: int, kind: str) -> Coloring:
        return Coloring({self.names[i]: a + 1 for i, a in enumerate(colors)}, c, kind)


def greedy_weak_coloring(h: Hypergraph) -> Coloring:
    """First-fit weak coloring in (degree desc, name asc) order."""
    if h.k == 1 and h.edges:
        raise ColoringError("1-uniform edges cannot be weakly colored")
    deg = {v: len(h.incidence[v]) for v in h.vertices}
    col: dict[str, int] = {}
    for v in sorted(h.vertices, key=lambda v: (-deg[v], v)):
        a = 1
        while True:
            col[v] = a
            if all(not (all(u in col for u in e) and len({col[u] for u in e}) == 1) for e in h.incidence[v]):
                break
            a += 1
    c = max(col.values(), default=1)
    return Coloring(col, c, "weak")


def _greedy_clique(g: Hypergraph) -> int:
    adj = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    best = 1 if g.vertices else 0
    for start in g.vertices:
        clique = [start]
        cand = set(adj[start])
        while cand:
            v = max(sorted(cand), key=lambda x: len(adj[x] & cand))
            clique.append(v)
            cand &= adj[v]
        best = max(best, len(clique))
    return best


def _iterate(h: Hypergraph, lower: int, upper: Coloring, kind: str, deadline: float | None) -> ChromaticResult:
    t0 = time.monotonic()
    search = _Search(h, None if deadline is None else t0 + deadline)
    refuted: list[int] = []
    c = lower
    try:
        while c < upper.c:
            found = search.color(c)
            if found is not None:
                witness = search.to_coloring(found, c, kind)
                return ChromaticResult(c, c, witness, True, refuted, search.nodes, time.monotonic() - t0)
            refuted.append(c)
            c += 1
    except _Deadline:
        return ChromaticResult(c, upper.c, upper, False, refuted, search.nodes, time.monotonic() - t0)
    return ChromaticResult(upper.c, upper.c, upper, True, refuted, search.nodes, time.monotonic() - t0)


def strong_chromatic_number(h: Hypergraph, deadline: float | None = None) -> ChromaticResult:
    """Exact strong chromatic number via the chromatic number of the shadow."""
    if not h.edges or h.k == 1:
        return ChromaticResult(1, 1, Coloring({v: 1 for v in h.vertices}, 1, "strong"), True)
    g = shadow(h)
    upper = greedy_weak_coloring(g)
    res = _iterate(g, _greedy_clique(g), upper, "strong", deadline)
    res.witness = Coloring(dict(res.witness.assignment), res.witness.c, "strong")
    return res


def weak_chromatic_number(h: Hypergraph, deadline: float | None = None) -> ChromaticResult:
    """Exact weak chromatic number by iterative deepening on the color count.

    ``deadline`` is in seconds; on expiry the result carries the proven
    interval ``[lower, upper]`` and ``exact`` is False.
    """
    if h.k == 1 and h.edges:
        raise ColoringError("1-uniform edges cannot be weakly colored")
    if not h.edges:
        return ChromaticResult(1, 1, Coloring({v: 1 for v in h.vertices}, 1, "weak"), True)
    upper = greedy_weak_coloring(h)
    return _iterate(h, 2, upper, "weak", deadline)


def find_weak_coloring(h: Hypergraph, c: int, deadline: float | None = None) -> tuple[Coloring | None, bool]:
    """A weak c-coloring, or None. The flag says whether the search finished."""
    search = _Search(h, None if deadline is None else time.monotonic() + deadline)
    try:
        found = search.color(c)
    except _Deadline:
        return None, False
    return (search.to_coloring(found, c, "weak") if found is not None else None), True


def planar_weak_2_coloring(h: Hypergraph, four_coloring: Coloring) -> Coloring:
    """Collapse a proper 4-coloring of the shadow to a weak 2-coloring by parity."""
    if h.k != 3:
        raise ColoringError("parity collapse is defined for 3-uniform hypergraphs")
    col = four_coloring.assignment
    missing = [v for v in h.vertices if v not in col]
    if missing:
        raise ColoringError(f"coloring misses vertices {missing[:5]}")
    if any(not 1 <= col[v] <= 4 for v in h.vertices):
        raise ColoringError("input must use colors 1..4")
    for u, v in shadow(h).edges:
        if col[u] == col[v]:
            raise ColoringError(f"input is not a proper coloring of the shadow: {u} and {v} share color {col[u]}")
    return Coloring({v: col[v] % 2 + 1 for v in h.vertices}, 2, "weak")


def moser_tardos_weak_coloring(
    h: Hypergraph, c: int, seed: int | random.Random = 0, budget: int = 10**6
) -> Coloring:
    """Resample monochromatic edges until none is left.

    The first bad edge in sorted edge order is resampled each round, all of
    its vertices at once. Same seed, same coloring.
    """
    if c < 2:
        raise ColoringError("Moser-Tardos needs c >= 2")
    if not h.edges:
        raise ColoringError("Moser-Tardos needs at least one edge")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    order = sorted(h.vertices)
    col = {v: rng.randrange(1, c + 1) for v in order}
    edges = h.sorted_edges()
    rank = {e: i for i, e in enumerate(edges)}
    bad = {rank[e] for e in edges if len({col[v] for v in e}) == 1}
    inc = h.incidence
    for _ in range(budget):
        if not bad:
            return Coloring(col, c, "weak")
        e = edges[min(bad)]
        for v in e:
            col[v] = rng.randrange(1, c + 1)
        for v in e:
            for g in inc[v]:
                if len({col[u] for u in g}) == 1:
                    bad.add(rank[g])
                else:
                    bad.discard(rank[g])
    if not bad:
        return Coloring(col, c, "weak")
    raise ResampleBudgetExhausted(f"resample budget exhausted after {budget} resamples with c={c}")
