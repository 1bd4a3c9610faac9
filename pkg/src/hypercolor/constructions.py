"""Generators for the embeddable hypergraph families, each with a certificate.

Every generator is deterministic: the same parameters give byte-identical
hypergraphs and certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .geometry import EmbeddingCoordinates, verify_embedding
from .hypercore import Hypergraph, complete_hypergraph
from .momentcurve import MomentOrder, realize_on_curve


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class ConstructedFamily:
    hypergraph: Hypergraph
    certificate: MomentOrder | EmbeddingCoordinates
    meta: dict = field(default_factory=dict)

    @property
    def coordinates(self) -> EmbeddingCoordinates:
        if isinstance(self.certificate, MomentOrder):
            return realize_on_curve(self.certificate)
        return self.certificate


def _meta(family: str, params: dict, h: Hypergraph, d: int, **extra) -> dict:
    out = {"family": family, "params": params, "k": h.k, "d": d, "vertices": h.n, "edges": len(h.edges)}
    out.update(extra)
    return out


def construct_F(m: int) -> ConstructedFamily:
    """3-uniform in R^3 on 2m+1 vertices whose shadow is complete."""
    if m < 1:
        raise ConstructionError(f"F needs m >= 1, got {m}")
    h, pos = _F_graph(m)
    meta = _meta("F", {"m": m}, h, 3, predicted_vertices=2 * m + 1, predicted_edges=m * m,
                 predicted_strong=2 * m + 1)
    return ConstructedFamily(h, MomentOrder(pos, 3), meta)


def _F_graph(m: int) -> tuple[Hypergraph, dict[str, int]]:
    verts = ["v0"] + [f"{x}{i}" for i in range(1, m + 1) for x in ("v", "w")]
    edges = [(f"v{i}", f"v{j}", f"w{j}") for j in range(1, m + 1) for i in range(j)]
    edges += [(f"w{i}", f"v{j}", f"w{j}") for j in range(2, m + 1) for i in range(1, j)]
    pos = {"v0": 1}
    for i in range(1, m + 1):
        pos[f"v{i}"] = 2 * i
        pos[f"w{i}"] = 2 * i + 1
    return Hypergraph.from_edges(3, verts, edges), pos


def construct_F_prime(m: int) -> ConstructedFamily:
    """Even-order companion of F: F_{m-1} plus one vertex at curve parameter 0.

    The new vertex v0' is joined to every pair {v_i, w_i} with 1 <= i <= m-1
    (w_m does not exist in F_{m-1}) and to {v_0, w_{m-1}}.
    """
    if m < 2:
        raise ConstructionError(f"F' needs m >= 2, got {m}")
    base, pos = _F_graph(m - 1)
    apex = "v0'"
    edges = list(base.edges)
    edges += [(apex, f"v{i}", f"w{i}") for i in range(1, m)]
    edges.append((apex, "v0", f"w{m - 1}"))
    h = Hypergraph.from_edges(3, list(base.vertices) + [apex], edges)
    pos = dict(pos)
    pos[apex] = 0
    meta = _meta("Fprime", {"m": m}, h, 3, predicted_vertices=2 * m,
                 predicted_edges=(m - 1) ** 2 + m, predicted_strong=2 * m,
                 note="new-vertex edge range taken as 1 <= i <= m-1 since w_m is not a vertex of F_{m-1}")
    return ConstructedFamily(h, MomentOrder(pos, 3), meta)


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _sqrt_points(m: int, eps: Fraction) -> dict[str, tuple[Fraction, ...]]:
    phi = {f"u{i}": (Fraction(i), Fraction(i * i), Fraction(i**3)) for i in range(1, m + 1)}
    pts = dict(phi)
    axes = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for idx, (i, j) in enumerate(combinations(range(1, m + 1), 2)):
        a, b = phi[f"u{i}"], phi[f"u{j}"]
        direction = tuple(y - x for x, y in zip(a, b))
        mid = tuple((x + y) / 2 for x, y in zip(a, b))
        # rotate the helper axis per edge; moment-curve chords are never parallel to an axis
        eta1 = _cross(direction, axes[idx % 3])
        eta2 = _cross(direction, eta1)
        n1 = max(abs(c) for c in eta1)
        n2 = max(abs(c) for c in eta2)
        pts[f"p{i}_{j}"] = tuple(c + eps * e / n1 for c, e in zip(mid, eta1))
        pts[f"q{i}_{j}"] = tuple(c + eps * (e / n2 + f / n1) / 2 for c, e, f in zip(mid, eta2, eta1))
    return pts


def construct_sqrt_family(m: int, max_halvings: int = 64) -> ConstructedFamily:
    """4-uniform in R^3 on m^2 vertices containing K_m in its shadow.

    Each edge {u_i, u_j} of the moment-curve K_m gets a thin tetrahedron
    hugging the chord; the offset is halved until the exact check passes.
    """
    if m < 4:
        raise ConstructionError(f"sqrt family needs m >= 4, got {m}")
    verts = [f"u{i}" for i in range(1, m + 1)]
    edges = []
    for i, j in combinations(range(1, m + 1), 2):
        verts += [f"p{i}_{j}", f"q{i}_{j}"]
        edges.append((f"u{i}", f"u{j}", f"p{i}_{j}", f"q{i}_{j}"))
    h = Hypergraph.from_edges(4, verts, edges)
    eps = Fraction(1, 4)
    for _ in range(max_halvings):
        coords = EmbeddingCoordinates(3, _sqrt_points(m, eps))
        if verify_embedding(h, coords).valid:
            meta = _meta("sqrt", {"m": m}, h, 3, predicted_vertices=m * m, predicted_edges=comb(m, 2),
                         predicted_strong_lower=m, offset=str(eps))
            return ConstructedFamily(h, coords, meta)
        eps /= 2
    raise ConstructionError(f"no valid offset found after {max_halvings} halvings")


# H_m: weakly m-chromatic, 3-uniform, embeddable in R^3 --------------------

def h_vertex_count(m: int) -> int:
    return 3 if m == 2 else m + h_vertex_count(m - 1) * comb(m, 2)


def h_edge_count(m: int) -> int:
    return 1 if m == 2 else comb(m, 2) * (h_edge_count(m - 1) + h_vertex_count(m - 1))


@lru_cache(maxsize=None)
def _H(m: int) -> tuple[tuple[str, ...], frozenset, tuple[tuple[str, int], ...]]:
    if m == 2:
        verts = ("v0", "v1", "v2")
        return verts, frozenset({verts}), (("v0", 1), ("v1", 2), ("v2", 3))
    sub_verts, sub_edges, sub_pos = _H(m - 1)
    n_prev = len(sub_verts)
    sub_pos = dict(sub_pos)
    verts = [f"v{j}" for j in range(m)]
    # positions are the closed-form layout shifted by one so the range is 1..n_m
    pos = {f"v{j}": n_prev * comb(j, 2) + j + 1 for j in range(m)}
    edges = []
    for j in range(1, m):
        for i in range(j):
            pre = f"c{i}_{j}/"
            offset = n_prev * (comb(j, 2) + i) + j + 1
            for w in sub_verts:
                verts.append(pre + w)
                pos[pre + w] = offset + sub_pos[w]
                edges.append(tuple(sorted((f"v{i}", f"v{j}", pre + w))))
            edges.extend(tuple(sorted(pre + x for x in e)) for e in sub_edges)
    return tuple(verts), frozenset(edges), tuple(pos.items())


def construct_H(m: int) -> ConstructedFamily:
    """Recursive 3-uniform family with weak chromatic number m."""
    if m < 2:
        raise ConstructionError(f"H needs m >= 2, got {m}")
    verts, edges, pos = _H(m)
    h = Hypergraph(3, verts, edges)
    meta = _meta("H", {"m": m}, h, 3, predicted_vertices=h_vertex_count(m),
                 predicted_edges=h_edge_count(m), predicted_weak=m)
    return ConstructedFamily(h, MomentOrder(dict(pos), 3), meta)


def hd_vertex_count(m: int, d: int) -> int:
    if d == 3:
        return h_vertex_count(m)
    if m == 2:
        return d
    return hd_vertex_count(m - 1, d) + hd_vertex_count(m, d - 1)


def hd_edge_count(m: int, d: int) -> int:
    if d == 3:
        return h_edge_count(m)
    if m == 2:
        return 1
    return hd_edge_count(m - 1, d) + hd_vertex_count(m - 1, d) * hd_edge_count(m, d - 1)


@lru_cache(maxsize=None)
def _Hd(m: int, d: int) -> tuple[tuple[str, ...], frozenset, tuple[tuple[str, int], ...]]:
    if d == 3:
        return _H(m)
    if m == 2:
        verts = tuple(f"x{i}" for i in range(d))
        return verts, frozenset({verts}), tuple((v, i + 1) for i, v in enumerate(verts))
    a_verts, a_edges, a_pos = _Hd(m - 1, d)
    b_verts, b_edges, b_pos = _Hd(m, d - 1)
    n_a = len(a_verts)
    verts = [f"a/{v}" for v in a_verts] + [f"b/{v}" for v in b_verts]
    pos = {f"a/{v}": p for v, p in a_pos}
    pos.update((f"b/{v}", n_a + p) for v, p in b_pos)
    edges = {tuple(f"a/{v}" for v in e) for e in a_edges}
    for v in a_verts:
        for e in b_edges:
            edges.add(tuple(sorted((f"a/{v}",) + tuple(f"b/{w}" for w in e))))
    return tuple(verts), frozenset(edges), tuple(pos.items())


def construct_H_d(m: int, d: int) -> ConstructedFamily:
    """d-uniform family in R^(2d-3) with weak chromatic number at least m."""
    if m < 2 or d < 3:
        raise ConstructionError(f"H^d needs m >= 2 and d >= 3, got m={m}, d={d}")
    verts, edges, pos = _Hd(m, d)
    h = Hypergraph(d, verts, edges)
    dim = 2 * d - 3
    meta = _meta("Hd", {"m": m, "d": d}, h, dim, predicted_vertices=hd_vertex_count(m, d),
                 predicted_edges=hd_edge_count(m, d), predicted_weak_lower=m, escalate_default=(d == 4))
    return ConstructedFamily(h, MomentOrder(dict(pos), dim), meta)


def construct_complete_embedded(n: int, k: int) -> ConstructedFamily:
    """K_n^(k) on the moment curve in R^(2k-1)."""
    if n < 1 or k < 1:
        raise ConstructionError(f"complete needs n >= 1 and k >= 1, got n={n}, k={k}")
    h = complete_hypergraph(n, k)
    dim = max(2 * k - 1, 1)
    pos = {str(i): i for i in range(1, n + 1)}
    meta = _meta("complete", {"n": n, "k": k}, h, dim, predicted_vertices=n, predicted_edges=comb(n, k),
                 predicted_strong=n if h.edges else 1,
                 predicted_weak=(None if k == 1 and h.edges else (-(-n // (k - 1)) if h.edges else 1)))
    return ConstructedFamily(h, MomentOrder(pos, dim), meta)


FAMILIES = {
    "complete": construct_complete_embedded,
    "F": construct_F,
    "Fprime": construct_F_prime,
    "sqrt": construct_sqrt_family,
    "H": construct_H,
    "Hd": construct_H_d,
}
