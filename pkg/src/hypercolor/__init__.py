"""Embeddable hypergraph families, embedding certificates and chromatic numbers."""

__version__ = "0.1.0"

from .hypercore import Coloring, Hypergraph, HypergraphError, cone, complete_hypergraph, link, shadow
from .geometry import EmbeddingCoordinates, simplex_intersection_is_common_face, verify_embedding
from .momentcurve import MomentOrder, PairStatus, certify_order, is_face, pair_safe
from .constructions import FAMILIES
from .chromatic import (
    moser_tardos_weak_coloring,
    planar_weak_2_coloring,
    strong_chromatic_number,
    weak_chromatic_number,
)
from .bounds import bound_report, bounds_table, edge_bound, lll_color_count

__all__ = [
    "Coloring", "Hypergraph", "HypergraphError", "cone", "complete_hypergraph", "link", "shadow",
    "EmbeddingCoordinates", "simplex_intersection_is_common_face", "verify_embedding",
    "MomentOrder", "PairStatus", "certify_order", "is_face", "pair_safe", "FAMILIES",
    "moser_tardos_weak_coloring", "planar_weak_2_coloring", "strong_chromatic_number",
    "weak_chromatic_number", "bound_report", "bounds_table", "edge_bound", "lll_color_count",
]
