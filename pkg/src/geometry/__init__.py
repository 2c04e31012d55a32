"""Clique geometries, neighbourhood structure and dual graphs."""

from src.geometry.clique_geometry import (
    delsarte_bound,
    detect_clique_geometry,
    geometry_from_array,
    verify_geometric_identities,
)
from src.geometry.dual import (
    DualGraph,
    build_dual,
    dual_spectrum_check,
    mu_tilde_check,
    root_graph_m2,
)
from src.geometry.metsch import metsch_criterion, metsch_lines
from src.geometry.neighborhoods import classify_neighborhood, is_rook_graph, local_line_graph_check
from src.geometry.polygons import classify_mu1_dual, feit_higman_check

__all__ = [
    "DualGraph",
    "build_dual",
    "classify_mu1_dual",
    "classify_neighborhood",
    "delsarte_bound",
    "detect_clique_geometry",
    "dual_spectrum_check",
    "feit_higman_check",
    "geometry_from_array",
    "is_rook_graph",
    "local_line_graph_check",
    "metsch_criterion",
    "metsch_lines",
    "mu_tilde_check",
    "root_graph_m2",
    "verify_geometric_identities",
]
