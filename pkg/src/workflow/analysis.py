"""Compositions behind the CLI subcommands.

Each function takes an already-loaded graph or array and returns the
pydantic document the CLI prints.
"""

import logging
from pathlib import Path

from src.classifier.base import make_config
from src.classifier.lemmas import multiplicity_dichotomy
from src.core.generators import generate, spec_label
from src.core.graph import Graph
from src.core.search import find_induced_quadrangle
from src.drg.params import basic_inequalities, check_distance_regular, intersection_numbers
from src.errors import DRGError, ParameterError
from src.geometry.clique_geometry import (
    detect_clique_geometry,
    geometry_from_array,
    verify_geometric_identities,
)
from src.geometry.dual import build_dual, dual_spectrum_check, mu_tilde_check, root_graph_m2
from src.geometry.metsch import metsch_criterion, metsch_lines
from src.geometry.neighborhoods import classify_neighborhood, local_line_graph_check
from src.geometry.polygons import classify_mu1_dual
from src.motion.bounds import exact_motion
from src.schemas.models import (
    AnalysisDocument,
    ClassifyDocument,
    DualDocument,
    GeneratorSpec,
    GeometryDocument,
    IntersectionArray,
    MotionReport,
    NeighborhoodKind,
    SpectrumDocument,
)
from src.spectral.eigen import (
    eigen_solve,
    feasibility_check,
    local_eigenvalue_bounds,
    theta1_is_b1_minus_one,
)
from src.utils.file_ops import FileOps
from src.workflow.case_analysis import run_case_analysis

logger = logging.getLogger(__name__)


def load_graph(input_path: Path | None = None, spec: GeneratorSpec | None = None) -> Graph:
    """Read a graph file or build a named family; exactly one source is allowed."""
    if (input_path is None) == (spec is None):
        raise ParameterError("give exactly one of --input or --family")
    if input_path is not None:
        ops, name = FileOps.for_file(Path(input_path))
        g = ops.read_graph(name)
        if ops.has_sidecar(name):
            sidecar = ops.read_sidecar(name, GeneratorSpec)
            logger.debug(f"[Load] {name}: generated as {sidecar.family.value}")
            g = g.with_label(spec_label(sidecar))
        return g
    return generate(spec)


def parse_array(text: str) -> IntersectionArray:
    """Array from its JSON form, e.g. '{"d":2,"b":[4,2],"c":[1,2]}'."""
    return IntersectionArray.model_validate_json(text)


def analyze_graph(g: Graph) -> AnalysisDocument:
    arr = check_distance_regular(g)
    profile = eigen_solve(arr)
    has_quadrangle = find_induced_quadrangle(g) is not None
    return AnalysisDocument(
        label=g.label,
        array=arr,
        intersection_numbers=intersection_numbers(arr),
        inequalities=basic_inequalities(arr, has_quadrangle),
        spectrum=profile,
        feasibility=feasibility_check(arr),
        local_bounds=local_eigenvalue_bounds(g, profile),
        theta1_is_b1_minus_one=theta1_is_b1_minus_one(arr, profile),
    )


def spectrum_document(arr: IntersectionArray) -> SpectrumDocument:
    return SpectrumDocument(
        array=arr, spectrum=eigen_solve(arr), feasibility=feasibility_check(arr)
    )


def geometry_document(g: Graph) -> GeometryDocument:
    """Clique geometry with its identities, local structure and Metsch's conditions."""
    arr = check_distance_regular(g)
    profile = eigen_solve(arr)
    geometry = detect_clique_geometry(g, arr, profile)
    neighborhood = classify_neighborhood(g, geometric=geometry.is_geometric)
    m = geometry.m
    local = None
    if (
        m is not None
        and m >= 2
        and arr.k % m == 0
        and neighborhood.kind == NeighborhoodKind.CONNECTED
    ):
        local = local_line_graph_check(g, m)
    metsch = None
    if m is not None and m >= 1:
        metsch = metsch_criterion(arr, m)
        if metsch.holds:
            _, lines_check = metsch_lines(g, metsch)
            metsch.details.append(lines_check)
    return GeometryDocument(
        label=g.label,
        geometry=geometry,
        identities=verify_geometric_identities(geometry, arr),
        neighborhood=neighborhood,
        local_line_graph=local,
        metsch=metsch,
    )


def dual_document(g: Graph) -> DualDocument:
    """Dual graph, its spectrum containment, and the root graph when m = 2."""
    arr = check_distance_regular(g)
    profile = eigen_solve(arr)
    geometry = detect_clique_geometry(g, arr, profile)
    dual, checks = build_dual(g, geometry)
    checks.append(mu_tilde_check(dual, arr))
    root = root_graph_m2(g, geometry, dual) if geometry.m == 2 else None
    mu_one: list[str] = []
    if arr.mu == 1 and geometry.m == 2:
        kind, notes = classify_mu1_dual(arr, dual)
        mu_one = [f"dual kind: {kind}", *notes]
    return DualDocument(
        label=g.label,
        dual=dual.report(checks),
        spectrum_check=dual_spectrum_check(g, dual, profile),
        root_graph=root,
        mu_one=mu_one,
    )


def motion_document(g: Graph, max_group: int | None = None) -> MotionReport:
    """Exact motion plus every bound the graph's parameters give."""
    arr = check_distance_regular(g)
    profile = eigen_solve(arr)
    dual_graph = None
    try:
        geometry = detect_clique_geometry(g, arr, profile)
        if geometry.is_geometric and geometry.m is not None and geometry.m >= 2:
            dual_graph = build_dual(g, geometry)[0].graph
    except DRGError as e:
        logger.debug(f"[Motion] no dual transfer for {g.label or 'graph'}: {e}")
        dual_graph = None
    return exact_motion(g, max_group=max_group, arr=arr, profile=profile, dual=dual_graph)


def classify_graph(
    g: Graph,
    epsilon: float | None = None,
    eta_d: float | None = None,
    m_d: int | None = None,
) -> ClassifyDocument:
    """Case analysis with the geometry detected on the graph itself."""
    arr = check_distance_regular(g)
    profile = eigen_solve(arr)
    geometry = detect_clique_geometry(g, arr, profile)
    return _classify(arr, profile, geometry, g, epsilon, eta_d, m_d)


def classify_array(
    arr: IntersectionArray,
    epsilon: float | None = None,
    eta_d: float | None = None,
    m_d: int | None = None,
) -> ClassifyDocument:
    """Case analysis on array-level geometric parameters."""
    profile = eigen_solve(arr)
    geometry = geometry_from_array(arr, profile)
    return _classify(arr, profile, geometry, None, epsilon, eta_d, m_d)


def _classify(arr, profile, geometry, g, epsilon, eta_d, m_d) -> ClassifyDocument:
    config = make_config(arr.d, epsilon=epsilon, eta_d=eta_d, m_d=m_d)
    outcome = run_case_analysis(arr, profile, geometry, g, config)
    dichotomy = None
    if arr.d >= 2 and geometry.is_geometric:
        dichotomy = multiplicity_dichotomy(
            profile, geometry, arr, config.epsilon, tol=config.compare_tol
        )
    return ClassifyDocument(array=arr, geometry=geometry, outcome=outcome, dichotomy=dichotomy)

