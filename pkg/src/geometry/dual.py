"""Dual graph of a clique geometry and the root graph when m = 2."""

import logging
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from src.core.graph import Graph, distance_matrix, is_connected, line_graph
from src.errors import NotGeometricError, ParameterError, StructuralViolationError
from src.schemas.models import (
    CliqueGeometryReport,
    DualReport,
    IntersectionArray,
    InequalityReport,
    RootGraphReport,
    SpectralProfile,
)

logger = logging.getLogger(__name__)

MAX_DENSE_DUAL = 3000


@dataclass(frozen=True)
class DualGraph:
    """Cliques as vertices, adjacent when they share a vertex."""

    graph: Graph
    clique_of_vertex: tuple[tuple[int, ...], ...]
    k_tilde: int
    lambda_tilde: int
    m: int

    def report(self, checks: list[InequalityReport] | None = None) -> DualReport:
        diameter = int(distance_matrix(self.graph).max()) if is_connected(self.graph) else None
        return DualReport(
            vertices=self.graph.n,
            k_tilde=self.k_tilde,
            lambda_tilde=self.lambda_tilde,
            diameter=diameter,
            cliques=[list(c) for c in self.clique_of_vertex],
            checks=checks or [],
        )


def build_dual(
    g: Graph, geometry: CliqueGeometryReport
) -> tuple[DualGraph, list[InequalityReport]]:
    """Dual graph with the counting identity and the degree formulas verified.

    Raises:
        NotGeometricError: the geometry was not detected on a graph
        StructuralViolationError: two cliques meet twice, or a degree / lambda
            formula fails (offending clique pair attached)
    """
    if not geometry.is_geometric or geometry.m is None or not geometry.cliques:
        raise NotGeometricError("the dual graph needs a clique geometry detected on the graph")
    k = g.regular_degree() or 0
    m = geometry.m
    cliques = tuple(tuple(c) for c in geometry.cliques)
    line = k // m + 1

    through: list[list[int]] = [[] for _ in range(g.n)]
    for idx, clique in enumerate(cliques):
        for v in clique:
            through[v].append(idx)
    edges: set[tuple[int, int]] = set()
    for ids in through:
        for i, j in combinations(sorted(ids), 2):
            if (i, j) in edges:
                raise StructuralViolationError(f"cliques {i} and {j} share two vertices", (i, j))
            edges.add((i, j))
    label = f"dual({g.label})" if g.label else "dual"
    dual = Graph.from_edges(len(cliques), sorted(edges), label=label)

    k_tilde = (m - 1) * line
    psi1 = geometry.psi1
    lambda_tilde = (m - 2) + (psi1 - 1) * (k // m) if psi1 is not None else 0
    checks = [
        InequalityReport.compare(
            "|C|(1+k/m)=nm", len(cliques) * line, "==", g.n * m, {"cliques": len(cliques), "n": g.n}
        )
    ]
    wrong = next((v for v in range(dual.n) if dual.degree(v) != k_tilde), None)
    if wrong is not None:
        raise StructuralViolationError(
            f"dual vertex {wrong} has degree {dual.degree(wrong)}, expected {k_tilde}",
            (wrong, wrong),
        )
    checks.append(InequalityReport.flag("dual degree (m-1)(k/m+1)", True, k_tilde=k_tilde))
    if dual.num_edges:
        nbrs = dual.neighbor_sets
        for u, v in dual.edges():
            common = len(nbrs[u] & nbrs[v])
            if common != lambda_tilde:
                raise StructuralViolationError(
                    f"dual edge ({u}, {v}) has {common} common neighbours, expected {lambda_tilde}",
                    (u, v),
                )
        checks.append(
            InequalityReport.flag("dual lambda (m-2)+(psi1-1)k/m", True, lambda_tilde=lambda_tilde)
        )
    logger.info(f"[Dual] {len(cliques)} vertices, k~={k_tilde}, lambda~={lambda_tilde}")
    return (
        DualGraph(
            graph=dual,
            clique_of_vertex=cliques,
            k_tilde=k_tilde,
            lambda_tilde=lambda_tilde,
            m=m,
        ),
        checks,
    )


def dual_spectrum_check(g: Graph, dual: DualGraph, profile: SpectralProfile) -> InequalityReport:
    """Every dual eigenvalue is theta - k/m + m - 1 for some eigenvalue theta of g."""
    name = "dual spectrum in shifted spectrum"
    k, m = g.regular_degree() or 0, dual.m
    if k < m * m:
        return InequalityReport.skipped(name, f"needs k >= m^2 (k={k}, m={m})")
    if dual.graph.n > MAX_DENSE_DUAL:
        return InequalityReport.skipped(name, f"dual has more than {MAX_DENSE_DUAL} vertices")
    targets = np.array([theta - k / m + m - 1 for theta in profile.eigenvalues])
    values = np.linalg.eigvalsh(dual.graph.adjacency_matrix().astype(float))
    deviation = np.abs(values[:, None] - targets[None, :]).min(axis=1)
    worst = int(deviation.argmax())
    return InequalityReport.compare(
        name,
        float(deviation[worst]),
        "<=",
        1e-6,
        {"eigenvalue": float(values[worst]), "targets": ", ".join(f"{t:g}" for t in targets)},
    )


def mu_tilde_check(dual: DualGraph, arr: IntersectionArray) -> InequalityReport:
    """For mu = 1 the dual has exactly one common neighbour per distance-2 pair."""
    name = "dual mu = 1"
    if arr.mu != 1:
        return InequalityReport.skipped(name, f"needs mu = 1, got mu = {arr.mu}")
    adj = dual.graph.adjacency_matrix().astype(np.int64)
    dist = distance_matrix(dual.graph)
    walks = adj @ adj
    common = walks[dist == 2]
    if common.size == 0:
        return InequalityReport.skipped(name, "dual has no pair at distance 2")
    bad = np.argwhere((dist == 2) & (walks != 1))
    if bad.size:
        u, v = (int(x) for x in bad[0])
        return InequalityReport.flag(name, False, note=f"pair ({u}, {v})", u=u, v=v)
    return InequalityReport.flag(name, True, pairs=int(common.size // 2))


def root_graph_m2(g: Graph, geometry: CliqueGeometryReport, dual: DualGraph) -> RootGraphReport:
    """Verify g = L(Y) for Y the dual, under edge (C_i, C_j) -> the vertex C_i and C_j share."""
    if geometry.m != 2:
        raise ParameterError(f"root graph construction needs m = 2, got m = {geometry.m}")
    root = dual.graph
    cliques = [set(c) for c in dual.clique_of_vertex]
    root_edges = root.edges()
    image = []
    for i, j in root_edges:
        (shared,) = cliques[i] & cliques[j]
        image.append(shared)
    bijective = sorted(image) == list(range(g.n))
    matches = bijective
    if bijective and root_edges:
        lg = line_graph(root)
        matches = lg.num_edges == g.num_edges and all(
            g.has_edge(image[a], image[b]) for a, b in lg.edges()
        )
    return RootGraphReport(
        vertices=root.n, edges=len(root_edges), edge_to_vertex=image, line_graph_matches=matches
    )
