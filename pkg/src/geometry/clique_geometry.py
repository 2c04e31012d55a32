"""Delsarte clique geometries and their parameters psi_i, tau_i.

psi_i is the number of clique vertices at distance i from an outside vertex
whose distance to the clique is i. tau_i counts the cliques through x at
distance i - 1 from y, for dist(x, y) = i.
"""

import logging
from fractions import Fraction

import numpy as np

from src.config import get_settings
from src.core.graph import Graph, distance_matrix
from src.core.search import enumerate_maximal_cliques
from src.errors import GeometryInconsistencyError, ParameterError, StructuralViolationError
from src.schemas.models import (
    CliqueGeometryReport,
    IntersectionArray,
    InequalityReport,
    NeighborhoodKind,
    SpectralProfile,
)

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


def delsarte_bound(k: int, theta_min: float) -> float:
    """Largest possible clique size 1 - k / theta_min."""
    if theta_min >= 0:
        raise ParameterError(f"Delsarte bound needs theta_min < 0, got {theta_min}")
    return 1 - k / theta_min


def _kind_from_psi1(psi: list[int]) -> NeighborhoodKind:
    if len(psi) < 2 or psi[1] == 1:
        return NeighborhoodKind.DISJOINT_CLIQUES
    return NeighborhoodKind.CONNECTED


def _clique_edges(clique: tuple[int, ...]) -> list[Edge]:
    return [(u, v) for i, u in enumerate(clique) for v in clique[i + 1 :]]


def _exact_edge_cover(cliques: list[tuple[int, ...]], edges: list[Edge]) -> list[int] | None:
    """Indices of a sub-family covering every edge exactly once, or None."""
    edge_cliques: dict[Edge, list[int]] = {e: [] for e in edges}
    members = [_clique_edges(c) for c in cliques]
    for idx, clique_edges in enumerate(members):
        for e in clique_edges:
            edge_cliques[e].append(idx)

    def usable(idx: int, uncovered: set[Edge]) -> bool:
        return all(e in uncovered for e in members[idx])

    def search(uncovered: set[Edge], chosen: list[int]) -> list[int] | None:
        if not uncovered:
            return chosen
        # branch on the most constrained edge
        edge = min(
            uncovered,
            key=lambda e: (sum(usable(i, uncovered) for i in edge_cliques[e]), e),
        )
        for idx in edge_cliques[edge]:
            if usable(idx, uncovered):
                hit = search(uncovered - set(members[idx]), [*chosen, idx])
                if hit is not None:
                    return hit
        return None

    return search(set(edges), [])


def _empty_report(m: int | None, size: float, note: str) -> CliqueGeometryReport:
    return CliqueGeometryReport(
        is_geometric=False, source="graph", m=m, delsarte_size=size, notes=[note]
    )


def detect_clique_geometry(
    g: Graph,
    arr: IntersectionArray,
    profile: SpectralProfile,
    snap_tol: float | None = None,
) -> CliqueGeometryReport:
    """Find a Delsarte clique geometry of ``g`` and count psi_i, tau_i on it.

    Raises:
        GeometryInconsistencyError: a Delsarte clique cover exists but theta_d is
            not an integer
        StructuralViolationError: psi_i or tau_i is not constant over its
            distance class (first witness attached)
    """
    snap_tol = get_settings().snap_tol if snap_tol is None else snap_tol
    k, d = arr.k, arr.d
    theta_d = profile.theta_min
    m = round(-theta_d) if profile.integral_flags[-1] else None
    size = delsarte_bound(k, theta_d)
    size_int = round(size)
    if abs(size - size_int) >= snap_tol:
        return _empty_report(m, size, f"Delsarte size {size:.6g} is not an integer")

    cliques = [c for c in enumerate_maximal_cliques(g, min_size=size_int) if len(c) == size_int]
    edges = g.edges()
    cover: dict[Edge, int] = dict.fromkeys(edges, 0)
    for clique in cliques:
        for e in _clique_edges(clique):
            cover[e] += 1
    uncovered = [e for e, count in cover.items() if count == 0]
    if uncovered:
        return _empty_report(
            m, size, f"edge {uncovered[0]} lies in no Delsarte clique ({len(cliques)} found)"
        )
    notes: list[str] = []
    if any(count > 1 for count in cover.values()):
        chosen = _exact_edge_cover(cliques, edges)
        if chosen is None:
            return _empty_report(m, size, "Delsarte cliques admit no exact edge cover")
        notes.append(f"exact cover selected {len(chosen)} of {len(cliques)} Delsarte cliques")
        cliques = [cliques[i] for i in sorted(chosen)]

    if m is None:
        raise GeometryInconsistencyError(
            f"Delsarte clique cover found but theta_d = {theta_d} is not an integer",
            witness=cliques[0],
        )

    cliques_of: list[list[int]] = [[] for _ in range(g.n)]
    for idx, clique in enumerate(cliques):
        for v in clique:
            cliques_of[v].append(idx)
    off = next((v for v in range(g.n) if len(cliques_of[v]) != m), None)
    if off is not None:
        raise GeometryInconsistencyError(
            f"vertex {off} lies in {len(cliques_of[off])} cliques, expected m = {m}",
            witness=(off,),
        )

    dist = distance_matrix(g)
    to_clique = np.empty((len(cliques), g.n), dtype=np.int32)
    psi: dict[int, int] = {}
    for idx, clique in enumerate(cliques):
        sub = dist[list(clique)]
        nearest = sub.min(axis=0)
        to_clique[idx] = nearest
        hits = (sub == nearest).sum(axis=0)
        for i in np.unique(nearest).tolist():
            if i >= d:
                raise StructuralViolationError(
                    f"clique {idx} has a vertex at distance {i} >= d = {d}",
                    witness=(idx, int(np.flatnonzero(nearest == i)[0])),
                )
            values = np.unique(hits[nearest == i]).tolist()
            expected = psi.setdefault(i, values[0])
            if values != [expected]:
                x = int(np.flatnonzero((nearest == i) & (hits != expected))[0])
                raise StructuralViolationError(
                    f"psi_{i} is not constant: clique {idx}, vertex {x}", witness=(idx, x)
                )

    tau: dict[int, int] = {}
    for x in range(g.n):
        row = dist[x]
        hits = (to_clique[cliques_of[x]] == row - 1).sum(axis=0)
        for i in range(1, d + 1):
            values = np.unique(hits[row == i]).tolist()
            expected = tau.setdefault(i, values[0])
            if values != [expected]:
                y = int(np.flatnonzero((row == i) & (hits != expected))[0])
                raise StructuralViolationError(
                    f"tau_{i} is not constant: pair ({x}, {y})", witness=(x, y)
                )

    missing = [i for i in range(d) if i not in psi]
    if missing:
        raise StructuralViolationError(f"no vertex lies at distance {missing[0]} from any clique")
    psi_list = [psi[i] for i in range(d)]
    report = CliqueGeometryReport(
        is_geometric=True,
        source="graph",
        m=m,
        delsarte_size=size,
        cliques=[list(c) for c in cliques],
        psi=psi_list,
        tau=[tau[i] for i in range(1, d + 1)],
        neighborhood_kind=_kind_from_psi1(psi_list),
        notes=notes,
    )
    logger.info(
        f"[Geometry] {g.label or 'graph'}: {len(cliques)} cliques, m={m}, "
        f"psi={report.psi}, tau={report.tau}"
    )
    return report


def geometry_from_array(arr: IntersectionArray, profile: SpectralProfile) -> CliqueGeometryReport:
    """Parameters a geometric graph with this array would have.

    Starting from tau_1 = 1, psi_0 = 1 the identities
    b_i = (m - tau_i)(k/m + 1 - psi_i) and c_{i+1} = tau_{i+1} psi_i are solved
    in turn; every value must be an integer in range and tau_d must equal m.
    Passing is necessary, not sufficient, for the graph to be geometric.
    """
    k, d = arr.k, arr.d
    theta_d = profile.theta_min
    size = delsarte_bound(k, theta_d)
    base = CliqueGeometryReport(is_geometric=False, source="array", delsarte_size=size)
    if not profile.integral_flags[-1]:
        return base.model_copy(update={"notes": [f"theta_d = {theta_d:.6g} is not an integer"]})
    m = round(-theta_d)
    if k % m:
        return base.model_copy(update={"m": m, "notes": [f"m = {m} does not divide k = {k}"]})
    line = Fraction(k, m) + 1

    psi: list[int] = [1]
    tau: list[int] = [1]
    violations: list[str] = []
    for i in range(1, d):
        if tau[i - 1] >= m:
            violations.append(f"tau_{i} = {tau[i - 1]} leaves no clique off the geodesic (m = {m})")
            break
        psi_i = line - Fraction(arr.b_at(i), m - tau[i - 1])
        if psi_i.denominator != 1 or not 1 <= psi_i <= line:
            violations.append(f"psi_{i} = {psi_i} is not an integer in [1, {line}]")
            break
        psi.append(int(psi_i))
        tau_next = Fraction(arr.c_at(i + 1), psi_i)
        if tau_next.denominator != 1 or not 1 <= tau_next <= m:
            violations.append(f"tau_{i + 1} = {tau_next} is not an integer in [1, {m}]")
            break
        tau.append(int(tau_next))
    if not violations and tau[-1] != m:
        violations.append(f"tau_d = {tau[-1]} differs from m = {m}")

    is_geometric = not violations
    return CliqueGeometryReport(
        is_geometric=is_geometric,
        source="array",
        m=m,
        delsarte_size=size,
        psi=psi,
        tau=tau,
        neighborhood_kind=_kind_from_psi1(psi) if is_geometric else None,
        violations=violations,
        notes=["array-level parameters; the clique geometry itself is not constructed"],
    )


def verify_geometric_identities(
    report: CliqueGeometryReport, arr: IntersectionArray
) -> list[InequalityReport]:
    """c_i = tau_i psi_{i-1}, b_i = (m - tau_i)(k/m + 1 - psi_i), tau_2 >= psi_1, mu <= m^2."""
    if not report.is_geometric or report.m is None:
        return [InequalityReport.skipped("geometric identities", "no clique geometry")]
    m, k, d = report.m, arr.k, arr.d
    psi, tau = report.psi, report.tau
    out: list[InequalityReport] = []
    for i in range(1, d + 1):
        out.append(
            InequalityReport.compare(
                f"c[{i}]=tau*psi", arr.c_at(i), "==", tau[i - 1] * psi[i - 1],
                {"i": i, "tau": tau[i - 1], "psi": psi[i - 1]},
            )
        )
    for i in range(1, d):
        rhs = (m - tau[i - 1]) * (k / m + 1 - psi[i])
        out.append(
            InequalityReport.compare(
                f"b[{i}]=(m-tau)(k/m+1-psi)", arr.b_at(i), "==", rhs,
                {"i": i, "m": m, "tau": tau[i - 1], "psi": psi[i]},
            )
        )
    if d >= 2:
        out.append(InequalityReport.compare("tau2>=psi1", tau[1], ">=", psi[1]))
        out.append(InequalityReport.compare("mu<=m^2", arr.mu, "<=", m * m, {"m": m}))
    return out
