import networkx as nx
import pytest

from src.core.generators import complete_graph, hamming_graph, johnson_graph, rook_graph
from src.drg.params import hamming_array, johnson_array
from src.errors import NotGeometricError, ParameterError
from src.geometry.clique_geometry import (
    delsarte_bound,
    detect_clique_geometry,
    geometry_from_array,
    verify_geometric_identities,
)
from src.geometry.dual import build_dual, dual_spectrum_check, mu_tilde_check, root_graph_m2
from src.geometry.metsch import metsch_criterion, metsch_lines
from src.geometry.neighborhoods import (
    classify_neighborhood,
    is_rook_graph,
    local_line_graph_check,
)
from src.geometry.polygons import classify_mu1_dual, feit_higman_check
from src.schemas.models import IntersectionArray, NeighborhoodKind
from src.spectral.eigen import eigen_solve


@pytest.fixture
def geometry_of(drg_data):
    def detect(g):
        arr, profile = drg_data(g)
        return arr, profile, detect_clique_geometry(g, arr, profile)

    return detect


def test_delsarte_bound():
    assert delsarte_bound(6, -2) == 4
    assert delsarte_bound(3, -2) == 2.5
    with pytest.raises(ParameterError):
        delsarte_bound(3, 0)


# Clique geometry on explicit graphs


@pytest.mark.parametrize(
    ("name", "cliques", "psi", "tau", "kind"),
    [
        ("h23", 6, [1, 1], [1, 2], NeighborhoodKind.DISJOINT_CLIQUES),
        ("j52", 5, [1, 2], [1, 2], NeighborhoodKind.CONNECTED),
        ("octahedron", 4, [1, 2], [1, 2], NeighborhoodKind.CONNECTED),
        ("line_petersen", 10, [1, 1, 2], [1, 1, 2], NeighborhoodKind.DISJOINT_CLIQUES),
    ],
)
def test_detect_clique_geometry(name, cliques, psi, tau, kind, geometry_of, request):
    arr, _, geometry = geometry_of(request.getfixturevalue(name))
    assert geometry.is_geometric
    assert geometry.source == "graph"
    assert geometry.m == 2
    assert len(geometry.cliques) == cliques
    assert geometry.psi == psi
    assert geometry.tau == tau
    assert geometry.neighborhood_kind == kind
    assert all(r.holds for r in verify_geometric_identities(geometry, arr))


def test_exact_cover_is_recorded(octahedron, geometry_of):
    _, _, geometry = geometry_of(octahedron)
    assert geometry.notes[0].startswith("exact cover selected 4 of 8")


def test_petersen_is_not_geometric(petersen, geometry_of):
    arr, _, geometry = geometry_of(petersen)
    assert not geometry.is_geometric
    assert geometry.delsarte_size == 2.5
    assert "2.5" in geometry.notes[0]
    identities = verify_geometric_identities(geometry, arr)
    assert len(identities) == 1 and not identities[0].applicable


def test_shrikhande_geometry(shrikhande, geometry_of):
    _, _, geometry = geometry_of(shrikhande)
    # Delsarte size 1 + 6/2 = 4, but the Shrikhande graph has only triangles
    assert geometry.delsarte_size == 4
    assert not geometry.is_geometric


# Array-level parameters


def test_geometry_from_hamming_array():
    arr = hamming_array(3, 2000)
    geometry = geometry_from_array(arr, eigen_solve(arr))
    assert geometry.is_geometric
    assert geometry.source == "array"
    assert geometry.m == 3
    assert geometry.psi == [1, 1, 1]
    assert geometry.tau == [1, 2, 3]
    assert geometry.neighborhood_kind == NeighborhoodKind.DISJOINT_CLIQUES
    assert geometry.cliques == []


def test_geometry_from_johnson_array():
    arr = johnson_array(13, 3)
    geometry = geometry_from_array(arr, eigen_solve(arr))
    assert geometry.psi == [1, 2, 3]
    assert geometry.tau == [1, 2, 3]
    assert geometry.neighborhood_kind == NeighborhoodKind.CONNECTED
    assert all(r.holds for r in verify_geometric_identities(geometry, arr))


def test_geometry_from_array_needs_m_dividing_k():
    arr = IntersectionArray(d=2, b=[3, 2], c=[1, 1])
    geometry = geometry_from_array(arr, eigen_solve(arr))
    assert not geometry.is_geometric
    assert geometry.m == 2
    assert "does not divide" in geometry.notes[0]


def test_geometry_from_array_with_irrational_theta_d():
    arr = IntersectionArray(d=3, b=[5, 2, 1], c=[1, 2, 5])
    geometry = geometry_from_array(arr, eigen_solve(arr))
    assert not geometry.is_geometric
    assert geometry.m is None


# Local graphs


def test_classify_neighborhood(h23, j52, petersen):
    disjoint = classify_neighborhood(h23, geometric=True)
    assert disjoint.kind == NeighborhoodKind.DISJOINT_CLIQUES
    assert disjoint.uniform
    assert (disjoint.clique_count, disjoint.clique_size) == (2, 2)
    assert classify_neighborhood(j52).kind == NeighborhoodKind.CONNECTED
    # X(v) of Petersen is three isolated vertices
    report = classify_neighborhood(petersen)
    assert (report.kind, report.clique_count, report.clique_size) == (
        NeighborhoodKind.DISJOINT_CLIQUES,
        3,
        1,
    )


def test_is_rook_graph():
    assert is_rook_graph(rook_graph(3, 4), 3, 4)
    assert is_rook_graph(rook_graph(3, 4), 4, 3)
    assert not is_rook_graph(rook_graph(3, 4), 2, 6)
    assert not is_rook_graph(complete_graph(4), 2, 2)
    assert is_rook_graph(complete_graph(4), 1, 4)


def test_local_line_graph_check(j52, h23):
    report = local_line_graph_check(j52, 2)
    assert report.holds
    assert (report.rows, report.cols) == (2, 3)
    failing = local_line_graph_check(h23, 2)
    assert not failing.holds
    assert failing.failing_vertices == list(range(9))
    with pytest.raises(ParameterError):
        local_line_graph_check(j52, 4)


# Metsch


def test_metsch_on_a_large_hamming_array():
    report = metsch_criterion(hamming_array(2, 9), 2)
    assert report.holds
    assert report.line_threshold == 8
    lines, check = metsch_lines(hamming_graph(2, 9), report)
    assert len(lines) == 18
    assert check.holds


def test_metsch_conditions_fail_on_small_hamming():
    report = metsch_criterion(hamming_array(2, 3), 2)
    assert report.conditions_hold == [True, True, False, False]
    assert not report.holds
    with pytest.raises(ParameterError):
        metsch_criterion(hamming_array(2, 3), 0)


# Dual graph


def test_dual_of_hamming_is_complete_bipartite(h23, geometry_of, as_nx):
    _, profile, geometry = geometry_of(h23)
    dual, checks = build_dual(h23, geometry)
    assert (dual.graph.n, dual.k_tilde, dual.lambda_tilde) == (6, 3, 0)
    assert nx.is_isomorphic(as_nx(dual.graph), nx.complete_bipartite_graph(3, 3))
    assert all(r.holds for r in checks)
    assert dual.report(checks).diameter == 2
    assert dual_spectrum_check(h23, dual, profile).holds

    root = root_graph_m2(h23, geometry, dual)
    assert root.line_graph_matches
    assert (root.vertices, root.edges) == (6, 9)
    assert sorted(root.edge_to_vertex) == list(range(9))


def test_dual_of_johnson_is_complete(j52, geometry_of, as_nx):
    _, _, geometry = geometry_of(j52)
    dual, _ = build_dual(j52, geometry)
    assert (dual.k_tilde, dual.lambda_tilde) == (4, 3)
    assert nx.is_isomorphic(as_nx(dual.graph), nx.complete_graph(5))
    assert dual.report().diameter == 1


def test_dual_of_line_petersen_is_petersen(line_petersen, geometry_of, as_nx):
    arr, profile, geometry = geometry_of(line_petersen)
    dual, _ = build_dual(line_petersen, geometry)
    assert nx.is_isomorphic(as_nx(dual.graph), nx.petersen_graph())
    assert mu_tilde_check(dual, arr).holds
    assert dual_spectrum_check(line_petersen, dual, profile).holds
    kind, notes = classify_mu1_dual(arr, dual)
    assert kind == "moore"
    assert notes == ["dual is a Moore graph of degree 3"]


def test_mu_tilde_check_skips_when_mu_is_not_one(h23, geometry_of):
    arr, _, geometry = geometry_of(h23)
    dual, _ = build_dual(h23, geometry)
    assert not mu_tilde_check(dual, arr).applicable


def test_dual_needs_a_geometry(petersen, geometry_of):
    _, _, geometry = geometry_of(petersen)
    with pytest.raises(NotGeometricError):
        build_dual(petersen, geometry)


def test_root_graph_needs_m_two(h23, geometry_of):
    _, _, geometry = geometry_of(h23)
    dual, _ = build_dual(h23, geometry)
    with pytest.raises(ParameterError):
        root_graph_m2(h23, geometry.model_copy(update={"m": 3}), dual)


# Generalized polygons


def test_mu_one_dual_with_c_d_two_is_a_polygon():
    # line graph of the Heawood graph
    kind, notes = classify_mu1_dual(IntersectionArray(d=3, b=[4, 2, 2], c=[1, 1, 2]))
    assert kind == "generalized-polygon"
    assert notes[0] == "dual is a generalized 6-gon of order (1, 2)"
    assert any("odd" in note for note in notes)


@pytest.mark.parametrize(
    ("two_d", "s", "t", "holds"),
    [(4, 2, 2, True), (6, 1, 3, True), (8, 2, 4, True), (10, 2, 2, False), (12, 2, 2, False)],
)
def test_feit_higman(two_d, s, t, holds):
    assert feit_higman_check(two_d, s, t).holds is holds


def test_feit_higman_edge_cases():
    assert not feit_higman_check(10, 1, 1).applicable
    with pytest.raises(ParameterError):
        feit_higman_check(5, 2, 2)
    with pytest.raises(ParameterError):
        feit_higman_check(6, 0, 2)


GEOMETRY_GRID = [
    *((hamming_graph(2, s), [1, 1], [1, 2]) for s in (3, 4, 5)),
    *((hamming_graph(3, s), [1, 1, 1], [1, 2, 3]) for s in (3, 4)),
    *((johnson_graph(s, 2), [1, 2], [1, 2]) for s in (5, 6, 7, 8)),
    *((johnson_graph(s, 3), [1, 2, 3], [1, 2, 3]) for s in (7, 8, 9)),
]


@pytest.mark.slow
@pytest.mark.parametrize(
    ("g", "psi", "tau"), GEOMETRY_GRID, ids=[g.label for g, _, _ in GEOMETRY_GRID]
)
def test_family_geometry(g, psi, tau, drg_data):
    arr, profile = drg_data(g)
    geometry = detect_clique_geometry(g, arr, profile)
    assert geometry.is_geometric
    assert geometry.m == arr.d
    assert geometry.psi == psi
    assert geometry.tau == tau
    assert all(r.holds for r in verify_geometric_identities(geometry, arr))
    array_level = geometry_from_array(arr, profile)
    assert (array_level.psi, array_level.tau) == (psi, tau)
