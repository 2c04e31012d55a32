from math import log

import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from src.core.generators import cycle_graph, hamming_graph, johnson_graph
from src.core.graph import Graph
from src.drg.params import check_distance_regular, hamming_array, johnson_array
from src.errors import ParameterError
from src.motion.automorphisms import automorphism_group, enumerate_automorphisms
from src.motion.bounds import (
    array_motion_bounds,
    best_distinguishing_bound,
    distinguishing_bound,
    dual_motion_transfer,
    exact_motion,
    max_common_neighbours,
    mixing_lemma_bound,
    thickness_bound,
)
from src.spectral.eigen import eigen_solve

RIGID_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)]


@pytest.mark.parametrize(
    ("name", "motion", "order"),
    [("j52", 6, 120), ("h23", 6, 72), ("petersen", 6, 120), ("h24", 8, 1152)],
)
def test_exact_motion(name, motion, order, request):
    report = exact_motion(request.getfixturevalue(name))
    assert report.exact_motion == motion
    assert report.group_order == order
    assert not report.rigid
    assert not report.truncated
    assert report.thickness_bound == pytest.approx(3 * log(report.n) * report.n / motion)


@pytest.mark.slow
def test_exact_motion_of_a_larger_johnson_graph():
    report = exact_motion(johnson_graph(8, 2))
    assert report.group_order == 40320
    assert report.exact_motion == 12


@pytest.mark.parametrize(
    ("graph", "motion", "order"),
    [
        pytest.param(johnson_graph(6, 2), 8, 720, id="J(6,2)"),
        pytest.param(johnson_graph(7, 2), 10, 5040, id="J(7,2)", marks=pytest.mark.slow),
        pytest.param(hamming_graph(2, 5), 10, 28800, id="H(2,5)", marks=pytest.mark.slow),
    ],
)
def test_exact_motion_of_family_members(graph, motion, order):
    report = exact_motion(graph)
    assert report.group_order == order
    assert report.exact_motion == motion


# C_n has the dihedral group; a reflection fixes two vertices when n is even, one when odd
@pytest.mark.parametrize("n", range(3, 13))
def test_cycles_have_dihedral_groups(n):
    g = cycle_graph(n)
    assert automorphism_group(g).order == 2 * n
    assert exact_motion(g).exact_motion == (n - 2 if n % 2 == 0 else n - 1)


def test_square_has_seven_non_identity_automorphisms():
    found, truncated = enumerate_automorphisms(cycle_graph(4), 100)
    assert not truncated
    assert len(found) == 7
    assert sorted(a.support for a in found) == [2, 2, 4, 4, 4, 4, 4]


@pytest.mark.parametrize("name", ["petersen", "shrikhande", "octahedron"])
def test_group_order_matches_networkx(name, request, as_nx):
    g = request.getfixturevalue(name)
    graph = as_nx(g)
    expected = sum(1 for _ in GraphMatcher(graph, graph).isomorphisms_iter())
    assert automorphism_group(g).order == expected


def test_rigid_graph():
    g = Graph.from_edges(6, RIGID_EDGES)
    report = exact_motion(g)
    assert report.rigid
    assert report.group_order == 1
    assert report.exact_motion is None
    assert enumerate_automorphisms(g, 10) == ([], False)


def test_enumeration_is_capped(petersen):
    found, truncated = enumerate_automorphisms(petersen, 10)
    assert truncated
    assert len(found) == 10
    for element in found:
        p = element.perm
        assert all(petersen.has_edge(p[u], p[v]) for u, v in petersen.edges())
        assert element.support > 0


def test_enumeration_lists_every_non_identity_element(h23):
    found, truncated = enumerate_automorphisms(h23, 1000)
    assert not truncated
    assert len(found) == 71
    assert len({a.perm for a in found}) == 71
    assert min(a.support for a in found) == 6


def test_truncated_motion_reports_an_upper_bound(h24):
    report = exact_motion(h24, max_group=50)
    assert report.truncated
    assert report.exact_motion is None
    assert report.upper_bound is not None and report.upper_bound >= 8


# Bounds


def test_mixing_lemma_bound():
    assert mixing_lemma_bound(28, 12, 4, 6) == pytest.approx(14 / 3)
    assert mixing_lemma_bound(10, 3, 2, 2) == 0
    with pytest.raises(ParameterError):
        mixing_lemma_bound(10, 0, 1, 1)


def test_max_common_neighbours(j52, petersen):
    assert max_common_neighbours(j52) == 4
    assert max_common_neighbours(petersen) == 1


def test_distinguishing_bound():
    arr = johnson_array(8, 2)
    bound = distinguishing_bound(arr, 1 / 3, 1)
    assert bound.applicable
    assert bound.value == pytest.approx(14 / 3)
    assert bound.unchecked_hypotheses == ["primitive"]
    too_big = distinguishing_bound(arr, 0.5, 1)
    assert not too_big.applicable
    assert too_big.value == 0
    with pytest.raises(ParameterError):
        distinguishing_bound(arr, 0.5, 2)
    with pytest.raises(ParameterError):
        distinguishing_bound(arr, 0, 1)


def test_best_distinguishing_bound():
    best = best_distinguishing_bound(hamming_array(3, 3))
    # alpha_1 = min(4, 2) / 6, alpha_2 = min(2, 3) / 6, both give n / 9
    assert best.value == pytest.approx(27 / 9)
    assert best_distinguishing_bound(hamming_array(1, 5)) is None


def test_array_motion_bounds():
    arr = johnson_array(8, 2)
    bounds = {b.name: b for b in array_motion_bounds(arr, eigen_solve(arr))}
    assert bounds["mixing"].value == pytest.approx(14 / 3)
    assert bounds["distinguishing[j=1]"].value == pytest.approx(14 / 3)


def test_dual_transfer_and_thickness():
    assert dual_motion_transfer(0.4) == pytest.approx(0.2)
    with pytest.raises(ParameterError):
        dual_motion_transfer(1.5)
    assert thickness_bound(100, 0.5) == pytest.approx(6 * log(100))
    with pytest.raises(ParameterError):
        thickness_bound(1, 0.5)
    with pytest.raises(ParameterError):
        thickness_bound(100, 0)


def test_exact_motion_collects_bounds(h23, drg_data):
    arr, profile = drg_data(h23)
    report = exact_motion(h23, arr=arr, profile=profile)
    names = [b.name for b in report.bounds]
    assert names == ["mixing", "distinguishing[j=1]"]
    assert all(b.value <= report.exact_motion for b in report.bounds)


@pytest.mark.parametrize(
    "graph",
    [
        pytest.param(johnson_graph(5, 2), id="J(5,2)"),
        pytest.param(hamming_graph(2, 3), id="H(2,3)"),
        pytest.param(hamming_graph(2, 4), id="H(2,4)"),
        pytest.param(johnson_graph(8, 2), id="J(8,2)", marks=pytest.mark.slow),
    ],
)
def test_bounds_never_exceed_exact_motion(graph):
    arr = check_distance_regular(graph)
    report = exact_motion(graph, arr=arr, profile=eigen_solve(arr))
    assert report.bounds
    assert all(b.value <= report.exact_motion for b in report.bounds)
