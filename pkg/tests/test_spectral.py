from fractions import Fraction
from math import sqrt

import networkx as nx
import numpy as np
import pytest

from src.core.generators import complete_graph, hamming_graph, johnson_graph, spec_label
from src.drg.params import check_distance_regular, closed_form_array, hamming_array, johnson_array
from src.schemas.models import GeneratorSpec, GraphFamily, IntersectionArray
from src.spectral.constants import epsilon_star, solve_vartheta, vartheta_polynomial
from src.spectral.eigen import (
    _solve,
    biggs_multiplicity,
    closed_form_spectrum,
    eigen_solve,
    feasibility_check,
    intersection_matrix,
    is_feasible,
    local_eigenvalue_bounds,
    standard_sequence,
    theta1_is_b1_minus_one,
)

ICOSAHEDRON = IntersectionArray(d=3, b=[5, 2, 1], c=[1, 2, 5])


@pytest.mark.parametrize(
    ("arr", "eigenvalues", "multiplicities"),
    [
        (johnson_array(5, 2), [6, 1, -2], [1, 4, 5]),
        (hamming_array(2, 3), [4, 1, -2], [1, 4, 4]),
        (IntersectionArray(d=2, b=[3, 2], c=[1, 1]), [3, 1, -2], [1, 5, 4]),
        (hamming_array(3, 2), [3, 1, -1, -3], [1, 3, 3, 1]),
    ],
    ids=["J(5,2)", "H(2,3)", "Petersen", "cube"],
)
def test_eigen_solve(arr, eigenvalues, multiplicities):
    profile = eigen_solve(arr)
    assert profile.eigenvalues == pytest.approx(eigenvalues)
    assert profile.multiplicities == multiplicities
    assert all(profile.integral_flags)
    assert max(profile.multiplicity_residuals) < 1e-9


def test_eigen_solve_is_cached_per_array():
    _solve.cache_clear()
    first = eigen_solve(ICOSAHEDRON)
    first.eigenvalues.clear()
    again = eigen_solve(IntersectionArray(d=3, b=[5, 2, 1], c=[1, 2, 5]))
    assert _solve.cache_info().hits == 1
    assert len(again.eigenvalues) == 4


def test_spectrum_matches_networkx(j52, as_nx):
    values = sorted(np.linalg.eigvalsh(nx.to_numpy_array(as_nx(j52))), reverse=True)
    profile = eigen_solve(johnson_array(5, 2))
    distinct = [values[0], values[1], values[-1]]
    assert distinct == pytest.approx(profile.eigenvalues, abs=1e-9)


def test_irrational_eigenvalues_are_not_snapped():
    profile = eigen_solve(ICOSAHEDRON)
    assert profile.eigenvalues == pytest.approx([5, sqrt(5), -1, -sqrt(5)])
    assert profile.integral_flags == [True, False, True, False]
    assert profile.multiplicities == [1, 3, 5, 3]


def test_intersection_matrix_layout():
    mat = intersection_matrix(hamming_array(2, 3))
    assert mat.tolist() == [[0, 4, 0], [1, 1, 2], [0, 2, 2]]


def test_standard_sequence_is_exact_for_integers():
    u = standard_sequence(hamming_array(2, 3), 1)
    assert u == [Fraction(1), Fraction(1, 4), Fraction(-1, 2)]
    assert biggs_multiplicity(hamming_array(2, 3), 1) == Fraction(4)


def test_standard_sequence_of_theta0_is_all_ones():
    arr = johnson_array(7, 3)
    assert standard_sequence(arr, arr.k) == [1, 1, 1, 1]


def test_profile_derived_quantities():
    profile = eigen_solve(hamming_array(2, 3))
    assert profile.b_plus == pytest.approx(1.0)
    assert profile.b_minus == pytest.approx(-2.0)
    assert profile.xi == pytest.approx(2.0)
    assert profile.theta1 == pytest.approx(1.0)
    assert profile.theta_min == pytest.approx(-2.0)


@pytest.mark.parametrize(
    "spec",
    [
        GeneratorSpec(family=GraphFamily.JOHNSON, s=9, d=3),
        GeneratorSpec(family=GraphFamily.HAMMING, s=4, d=3),
    ],
    ids=["J(9,3)", "H(3,4)"],
)
def test_closed_form_spectrum_agrees_with_the_solver(spec):
    closed = closed_form_spectrum(spec)
    solved = eigen_solve(closed_form_array(spec))
    assert closed.eigenvalues == pytest.approx(solved.eigenvalues)
    assert closed.multiplicities == solved.multiplicities


def test_feasibility_of_a_real_array():
    reports = feasibility_check(johnson_array(5, 2))
    assert [r.name for r in reports] == [
        "layer sizes integral",
        "multiplicities positive integers",
        "sum f_j = n",
    ]
    assert all(r.holds for r in reports)
    assert is_feasible(johnson_array(5, 2))


def test_irrational_multiplicities_are_infeasible():
    arr = IntersectionArray(d=2, b=[3, 2], c=[1, 2])
    reports = {r.name: r for r in feasibility_check(arr)}
    assert reports["layer sizes integral"].holds
    assert not reports["multiplicities positive integers"].holds
    assert reports["sum f_j = n"].holds
    assert not is_feasible(arr)


def test_fractional_layers_are_infeasible():
    reports = feasibility_check(IntersectionArray(d=2, b=[4, 1], c=[1, 3]))
    assert not reports[0].holds


def test_local_bounds_on_johnson(j52):
    low, second = local_eigenvalue_bounds(j52, eigen_solve(johnson_array(5, 2)))
    assert low.holds and second.holds
    assert low.lhs == pytest.approx(-2.0)
    assert low.rhs == pytest.approx(-2.0)
    assert second.lhs == pytest.approx(1.0)
    assert second.rhs == pytest.approx(1.0)


def test_local_bounds_skip_complete_graphs():
    k5 = complete_graph(5)
    reports = local_eigenvalue_bounds(k5, eigen_solve(check_distance_regular(k5)))
    assert all(not r.applicable for r in reports)


@pytest.mark.parametrize(
    ("arr", "expected"),
    [
        (hamming_array(3, 5), True),
        (johnson_array(5, 2), True),
        (IntersectionArray(d=2, b=[3, 2], c=[1, 1]), True),
        (johnson_array(8, 3), True),
        (IntersectionArray(d=3, b=[2, 1, 1], c=[1, 1, 1]), False),
        (ICOSAHEDRON, False),
    ],
)
def test_theta1_is_b1_minus_one(arr, expected):
    assert theta1_is_b1_minus_one(arr, eigen_solve(arr)) is expected


# Constants


def test_vartheta_root():
    constants = solve_vartheta()
    assert constants.vartheta_1 == pytest.approx(-2.0065936, abs=1e-6)
    assert constants.epsilon_star == pytest.approx(0.0065504, abs=1e-6)
    assert constants.residual < 1e-8
    assert constants.limit == pytest.approx(-1 - sqrt(2))
    assert vartheta_polynomial(-2.0) == -1


def test_epsilon_star_is_cached():
    assert epsilon_star() == epsilon_star() == pytest.approx(solve_vartheta().epsilon_star)


def test_vartheta_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        solve_vartheta(tolerance=0)


FAMILY_SPECS = [
    *(
        GeneratorSpec(family=GraphFamily.JOHNSON, s=s, d=d)
        for d in (2, 3, 4)
        for s in range(2 * d + 1, 13)
    ),
    *(GeneratorSpec(family=GraphFamily.HAMMING, s=s, d=d) for d in (2, 3, 4) for s in range(2, 9)),
]


@pytest.mark.parametrize("spec", FAMILY_SPECS, ids=spec_label)
def test_family_spectra(spec):
    closed = closed_form_spectrum(spec)
    solved = eigen_solve(closed_form_array(spec))
    assert solved.eigenvalues == pytest.approx(closed.eigenvalues, abs=1e-9)
    assert all(solved.integral_flags)
    assert solved.multiplicities == closed.multiplicities
    assert max(solved.multiplicity_residuals) < 1e-6


SMALL_FAMILY_GRAPHS = [
    *((johnson_graph, s, 2) for s in range(5, 10)),
    *((johnson_graph, s, 3) for s in range(7, 10)),
    *((hamming_graph, 2, s) for s in range(2, 9)),
    *((hamming_graph, 3, s) for s in range(2, 7)),
    *((hamming_graph, 4, s) for s in range(2, 5)),
]


@pytest.mark.slow
@pytest.mark.parametrize(("build", "x", "y"), SMALL_FAMILY_GRAPHS)
def test_local_bounds_hold_on_families(build, x, y):
    g = build(x, y)
    assert g.n <= 300
    reports = local_eigenvalue_bounds(g, eigen_solve(check_distance_regular(g)))
    assert all(r.holds for r in reports)
