"""Eigen-theory of the intersection matrix.

Eigenvalues come from the symmetric tridiagonal matrix similar to L_1 under
the diagonal scaling by sqrt(k_i). Standard sequences and Biggs
multiplicities are exact (Fraction) when the eigenvalue is an integer.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb, sqrt

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from src.config import get_settings
from src.core.graph import Graph, neighborhood_subgraph
from src.drg.params import hamming_array, johnson_array
from src.errors import InfeasibleArrayError, ParameterError
from src.schemas.models import (
    GeneratorSpec,
    GraphFamily,
    IntersectionArray,
    InequalityReport,
    SpectralProfile,
)

logger = logging.getLogger(__name__)

Number = Fraction | float


def intersection_matrix(arr: IntersectionArray) -> np.ndarray:
    """Tridiagonal L_1: subdiagonal c_i, diagonal a_i, superdiagonal b_i."""
    d = arr.d
    mat = np.zeros((d + 1, d + 1), dtype=np.int64)
    for i, a_i in enumerate(arr.a):
        mat[i, i] = a_i
        if i >= 1:
            mat[i, i - 1] = arr.c_at(i)
        if i < d:
            mat[i, i + 1] = arr.b_at(i)
    return mat


def standard_sequence(arr: IntersectionArray, theta: Number | int) -> list[Number]:
    """u_0(theta) .. u_d(theta) from c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i."""
    if isinstance(theta, int):
        theta = Fraction(theta)
    u: list[Number] = [Fraction(1) if isinstance(theta, Fraction) else 1.0]
    u.append(theta / arr.k)
    a = arr.a
    for i in range(1, arr.d):
        u.append(((theta - a[i]) * u[i] - arr.c_at(i) * u[i - 1]) / arr.b_at(i))
    return u


def biggs_multiplicity(arr: IntersectionArray, theta: Number | int) -> Number:
    """f(theta) = n / sum_i k_i u_i(theta)^2."""
    u = standard_sequence(arr, theta)
    sizes = arr.layer_fractions()
    if isinstance(u[0], Fraction):
        norm = sum((s * x * x for s, x in zip(sizes, u, strict=True)), Fraction(0))
        return arr.n_fraction() / norm
    norm = sum(float(s) * float(x) ** 2 for s, x in zip(sizes, u, strict=True))
    return float(arr.n_fraction()) / norm


def _snap(values: list[float], tol: float) -> tuple[list[Number], list[bool]]:
    snapped: list[Number] = []
    flags: list[bool] = []
    for value in values:
        nearest = round(value)
        if abs(value - nearest) < tol:
            snapped.append(Fraction(nearest))
            flags.append(True)
        else:
            snapped.append(float(value))
            flags.append(False)
    return snapped, flags


def _profile(arr: IntersectionArray, thetas: list[Number], flags: list[bool]) -> SpectralProfile:
    sequences = [standard_sequence(arr, theta) for theta in thetas]
    raw = [float(biggs_multiplicity(arr, theta)) for theta in thetas]
    rounded = [round(f) for f in raw]
    residuals = [abs(f - r) for f, r in zip(raw, rounded, strict=True)]
    d = arr.d
    b_plus = b_minus = None
    if d >= 2:
        b1 = arr.b_at(1)
        theta1, theta_d = float(thetas[1]), float(thetas[-1])
        b_plus = b1 / (theta1 + 1) if theta1 != -1 else None
        b_minus = b1 / (theta_d + 1) if theta_d != -1 else None
    xi = max(abs(float(thetas[1])), abs(float(thetas[-1])))
    return SpectralProfile(
        eigenvalues=[float(t) for t in thetas],
        multiplicities=rounded,
        multiplicity_values=raw,
        multiplicity_residuals=residuals,
        standard_sequences=[[float(x) for x in seq] for seq in sequences],
        b_plus=b_plus,
        b_minus=b_minus,
        xi=xi,
        integral_flags=flags,
    )


def eigen_solve(
    arr: IntersectionArray, snap_tol: float | None = None, distinct_tol: float | None = None
) -> SpectralProfile:
    """Spectrum, standard sequences and Biggs multiplicities of ``arr``.

    Profiles are cached on the array key and tolerances; callers get a copy.

    Raises:
        InfeasibleArrayError: two eigenvalues closer than ``distinct_tol``
    """
    settings = get_settings()
    snap_tol = settings.snap_tol if snap_tol is None else snap_tol
    distinct_tol = settings.distinct_tol if distinct_tol is None else distinct_tol
    return _solve(arr.key(), snap_tol, distinct_tol).model_copy(deep=True)


@lru_cache(maxsize=4096)
def _solve(
    key: tuple[tuple[int, ...], tuple[int, ...]], snap_tol: float, distinct_tol: float
) -> SpectralProfile:
    b, c = key
    arr = IntersectionArray(d=len(b), b=list(b), c=list(c))
    diagonal = np.array(arr.a, dtype=float)
    # sqrt(k_i) scaling turns b_i, c_{i+1} into the symmetric pair sqrt(b_i c_{i+1})
    off = np.array([sqrt(arr.b_at(i) * arr.c_at(i + 1)) for i in range(arr.d)], dtype=float)
    values = eigvalsh_tridiagonal(diagonal, off)[::-1].tolist()
    gaps = [values[i] - values[i + 1] for i in range(len(values) - 1)]
    if any(gap < distinct_tol for gap in gaps):
        raise InfeasibleArrayError(f"{arr.describe()}: repeated eigenvalue in {values}")

    thetas, flags = _snap(values, snap_tol)
    profile = _profile(arr, thetas, flags)
    logger.debug(
        f"[Spectral] {arr.describe()}: theta={profile.eigenvalues}, f={profile.multiplicity_values}"
    )
    return profile


def closed_form_spectrum(spec: GeneratorSpec) -> SpectralProfile:
    """Exact family spectrum: Johnson (d-j)(s-d-j)-j, Hamming d(s-1)-js."""
    if spec.family == GraphFamily.JOHNSON:
        s, d = spec.s, spec.d
        arr = johnson_array(s, d)
        thetas = [(d - j) * (s - d - j) - j for j in range(d + 1)]
        mults = [comb(s, j) - (comb(s, j - 1) if j >= 1 else 0) for j in range(d + 1)]
    elif spec.family == GraphFamily.HAMMING:
        s, d = spec.s, spec.d
        arr = hamming_array(d, s)
        thetas = [d * (s - 1) - j * s for j in range(d + 1)]
        mults = [comb(d, j) * (s - 1) ** j for j in range(d + 1)]
    else:
        raise ParameterError(f"no closed-form spectrum for family {spec.family.value}")
    profile = _profile(arr, [Fraction(t) for t in thetas], [True] * (d + 1))
    return profile.model_copy(
        update={
            "multiplicities": mults,
            "multiplicity_values": [float(f) for f in mults],
            "multiplicity_residuals": [0.0] * (d + 1),
        }
    )


def feasibility_check(
    arr: IntersectionArray, snap_tol: float | None = None
) -> list[InequalityReport]:
    """Integrality of layer sizes and Biggs multiplicities, and sum f_j = n."""
    snap_tol = get_settings().snap_tol if snap_tol is None else snap_tol
    reports: list[InequalityReport] = []
    sizes = arr.layer_fractions()
    reports.append(
        InequalityReport.flag(
            "layer sizes integral",
            all(s.denominator == 1 for s in sizes),
            k_i=", ".join(str(s) for s in sizes),
        )
    )
    try:
        profile = eigen_solve(arr, snap_tol=snap_tol)
    except InfeasibleArrayError as e:
        reports.append(InequalityReport.flag("distinct eigenvalues", False, note=str(e)))
        return reports

    bad = [
        j
        for j, (f, r) in enumerate(
            zip(profile.multiplicity_values, profile.multiplicity_residuals, strict=True)
        )
        if r >= snap_tol or round(f) < 1
    ]
    reports.append(
        InequalityReport.flag(
            "multiplicities positive integers",
            not bad,
            note=f"non-integral at j={bad}" if bad else None,
            f=", ".join(f"{f:.9g}" for f in profile.multiplicity_values),
        )
    )
    n = float(arr.n_fraction())
    reports.append(
        InequalityReport.compare(
            "sum f_j = n", sum(profile.multiplicity_values), "==", n, {"n": n}, tol=snap_tol
        )
    )
    return reports


def is_feasible(arr: IntersectionArray) -> bool:
    return all(r.holds for r in feasibility_check(arr))


def local_eigenvalue_bounds(g: Graph, profile: SpectralProfile) -> list[InequalityReport]:
    """Neighbourhood spectra against -1 - b+ (smallest) and -1 - b- (second largest)."""
    names = ("local min eigenvalue >= -1-b+", "local second eigenvalue <= -1-b-")
    k = g.regular_degree()
    if profile.b_plus is None or profile.b_minus is None or not k or k < 2:
        return [InequalityReport.skipped(name, "needs diameter >= 2 and k >= 2") for name in names]

    lowest, lowest_at = float("inf"), -1
    second, second_at = float("-inf"), -1
    for v in range(g.n):
        local = neighborhood_subgraph(g, v).graph
        spectrum = np.linalg.eigvalsh(local.adjacency_matrix().astype(float))
        if spectrum[0] < lowest:
            lowest, lowest_at = float(spectrum[0]), v
        if spectrum[-2] > second:
            second, second_at = float(spectrum[-2]), v
    return [
        InequalityReport.compare(
            names[0], lowest, ">=", -1 - profile.b_plus, {"vertex": lowest_at}, tol=1e-6
        ),
        InequalityReport.compare(
            names[1], second, "<=", -1 - profile.b_minus, {"vertex": second_at}, tol=1e-6
        ),
    ]


def theta1_is_b1_minus_one(
    arr: IntersectionArray, profile: SpectralProfile, tol: float = 1e-6
) -> bool:
    """Equality case theta_1 = b_1 - 1 (holds for every Hamming array)."""
    return arr.d >= 2 and abs(profile.theta1 - (arr.b_at(1) - 1)) < tol
