"""Intermediate statements used by the Hamming pipeline and the case analysis.

Each function checks its hypotheses first and returns a skipped report when
they do not apply; a failed conclusion under holding hypotheses is reported,
never raised.
"""

import logging

from src.classifier.base import mismatch_flag
from src.core.graph import Graph
from src.core.search import MAX_BIPARTITE_PRODUCT, find_induced_complete_bipartite
from src.schemas.models import (
    ClassifierConfig,
    CliqueGeometryReport,
    DichotomyReport,
    Flag,
    IntersectionArray,
    InequalityReport,
    SpectralProfile,
)

logger = logging.getLogger(__name__)

GAMMA_PRIME_NOTE = "gamma_d' (non-geometric or m > m_d) has no known value and is omitted"


def at_most(lhs: float, rhs: float, tol: float) -> bool:
    """lhs <= rhs up to ``tol`` relative to max(1, |lhs|, |rhs|)."""
    return lhs - rhs <= tol * max(1.0, abs(lhs), abs(rhs))


def largest_small_c(arr: IntersectionArray, epsilon: float, tol: float = 0.0) -> int | None:
    """Largest t with c_t <= eps k (c is non-decreasing, so a prefix)."""
    bound = epsilon * arr.k
    found = None
    for t in range(1, arr.d + 1):
        if at_most(arr.c_at(t), bound, tol):
            found = t
    return found


def first_thin_layer(
    arr: IntersectionArray, epsilon: float, tol: float = 0.0, start: int = 1
) -> int | None:
    """First t >= ``start`` with c_t <= eps k and b_t <= eps k."""
    bound = epsilon * arr.k
    for t in range(start, arr.d + 1):
        if at_most(arr.c_at(t), bound, tol) and at_most(arr.b_at(t), bound, tol):
            return t
    return None


def first_distinguishing_layer(
    arr: IntersectionArray, epsilon: float, tol: float = 0.0
) -> int | None:
    """First j in 1..d-1 with b_j >= eps k and c_{j+1} >= eps k."""
    bound = epsilon * arr.k
    for j in range(1, arr.d):
        if at_most(bound, arr.b_at(j), tol) and at_most(bound, arr.c_at(j + 1), tol):
            return j
    return None


def induced_bipartite_bound(profile: SpectralProfile, s: int, t: int) -> InequalityReport:
    """An induced K_{s,t} forces 2st / (s + t) <= b+ + 1."""
    name = f"2st/(s+t)<=b++1 [K_{s},{t}]"
    if profile.b_plus is None:
        return InequalityReport.skipped(name, "b+ undefined", {"s": s, "t": t})
    return InequalityReport.compare(
        name,
        2 * s * t / (s + t),
        "<=",
        profile.b_plus + 1,
        {"s": s, "t": t, "b_plus": profile.b_plus},
    )


def bipartite_witness_bounds(
    g: Graph, profile: SpectralProfile, shapes: list[tuple[int, int]]
) -> list[InequalityReport]:
    """induced_bipartite_bound on every K_{s,t} shape that occurs induced in ``g``."""
    reports = []
    for s, t in shapes:
        found = find_induced_complete_bipartite(g, s, t)
        if found is None:
            continue
        report = induced_bipartite_bound(profile, s, t)
        side_a, side_b = found
        report.witness.update({"A": ",".join(map(str, side_a)), "B": ",".join(map(str, side_b))})
        reports.append(report)
    return reports


def mu_eigen_gate(
    geometry: CliqueGeometryReport,
    profile: SpectralProfile,
    arr: IntersectionArray,
    graph: Graph | None = None,
) -> list[InequalityReport]:
    """With disconnected local graphs and mu >= 3, theta_1 + 1 <= 5 b_1 / 7.

    The gate report comes first. Given ``graph``, an induced C4 and an induced
    K_{tau_2,2} are searched for, and 2st / (s + t) <= b+ + 1 is evaluated on
    each one found, whether or not the gate applies.
    """
    extra: list[InequalityReport] = []
    if graph is not None:
        shapes = [(2, 2)]
        tau2 = geometry.tau2 if geometry.is_geometric else None
        if tau2 is not None and tau2 > 2 and 2 * tau2 <= MAX_BIPARTITE_PRODUCT:
            shapes.append((tau2, 2))
        extra = bipartite_witness_bounds(graph, profile, shapes)
    return [_mu_gate(geometry, profile, arr), *extra]


def _mu_gate(
    geometry: CliqueGeometryReport, profile: SpectralProfile, arr: IntersectionArray
) -> InequalityReport:
    name = "theta1+1<=5b1/7"
    witness = {"mu": arr.mu, "psi1": geometry.psi1}
    if not geometry.is_geometric or geometry.psi1 != 1:
        note = "needs disconnected local graphs (psi_1 = 1)"
        return InequalityReport.skipped(name, note, witness)
    if arr.mu < 3:
        return InequalityReport.skipped(name, f"needs mu >= 3, got mu = {arr.mu}", witness)
    b1 = arr.b_at(1)
    return InequalityReport.compare(
        name,
        profile.theta1 + 1,
        "<=",
        5 * b1 / 7,
        {**witness, "theta1": profile.theta1, "b1": b1},
        note=f"induced K_{{{geometry.tau2},2}} from psi_1 = 1",
    )


def tau_monotonicity(
    geometry: CliqueGeometryReport,
    arr: IntersectionArray,
    epsilon: float,
    tol: float = 0.0,
) -> list[InequalityReport]:
    """tau_i < tau_{i+1} for i <= t - 2, where t is the largest index with c_t <= eps k.

    When t = d the bands (d - i)(1/m - eps) k <= b_i <= (m - i) k / m for
    1 <= i <= d - 1 are appended.
    """
    name = "tau strictly increasing"
    m = geometry.m
    if not geometry.is_geometric or m is None:
        return [InequalityReport.skipped(name, "not geometric")]
    if arr.mu < 2:
        return [InequalityReport.skipped(name, f"needs mu >= 2, got mu = {arr.mu}")]
    if not epsilon < 1 / m**2:
        return [InequalityReport.skipped(name, f"needs eps < 1/m^2 = {1 / m**2:.6g}")]
    t = largest_small_c(arr, epsilon, tol)
    if t is None:
        return [InequalityReport.skipped(name, f"no t with c_t <= eps k = {epsilon * arr.k:.6g}")]

    tau = geometry.tau
    broken = [i for i in range(1, t - 1) if not tau[i - 1] < tau[i]]
    reports = [
        InequalityReport.flag(
            name,
            not broken,
            note="vacuous for t <= 2" if t <= 2 else (f"fails at i={broken}" if broken else None),
            t=t,
            tau=", ".join(map(str, tau)),
        )
    ]
    if t == arr.d:
        k, d = arr.k, arr.d
        for i in range(1, d):
            b_i = arr.b_at(i)
            reports.append(
                InequalityReport.compare(
                    f"b[{i}]>=(d-i)(1/m-eps)k", b_i, ">=", (d - i) * (1 / m - epsilon) * k,
                    {"i": i}, tol=tol,
                )
            )
            reports.append(
                InequalityReport.compare(
                    f"b[{i}]<=(m-i)k/m", b_i, "<=", (m - i) * k / m, {"i": i}, tol=tol
                )
            )
    return reports


def standard_sequence_lower_bounds(
    profile: SpectralProfile,
    geometry: CliqueGeometryReport,
    arr: IntersectionArray,
    epsilon: float,
    t: int,
    tol: float = 0.0,
) -> list[InequalityReport]:
    """u_j >= (1 - 3 m^2 eps)^(j-1) (m - tau_j) / (m - tau_j + j - 1) theta_1 / k for 1 <= j < t."""
    name = "standard sequence lower bounds"
    m, k = geometry.m, arr.k
    if not geometry.is_geometric or m is None:
        return [InequalityReport.skipped(name, "not geometric")]
    if not 2 <= t <= arr.d:
        return [InequalityReport.skipped(name, f"needs 2 <= t <= d, got t = {t}")]
    reasons = []
    if arr.mu < 2:
        reasons.append(f"mu = {arr.mu} < 2")
    b1 = arr.b_at(1)
    if not at_most((1 - epsilon) * b1, profile.theta1, tol):
        reasons.append("theta_1 < (1 - eps) b_1")
    if not at_most(arr.c_at(t), epsilon * k, tol):
        reasons.append(f"c_{t} = {arr.c_at(t)} > eps k")
    if not epsilon < 1 / (24 * m * m):
        reasons.append(f"eps >= 1/(24 m^2) = {1 / (24 * m * m):.6g}")
    if reasons:
        return [InequalityReport.skipped(name, "; ".join(reasons), {"t": t})]

    u = profile.standard_sequences[1]
    theta1 = profile.theta1
    reports = []
    for j in range(1, t):
        tau_j = geometry.tau[j - 1]
        rhs = (1 - 3 * m * m * epsilon) ** (j - 1) * (m - tau_j) / (m - tau_j + j - 1) * theta1 / k
        reports.append(
            InequalityReport.compare(
                f"u[{j}]>=bound", u[j], ">=", rhs, {"j": j, "tau": tau_j}, tol=tol
            )
        )
    return reports


def multiplicity_dichotomy(
    profile: SpectralProfile,
    geometry: CliqueGeometryReport,
    arr: IntersectionArray,
    epsilon: float,
    t: int | None = None,
    tol: float = 0.0,
) -> DichotomyReport:
    """Either f_1 <= k - 1, or m = d, t = d and c_d = d.

    ``t`` defaults to the first index in 2..d with c_t and b_t at most eps k.
    """
    d, k, m = arr.d, arr.k, geometry.m
    if t is None:
        t = first_thin_layer(arr, epsilon, tol, start=2)
    bound = epsilon * k
    checklist = [
        InequalityReport.flag("geometric", geometry.is_geometric and m is not None, m=m),
        InequalityReport.compare("d>=2", d, ">=", 2),
        InequalityReport.compare("mu>=2", arr.mu, ">=", 2),
    ]
    if t is None or not 2 <= t <= d:
        checklist.append(InequalityReport.flag("c_t,b_t<=eps k", False, note="no such t in 2..d"))
    else:
        checklist.append(
            InequalityReport.compare(f"c[{t}]<=eps k", arr.c_at(t), "<=", bound, {"t": t}, tol=tol)
        )
        checklist.append(
            InequalityReport.compare(f"b[{t}]<=eps k", arr.b_at(t), "<=", bound, {"t": t}, tol=tol)
        )
    if d >= 2:
        b1 = arr.b_at(1)
        checklist.append(
            InequalityReport.compare(
                "theta1>=(1-eps)b1", profile.theta1, ">=", (1 - epsilon) * b1, {"b1": b1}, tol=tol
            )
        )
    if m is not None:
        checklist.append(
            InequalityReport.compare("eps<1/(6m^4 d)", epsilon, "<", 1 / (6 * m**4 * d), {"m": m})
        )
    hypotheses_hold = all(r.holds for r in checklist)

    f1 = profile.multiplicity_values[1] if d >= 1 else 0.0
    if at_most(f1, k - 1, 1e-9):
        branch = "f1<=k-1"
    elif m == d and t == d and arr.c_at(d) == d:
        branch = "exceptional"
    else:
        branch = "neither"
    flags: list[Flag] = []
    if branch == "neither" and hypotheses_hold:
        flags.append(
            mismatch_flag(
                geometry,
                f"multiplicity dichotomy fails for {arr.describe()}: f1 = {f1:.6g}, k = {k}, "
                f"m = {m}, t = {t}, c_d = {arr.c_at(d)}",
            )
        )
    logger.debug(f"[Lemmas] {arr.describe()}: f1={f1:.6g}, branch={branch}, hold={hypotheses_hold}")
    return DichotomyReport(
        hypotheses_hold=hypotheses_hold,
        checklist=checklist,
        t=t,
        f1=f1,
        k=k,
        branch=branch,
        flags=flags,
    )


def gamma_d(config: ClassifierConfig, d: int) -> float:
    """min(eta/4, eps/d, 2/N_d, 1/16) over the case fractions with known values."""
    return min(config.eta_d / 4, config.epsilon / d, 2 / config.n_d(d), 1 / 16)
