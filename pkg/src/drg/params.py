"""Distance-regularity detection, intersection numbers and parameter inequalities."""

import logging
from fractions import Fraction

import numpy as np

from src.core.graph import Graph, distance_matrix, is_connected
from src.errors import (
    InfeasibleArrayError,
    NotConnectedError,
    NotDistanceRegularError,
    NotRegularError,
    ParameterError,
)
from src.schemas.models import GeneratorSpec, GraphFamily, IntersectionArray, InequalityReport

logger = logging.getLogger(__name__)


def check_distance_regular(g: Graph) -> IntersectionArray:
    """Read the intersection array off ``g``, verifying every vertex pair.

    Raises:
        NotConnectedError: with (0, first unreachable vertex)
        NotRegularError: with (0, first vertex of different degree)
        NotDistanceRegularError: with the first (v, w) whose counts deviate
    """
    if g.n < 2:
        raise ParameterError("distance-regularity needs at least two vertices")
    if not is_connected(g):
        dist0 = distance_matrix(g)[0]
        w = int(np.flatnonzero(dist0 < 0)[0])
        raise NotConnectedError(f"graph is not connected: 0 cannot reach {w}", pair=(0, w))
    k = g.regular_degree()
    if k is None:
        w = next(v for v in range(g.n) if g.degree(v) != g.degree(0))
        raise NotRegularError(
            f"graph is not regular: deg(0)={g.degree(0)}, deg({w})={g.degree(w)}", pair=(0, w)
        )

    dist = distance_matrix(g)
    diam = int(dist.max())
    nbr = np.asarray(g.adjacency, dtype=np.int64)

    def counts(v: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        row = dist[v]
        step = row[nbr] - row[:, None]
        return row, (step == -1).sum(axis=1), (step == 1).sum(axis=1)

    row0, c0, b0 = counts(0)
    if int(row0.max()) != diam:
        u, w = (int(x) for x in np.argwhere(dist == diam)[0])
        raise NotDistanceRegularError(
            f"eccentricity of 0 is {int(row0.max())} but dist({u},{w}) = {diam}", pair=(u, w)
        )
    c_layer = np.zeros(diam + 1, dtype=np.int64)
    b_layer = np.zeros(diam + 1, dtype=np.int64)
    for i in range(diam + 1):
        members = np.flatnonzero(row0 == i)
        c_layer[i], b_layer[i] = c0[members[0]], b0[members[0]]
        bad = members[(c0[members] != c_layer[i]) | (b0[members] != b_layer[i])]
        if bad.size:
            raise NotDistanceRegularError(
                f"layer {i} of vertex 0 has non-constant counts at vertex {int(bad[0])}",
                pair=(0, int(bad[0])),
            )

    for v in range(1, g.n):
        row, cv, bv = counts(v)
        bad = np.flatnonzero((cv != c_layer[row]) | (bv != b_layer[row]))
        if bad.size:
            w = int(bad[0])
            raise NotDistanceRegularError(
                f"counts at distance {int(row[w])} differ for pair ({v}, {w})", pair=(v, w)
            )

    arr = IntersectionArray(
        d=diam,
        b=[int(x) for x in b_layer[:diam]],
        c=[int(x) for x in c_layer[1:]],
        realized=True,
    )
    logger.info(f"[DRG] {g.label or 'graph'}: intersection array {arr.describe()}")
    return arr


def intersection_numbers(arr: IntersectionArray) -> list[list[list[int]]]:
    """Table p[s][i][j] = |N_i(u) & N_j(v)| for dist(u, v) = s.

    Built from A_1 A_i = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1} in exact
    arithmetic; a fractional or negative entry means the array is infeasible.
    """
    if arr.k_i is None:
        raise InfeasibleArrayError(f"{arr.describe()}: layer sizes are not integral")
    d = arr.d
    a = arr.a
    # prod[i][j][r] holds p^r_{ij}
    prod = [[[Fraction(0)] * (d + 1) for _ in range(d + 1)] for _ in range(d + 1)]
    for j in range(d + 1):
        prod[0][j][j] = Fraction(1)
    if d >= 1:
        for j in range(d + 1):
            if j >= 1:
                prod[1][j][j - 1] = Fraction(arr.b_at(j - 1))
            prod[1][j][j] = Fraction(a[j])
            if j + 1 <= d:
                prod[1][j][j + 1] = Fraction(arr.c_at(j + 1))
    for i in range(1, d):
        for j in range(d + 1):
            current = prod[i][j]
            for r in range(d + 1):
                through_one = current[r] * a[r]
                if r + 1 <= d:
                    through_one += current[r + 1] * arr.b_at(r)
                if r >= 1:
                    through_one += current[r - 1] * arr.c_at(r)
                value = (
                    through_one - arr.b_at(i - 1) * prod[i - 1][j][r] - a[i] * current[r]
                ) / arr.c_at(i + 1)
                prod[i + 1][j][r] = value

    table = [[[0] * (d + 1) for _ in range(d + 1)] for _ in range(d + 1)]
    for i in range(d + 1):
        for j in range(d + 1):
            for s in range(d + 1):
                value = prod[i][j][s]
                if value.denominator != 1 or value < 0:
                    raise InfeasibleArrayError(
                        f"{arr.describe()}: p^{s}_({i},{j}) = {value} is not a non-negative integer"
                    )
                table[s][i][j] = int(value)
    return table


def basic_inequalities(arr: IntersectionArray, has_quadrangle: bool) -> list[InequalityReport]:
    """The elementary parameter inequalities, one report each."""
    reports: list[InequalityReport] = []
    k, lam, mu, d = arr.k, arr.lambda_, arr.mu, arr.d
    witness = {"k": k, "lambda": lam, "mu": mu, "d": d}

    if d >= 2:
        reports.append(InequalityReport.compare("2lambda<=k+mu", 2 * lam, "<=", k + mu, witness))
    else:
        reports.append(InequalityReport.skipped("2lambda<=k+mu", "needs diameter >= 2", witness))

    if has_quadrangle:
        for i in range(1, d + 1):
            lhs = arr.c_at(i) - arr.b_at(i)
            rhs = arr.c_at(i - 1) - arr.b_at(i - 1) + lam + 2
            reports.append(
                InequalityReport.compare(f"terwilliger[i={i}]", lhs, ">=", rhs, {**witness, "i": i})
            )
    else:
        reports.append(InequalityReport.skipped("terwilliger", "no induced quadrangle", witness))

    if d >= 3 and mu >= 2:
        c3, b2 = arr.c_at(3), arr.b_at(2)
        rhs = 1.5 * mu
        if c3 < rhs and d == 3 and c3 >= mu + b2:
            rhs = mu + b2
        reports.append(
            InequalityReport.compare(
                "c3>=3mu/2 or (c3>=mu+b2 and d=3)",
                c3,
                ">=",
                rhs,
                {**witness, "c3": c3, "b2": b2},
            )
        )
        reports.append(InequalityReport.compare("c3>mu", c3, ">", mu, {**witness, "c3": c3}))
    else:
        note = "needs diameter >= 3 and mu >= 2"
        reports.append(InequalityReport.skipped("c3>=3mu/2 or (c3>=mu+b2 and d=3)", note, witness))
        reports.append(InequalityReport.skipped("c3>mu", note, witness))
    return reports


def johnson_array(s: int, d: int) -> IntersectionArray:
    """b_i = (d-i)(s-d-i), c_{i+1} = (i+1)^2."""
    return IntersectionArray(
        d=d,
        b=[(d - i) * (s - d - i) for i in range(d)],
        c=[(i + 1) ** 2 for i in range(d)],
    )


def hamming_array(d: int, s: int) -> IntersectionArray:
    """b_i = (d-i)(s-1), c_{i+1} = i+1."""
    return IntersectionArray(d=d, b=[(d - i) * (s - 1) for i in range(d)], c=list(range(1, d + 1)))


def closed_form_array(spec: GeneratorSpec) -> IntersectionArray:
    """Intersection array of a Johnson, Hamming or Doob spec from its closed form."""
    match spec.family:
        case GraphFamily.JOHNSON:
            return johnson_array(spec.s, spec.d)
        case GraphFamily.HAMMING:
            return hamming_array(spec.d, spec.s)
        case GraphFamily.DOOB:
            return hamming_array((spec.doob_t or 0) + 2 * spec.doob_l, 4)
    raise ParameterError(f"no closed-form array for family {spec.family.value}")
