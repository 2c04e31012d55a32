"""Exact motion and the computable lower bounds on it."""

import logging
from math import log

import numpy as np

from src.config import get_settings
from src.core.graph import Graph
from src.errors import ParameterError
from src.motion.automorphisms import AutomorphismGroup, automorphism_group
from src.schemas.models import IntersectionArray, MotionBound, MotionReport, SpectralProfile

logger = logging.getLogger(__name__)


def mixing_lemma_bound(n: int, k: int, xi: float, q: int) -> float:
    """n (k - xi - q) / k, clamped at 0."""
    if k <= 0:
        raise ParameterError(f"mixing bound needs k > 0, got k={k}")
    return max(0.0, n * (k - xi - q) / k)


def max_common_neighbours(g: Graph) -> int:
    """q: the largest number of common neighbours over distinct vertex pairs."""
    if g.n < 2:
        return 0
    adj = g.sparse_adjacency().astype(np.int64)
    walks = (adj @ adj).tolil()
    walks.setdiag(0)
    return int(walks.tocsr().max())


def distinguishing_bound(arr: IntersectionArray, alpha: float, j: int) -> MotionBound:
    """alpha n / d when b_j >= alpha k and c_{j+1} >= alpha k, else 0."""
    d, k = arr.d, arr.k
    if not 1 <= j <= d - 1:
        raise ParameterError(f"distinguishing bound needs 1 <= j <= d - 1, got j={j}, d={d}")
    if alpha <= 0:
        raise ParameterError(f"alpha must be positive, got {alpha}")
    tol = get_settings().compare_tol
    n = float(arr.n_fraction())
    threshold = alpha * k * (1 - tol)
    b_j, c_next = arr.b_at(j), arr.c_at(j + 1)
    provenance = "distinguishing number: b_j >= alpha k and c_{j+1} >= alpha k give alpha n / d"
    if b_j >= threshold and c_next >= threshold:
        return MotionBound(
            name=f"distinguishing[j={j}]",
            value=alpha * n / d,
            provenance=provenance,
            unchecked_hypotheses=["primitive"],
        )
    return MotionBound(
        name=f"distinguishing[j={j}]",
        value=0.0,
        provenance=provenance,
        applicable=False,
        note=f"b_{j} = {b_j}, c_{j + 1} = {c_next} below alpha k = {alpha * k:.6g}",
    )


def best_distinguishing_bound(arr: IntersectionArray) -> MotionBound | None:
    """The largest distinguishing bound over j, with alpha_j = min(b_j, c_{j+1}) / k."""
    if arr.d < 2:
        return None
    best = None
    for j in range(1, arr.d):
        alpha = min(arr.b_at(j), arr.c_at(j + 1)) / arr.k
        if alpha <= 0:
            continue
        bound = distinguishing_bound(arr, alpha, j)
        if best is None or bound.value > best.value:
            best = bound
    return best


def dual_motion_transfer(dual_bound_fraction: float) -> float:
    """A dual moving gamma of its vertices forces gamma / 2 of the original ones."""
    if not 0 <= dual_bound_fraction <= 1:
        raise ParameterError(f"dual motion fraction must lie in [0, 1], got {dual_bound_fraction}")
    return dual_bound_fraction / 2


def thickness_bound(n: int, alpha: float) -> float:
    """Largest alternating section: at most 3 ln(n) / alpha when motion >= alpha n."""
    if n < 2:
        raise ParameterError(f"thickness bound needs n >= 2, got n={n}")
    if not 0 < alpha <= 1:
        raise ParameterError(f"alpha must lie in (0, 1], got {alpha}")
    return 3 * log(n) / alpha


def _min_support(group: AutomorphismGroup, limit: int) -> tuple[int | None, bool]:
    """Minimum support over non-identity elements; True when cut at ``limit``."""
    identity = np.arange(group.n)
    best: int | None = None
    seen = 0
    for block in group.batches():
        if seen + len(block) > limit:
            block = block[: limit - seen]
        supports = (block != identity).sum(axis=1)
        moving = supports[supports > 0]
        if moving.size:
            low = int(moving.min())
            best = low if best is None else min(best, low)
        seen += len(block)
        if seen >= limit:
            return best, seen < group.order
    return best, False


def group_motion(g: Graph, max_group: int) -> tuple[AutomorphismGroup, int | None, bool]:
    group = automorphism_group(g)
    low, truncated = _min_support(group, max_group)
    return group, low, truncated


def exact_motion(
    g: Graph,
    max_group: int | None = None,
    arr: IntersectionArray | None = None,
    profile: SpectralProfile | None = None,
    dual: Graph | None = None,
) -> MotionReport:
    """Motion of ``g`` by enumeration, with every lower bound the inputs allow."""
    max_group = get_settings().max_group if max_group is None else max_group
    group, low, truncated = group_motion(g, max_group)
    order = group.order
    rigid = order == 1
    report = MotionReport(
        n=g.n,
        group_order=order,
        rigid=rigid,
        truncated=truncated,
        exact_motion=None if truncated or rigid else low,
        upper_bound=low if truncated else None,
    )

    bounds: list[MotionBound] = []
    k = g.regular_degree()
    if profile is not None and k:
        q = max_common_neighbours(g)
        bounds.append(
            MotionBound(
                name="mixing",
                value=mixing_lemma_bound(g.n, k, profile.xi, q),
                provenance=f"mixing lemma: n (k - xi - q) / k with xi={profile.xi:.6g}, q={q}",
            )
        )
    if arr is not None:
        best = best_distinguishing_bound(arr)
        if best is not None:
            bounds.append(best)
    if dual is not None and dual.n >= 2:
        _, dual_low, dual_truncated = group_motion(dual, max_group)
        if dual_low is not None and not dual_truncated:
            gamma = dual_low / dual.n
            bounds.append(
                MotionBound(
                    name="dual-transfer",
                    value=dual_motion_transfer(gamma) * g.n,
                    provenance=f"dual motion {dual_low} of {dual.n} vertices, halved",
                    unchecked_hypotheses=["non-complete geometric"],
                )
            )

    alpha = None
    if report.exact_motion is not None:
        alpha = report.exact_motion / g.n
    else:
        values = [b.value for b in bounds if b.applicable and b.value > 0]
        if values:
            alpha = min(1.0, max(values) / g.n)
    thickness = thickness_bound(g.n, alpha) if alpha and g.n >= 2 else None

    logger.info(
        f"[Motion] {g.label or 'graph'}: |Aut|={order}, motion={report.exact_motion}, "
        f"truncated={truncated}"
    )
    return report.model_copy(update={"bounds": bounds, "thickness_bound": thickness})


def array_motion_bounds(arr: IntersectionArray, profile: SpectralProfile) -> list[MotionBound]:
    """Bounds from the array alone; q = max(lambda, mu)."""
    n = arr.n
    bounds = []
    if n is not None:
        q = max(arr.lambda_, arr.mu)
        bounds.append(
            MotionBound(
                name="mixing",
                value=mixing_lemma_bound(n, arr.k, profile.xi, q),
                provenance=f"mixing lemma: n (k - xi - q) / k with xi={profile.xi:.6g}, q={q}",
            )
        )
    best = best_distinguishing_bound(arr)
    if best is not None:
        bounds.append(best)
    return bounds
