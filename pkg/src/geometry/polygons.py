"""Generalized polygons and Moore graphs as the possible duals when mu = 1 and m = 2."""

from typing import Literal

from src.core.graph import Graph, distance_matrix, is_connected
from src.errors import ParameterError
from src.geometry.dual import DualGraph
from src.schemas.models import FEIT_HIGMAN_POLYGONS, IntersectionArray, InequalityReport

DualKind = Literal["generalized-polygon", "moore"]

MOORE_DEGREES = (3, 7, 57)


def feit_higman_check(two_d: int, s: int, t: int) -> InequalityReport:
    """Thick generalized 2d-gons of order (s, t) exist only for 2d in {4, 6, 8, 12}."""
    name = "feit-higman"
    if two_d < 4 or two_d % 2:
        raise ParameterError(f"generalized 2d-gon needs an even 2d >= 4, got {two_d}")
    if s < 1 or t < 1:
        raise ParameterError(f"order (s, t) must be positive, got ({s}, {t})")
    if s == 1 and t == 1:
        return InequalityReport.skipped(name, "order (1, 1) is an ordinary polygon", {"2d": two_d})
    holds = two_d in FEIT_HIGMAN_POLYGONS and not (two_d == 12 and s > 1 and t > 1)
    return InequalityReport.flag(
        name,
        holds,
        note=None if holds else f"no generalized {two_d}-gon of order ({s}, {t})",
        two_d=two_d,
        s=s,
        t=t,
    )


def _is_bipartite(g: Graph) -> bool:
    if not is_connected(g):
        return False
    level = distance_matrix(g)[0]
    return all(level[u] != level[v] for u, v in g.edges())


def classify_mu1_dual(
    arr: IntersectionArray, dual: DualGraph | None = None
) -> tuple[DualKind, list[str]]:
    """Generalized 2d-gon of order (1, s) when c_d = 2, Moore graph otherwise.

    With an explicit dual the decision is cross-checked against its
    bipartiteness, since generalized polygons of order (1, s) are bipartite.
    """
    d, k = arr.d, arr.k
    s = k // 2
    kind: DualKind = "generalized-polygon" if arr.c_at(d) == 2 else "moore"
    notes: list[str] = []
    if kind == "generalized-polygon":
        notes.append(f"dual is a generalized {2 * d}-gon of order (1, {s})")
        fh = feit_higman_check(2 * d, 1, s) if 2 * d >= 4 else None
        if fh is not None and not fh.holds:
            notes.append(fh.note or "Feit-Higman excludes this polygon")
        notes.append(f"its halved graph is a generalized {d}-gon of order ({s}, {s})")
        if d % 2:
            notes.append(f"diameter {d} is odd; the halved-graph reduction expects even d")
    else:
        k_tilde = k // 2 + 1
        notes.append(f"dual is a Moore graph of degree {k_tilde}")
        if k_tilde > 2 and k_tilde not in MOORE_DEGREES:
            notes.append(f"no Moore graph of degree {k_tilde} other than a complete graph")
    if dual is not None:
        bipartite = _is_bipartite(dual.graph)
        if bipartite != (kind == "generalized-polygon"):
            notes.append(
                f"explicit dual is {'bipartite' if bipartite else 'not bipartite'}, "
                f"which disagrees with c_d = {arr.c_at(d)}"
            )
    return kind, notes
