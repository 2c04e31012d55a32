"""Shape of the local graphs X(v): connected, disjoint cliques, or a rook's graph."""

import logging

from src.core.graph import Graph, components, neighborhood_subgraph
from src.core.search import enumerate_maximal_cliques
from src.errors import GeometryInconsistencyError, ParameterError
from src.schemas.models import LocalLineGraphReport, NeighborhoodKind, NeighborhoodReport

logger = logging.getLogger(__name__)


def _local_kind(local: Graph) -> tuple[NeighborhoodKind, int | None, int | None]:
    if local.n == 0:
        return NeighborhoodKind.OTHER, None, None
    parts = components(local)
    sizes = {len(p) for p in parts}
    all_cliques = all(local.degree(u) == len(p) - 1 for p in parts for u in p)
    if all_cliques and len(sizes) == 1:
        return NeighborhoodKind.DISJOINT_CLIQUES, len(parts), sizes.pop()
    if len(parts) == 1:
        return NeighborhoodKind.CONNECTED, None, None
    return NeighborhoodKind.OTHER, None, None


def classify_neighborhood(g: Graph, geometric: bool = False) -> NeighborhoodReport:
    """Classify every X(v); a single clique counts as disjoint cliques with m = 1.

    Raises:
        GeometryInconsistencyError: ``geometric`` is set and the kinds differ
    """
    kinds = [_local_kind(neighborhood_subgraph(g, v).graph) for v in range(g.n)]
    first_kind, count, size = kinds[0]
    mismatch = next((v for v, kind in enumerate(kinds) if kind != kinds[0]), None)
    if mismatch is not None and geometric:
        raise GeometryInconsistencyError(
            f"X(0) is {first_kind.value} but X({mismatch}) is {kinds[mismatch][0].value}",
            witness=(0, mismatch),
        )
    seen = sorted({kind for kind, _, _ in kinds}, key=lambda kind: kind.value)
    return NeighborhoodReport(
        kind=first_kind,
        uniform=mismatch is None,
        clique_count=count,
        clique_size=size,
        kinds_seen=seen,
        first_mismatch=mismatch,
    )


def _two_colour(cliques: list[tuple[int, ...]], n: int) -> list[int] | None:
    """Colour cliques so that cliques sharing a vertex differ; None if impossible."""
    through: list[list[int]] = [[] for _ in range(n)]
    for idx, clique in enumerate(cliques):
        for v in clique:
            through[v].append(idx)
    if any(len(ids) != 2 for ids in through):
        return None
    colour = [-1] * len(cliques)
    for start in range(len(cliques)):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            idx = stack.pop()
            for v in cliques[idx]:
                for other in through[v]:
                    if other == idx:
                        continue
                    if colour[other] < 0:
                        colour[other] = 1 - colour[idx]
                        stack.append(other)
                    elif colour[other] == colour[idx]:
                        return None
    return colour


def is_rook_graph(local: Graph, p: int, q: int) -> bool:
    """Whether ``local`` is the p x q rook's graph, i.e. L(K_{p,q})."""
    if local.n != p * q:
        return False
    if p == 1 or q == 1:
        return local.num_edges == local.n * (local.n - 1) // 2
    cliques = enumerate_maximal_cliques(local, min_size=2)
    colour = _two_colour(cliques, local.n)
    if colour is None:
        return False
    families = [
        [c for c, col in zip(cliques, colour, strict=True) if col == side] for side in (0, 1)
    ]
    sizes = [{len(c) for c in fam} for fam in families]
    if any(len(s) != 1 for s in sizes):
        return False
    if sorted((sizes[0].pop(), sizes[1].pop())) != sorted((p, q)):
        return False
    cells = set()
    for v in range(local.n):
        row = next(i for i, c in enumerate(families[0]) if v in c)
        col = next(j for j, c in enumerate(families[1]) if v in c)
        cells.add((row, col))
    # each row clique meets each column clique exactly once
    return len(cells) == local.n == len(families[0]) * len(families[1])


def local_line_graph_check(g: Graph, m: int) -> LocalLineGraphReport:
    """Check that every X(v) is the line graph of K_{m, k/m}."""
    k = g.regular_degree()
    if k is None:
        raise ParameterError("local line-graph check needs a regular graph")
    if m < 1 or k % m:
        raise ParameterError(f"m = {m} must divide k = {k}")
    cols = k // m
    failing = [
        v for v in range(g.n) if not is_rook_graph(neighborhood_subgraph(g, v).graph, m, cols)
    ]
    logger.debug(
        f"[Local] {g.label or 'graph'}: {len(failing)} vertices fail the {m}x{cols} rook test"
    )
    return LocalLineGraphReport(rows=m, cols=cols, holds=not failing, failing_vertices=failing)
