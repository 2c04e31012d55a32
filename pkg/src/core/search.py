"""Exact structural search: maximal cliques, induced C4 and induced K_{a,b}."""

import logging

from src.core.graph import Graph
from src.errors import ParameterError

logger = logging.getLogger(__name__)

MAX_BIPARTITE_PRODUCT = 12


def enumerate_maximal_cliques(g: Graph, min_size: int = 1) -> list[tuple[int, ...]]:
    """All maximal cliques with at least ``min_size`` vertices, sorted.

    Bron-Kerbosch with Tomita pivoting; branches that cannot reach
    ``min_size`` are cut.
    """
    nbrs = g.neighbor_sets
    found: list[tuple[int, ...]] = []

    def expand(clique: list[int], candidates: set[int], excluded: set[int]) -> None:
        if not candidates and not excluded:
            if len(clique) >= min_size:
                found.append(tuple(sorted(clique)))
            return
        if len(clique) + len(candidates) < min_size:
            return
        pivot = max(candidates | excluded, key=lambda u: (len(candidates & nbrs[u]), -u))
        for v in sorted(candidates - nbrs[pivot]):
            expand([*clique, v], candidates & nbrs[v], excluded & nbrs[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    expand([], set(range(g.n)), set())
    found.sort()
    logger.debug(f"[Cliques] {len(found)} maximal cliques of size >= {min_size}")
    return found


def find_induced_quadrangle(g: Graph) -> tuple[int, int, int, int] | None:
    """An induced 4-cycle (u, a, w, b) in cycle order, or None."""
    nbrs = g.neighbor_sets
    for u in range(g.n):
        second = set()
        for a in g.adjacency[u]:
            second.update(w for w in g.adjacency[a] if w > u)
        for w in sorted(second - nbrs[u]):
            common = sorted(nbrs[u] & nbrs[w])
            for i, a in enumerate(common):
                for b in common[i + 1 :]:
                    if b not in nbrs[a]:
                        return (u, a, w, b)
    return None


def _independent_subset(g: Graph, pool: list[int], size: int) -> tuple[int, ...] | None:
    nbrs = g.neighbor_sets

    def grow(chosen: list[int], start: int) -> tuple[int, ...] | None:
        if len(chosen) == size:
            return tuple(chosen)
        for i in range(start, len(pool)):
            if len(chosen) + len(pool) - i < size:
                return None
            v = pool[i]
            if all(v not in nbrs[c] for c in chosen):
                hit = grow([*chosen, v], i + 1)
                if hit is not None:
                    return hit
        return None

    return grow([], 0)


def find_induced_complete_bipartite(
    g: Graph, a: int, b: int
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Vertex sets (A, B) with |A| = a, |B| = b inducing exactly K_{a,b}, or None.

    Exhaustive over independent sets A in increasing order; the common
    neighbourhood of A must keep at least b vertices, and B is an independent
    b-subset of it.
    """
    if a < 1 or b < 1:
        raise ParameterError(f"K_(a,b) search needs a, b >= 1, got a={a}, b={b}")
    if a * b > MAX_BIPARTITE_PRODUCT:
        raise ParameterError(f"K_(a,b) search is capped at a*b <= {MAX_BIPARTITE_PRODUCT}")
    nbrs = g.neighbor_sets

    def grow(side: list[int], common: set[int]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        if len(side) == a:
            other = _independent_subset(g, sorted(common), b)
            return (tuple(side), other) if other is not None else None
        if side:
            pool = set()
            for y in common:
                pool.update(nbrs[y])
            pool = {x for x in pool if x > side[-1]}
        else:
            pool = {x for x in range(g.n) if len(nbrs[x]) >= b}
        for x in sorted(pool):
            if any(x in nbrs[y] for y in side):
                continue
            narrowed = common & nbrs[x] if side else set(nbrs[x])
            if len(narrowed) < b:
                continue
            hit = grow([*side, x], narrowed)
            if hit is not None:
                return hit
        return None

    return grow([], set())
