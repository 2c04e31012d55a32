"""Automorphism groups by colour refinement and individualization.

The first path of the search tree fixes a base v_1, ..., v_k. For every level
the orbit of v_{i+1} under the pointwise stabilizer of v_1, ..., v_i is
found by searching for one automorphism per target-cell vertex not yet
reached; the coset representatives form a stabilizer chain, so the group
order is the product of the orbit lengths and every element is a unique
product t_0 t_1 ... t_{k-1}.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass, field
from math import prod

import numpy as np

from src.core.graph import Graph

logger = logging.getLogger(__name__)

Colouring = tuple[int, ...]

BATCH = 1 << 16


def refine(g: Graph, colours: Colouring) -> Colouring:
    """Coarsest equitable refinement; new colours rank (old colour, neighbour colours)."""
    current = colours
    count = len(set(current))
    while True:
        signatures = [
            (current[v], tuple(sorted(current[w] for w in g.adjacency[v]))) for v in range(g.n)
        ]
        ranks = {sig: r for r, sig in enumerate(sorted(set(signatures)))}
        refined = tuple(ranks[sig] for sig in signatures)
        if len(ranks) == count:
            return refined
        current, count = refined, len(ranks)


def individualize(g: Graph, colours: Colouring, v: int) -> Colouring:
    ranks = {sig: r for r, sig in enumerate(sorted({(c, 0) for c in colours} | {(colours[v], 1)}))}
    split = tuple(ranks[(c, int(u == v))] for u, c in enumerate(colours))
    return refine(g, split)


def cell_sizes(colours: Colouring) -> tuple[int, ...]:
    sizes = [0] * (max(colours) + 1)
    for c in colours:
        sizes[c] += 1
    return tuple(sizes)


def target_colour(colours: Colouring) -> int | None:
    """Colour of the first smallest non-singleton cell, None when discrete."""
    sizes = cell_sizes(colours)
    candidates = [(size, c) for c, size in enumerate(sizes) if size > 1]
    return min(candidates)[1] if candidates else None


@dataclass(frozen=True)
class Automorphism:
    perm: tuple[int, ...]

    @property
    def support(self) -> int:
        return sum(1 for v, w in enumerate(self.perm) if v != w)


def _preserves(adj: np.ndarray, edges: np.ndarray, perm: np.ndarray) -> bool:
    if edges.size == 0:
        return True
    return bool(adj[perm[edges[:, 0]], perm[edges[:, 1]]].all())


@dataclass
class AutomorphismGroup:
    """Stabilizer chain: base points and one coset representative per orbit point."""

    n: int
    base: list[int]
    transversals: list[list[np.ndarray]] = field(default_factory=list)

    @property
    def order(self) -> int:
        return prod(len(t) for t in self.transversals)

    def batches(self) -> Iterator[np.ndarray]:
        """All elements, each exactly once, as (rows, n) arrays."""
        identity = np.arange(self.n, dtype=np.int64)
        blocks = [np.stack(t) for t in self.transversals] or [identity[None, :]]

        def walk(level: int, prefix: np.ndarray) -> Iterator[np.ndarray]:
            remaining = prod(len(b) for b in blocks[level:])
            if remaining <= BATCH:
                current = prefix[None, :]
                for block in blocks[level:]:
                    # (s o t)(u) = s[t[u]]
                    current = current[:, block].reshape(-1, self.n)
                yield current
                return
            for t in blocks[level]:
                yield from walk(level + 1, prefix[t])

        yield from walk(0, identity)


def automorphism_group(g: Graph) -> AutomorphismGroup:
    """Compute the stabilizer chain of Aut(g)."""
    n = g.n
    if n == 0:
        return AutomorphismGroup(n=0, base=[])
    adj = g.adjacency_matrix().astype(bool)
    edges = np.array(g.edges(), dtype=np.int64).reshape(-1, 2)

    # first path
    path = [refine(g, (0,) * n)]
    targets: list[int] = []
    base: list[int] = []
    while (t := target_colour(path[-1])) is not None:
        v = min(u for u, c in enumerate(path[-1]) if c == t)
        targets.append(t)
        base.append(v)
        path.append(individualize(g, path[-1], v))
    first_leaf = path[-1]
    shapes = [cell_sizes(c) for c in path]

    def leaf_match(level: int, colours: Colouring) -> np.ndarray | None:
        """Automorphism mapping the first leaf onto a leaf below ``colours``."""
        if cell_sizes(colours) != shapes[level]:
            return None
        if level == len(base):
            by_colour = [0] * n
            for u, c in enumerate(colours):
                by_colour[c] = u
            perm = np.array([by_colour[c] for c in first_leaf], dtype=np.int64)
            return perm if _preserves(adj, edges, perm) else None
        cell = [u for u, c in enumerate(colours) if c == targets[level]]
        for x in cell:
            found = leaf_match(level + 1, individualize(g, colours, x))
            if found is not None:
                return found
        return None

    generators: list[np.ndarray] = []
    transversals: list[list[np.ndarray]] = [[] for _ in base]
    for level in range(len(base) - 1, -1, -1):
        v = base[level]
        orbit: dict[int, np.ndarray] = {v: np.arange(n, dtype=np.int64)}

        def grow(orbit: dict[int, np.ndarray] = orbit) -> None:
            queue = list(orbit)
            while queue:
                u = queue.pop()
                for gen in generators:
                    x = int(gen[u])
                    if x not in orbit:
                        orbit[x] = gen[orbit[u]]
                        queue.append(x)

        grow()
        cell = [u for u, c in enumerate(path[level]) if c == targets[level]]
        for w in cell:
            if w in orbit:
                continue
            found = leaf_match(level + 1, individualize(g, path[level], w))
            if found is not None:
                generators.append(found)
                grow()
        transversals[level] = [orbit[w] for w in sorted(orbit)]
    group = AutomorphismGroup(n=n, base=base, transversals=transversals)
    logger.debug(f"[Automorphisms] {g.label or 'graph'}: base={base}, |Aut|={group.order}")
    return group


def enumerate_automorphisms(g: Graph, max_count: int) -> tuple[list[Automorphism], bool]:
    """Non-identity automorphisms, at most ``max_count``; the flag marks truncation."""
    group = automorphism_group(g)
    adj = g.adjacency_matrix().astype(bool)
    edges = np.array(g.edges(), dtype=np.int64).reshape(-1, 2)
    identity = np.arange(g.n, dtype=np.int64)
    found: list[Automorphism] = []
    for block in group.batches():
        for row in block:
            if np.array_equal(row, identity):
                continue
            if len(found) == max_count:
                return found, True
            if not _preserves(adj, edges, row):
                raise AssertionError(f"non-automorphism {row.tolist()} produced")
            found.append(Automorphism(perm=tuple(int(x) for x in row)))
    return found, False
