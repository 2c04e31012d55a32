"""Immutable simple graphs and the structural helpers built on them."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from src.errors import ParameterError


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph stored as sorted adjacency tuples.

    Vertices are 0..n-1. Construction validates symmetry, range and the
    absence of loops or repeated neighbours.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    label: str | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ParameterError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adjacency) != self.n:
            raise ParameterError(
                f"adjacency has {len(self.adjacency)} rows for {self.n} vertices"
            )
        for v, row in enumerate(self.adjacency):
            previous = -1
            for w in row:
                if not 0 <= w < self.n:
                    raise ParameterError(f"neighbor {w} of vertex {v} out of range [0, {self.n})")
                if w == v:
                    raise ParameterError(f"self-loop at vertex {v}")
                if w <= previous:
                    raise ParameterError(f"adjacency of vertex {v} is not strictly increasing")
                previous = w
        sets = self.neighbor_sets
        for v, row in enumerate(self.adjacency):
            for w in row:
                if v not in sets[w]:
                    raise ParameterError(f"asymmetric adjacency: {v} -> {w} without {w} -> {v}")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], label: str | None = None
    ) -> "Graph":
        """Build a graph from an edge iterable; duplicate edges are rejected."""
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range [0, {n})")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if v in rows[u]:
                raise ParameterError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n=n, adjacency=tuple(tuple(sorted(r)) for r in rows), label=label)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    @cached_property
    def num_edges(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else None."""
        if self.n == 0:
            return 0
        k = len(self.adjacency[0])
        return k if all(len(row) == k for row in self.adjacency) else None

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u, row in enumerate(self.adjacency) for v in row if u < v]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, row in enumerate(self.adjacency):
            a[u, list(row)] = 1
        return a

    def sparse_adjacency(self) -> csr_matrix:
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(row) for row in self.adjacency])
        indices = np.fromiter(
            (w for row in self.adjacency for w in row), dtype=np.int64, count=int(indptr[-1])
        )
        data = np.ones(len(indices), dtype=np.int8)
        return csr_matrix((data, indices, indptr), shape=(self.n, self.n))

    def with_label(self, label: str | None) -> "Graph":
        return Graph(n=self.n, adjacency=self.adjacency, label=label)


@dataclass(frozen=True)
class DistancePartition:
    """BFS layers N_0(v), ..., N_e(v) of the component containing ``source``."""

    source: int
    layers: tuple[tuple[int, ...], ...]

    @property
    def eccentricity(self) -> int:
        return len(self.layers) - 1

    def layer_sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]


@dataclass(frozen=True)
class InducedSubgraph:
    """An induced subgraph; ``vertices[i]`` is the parent index of vertex i."""

    graph: Graph
    vertices: tuple[int, ...]


def distance_partition(g: Graph, v: int) -> DistancePartition:
    if not 0 <= v < g.n:
        raise ParameterError(f"vertex {v} out of range [0, {g.n})")
    seen = {v}
    layers = [(v,)]
    frontier = [v]
    while frontier:
        nxt: set[int] = set()
        for u in frontier:
            for w in g.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    nxt.add(w)
        if not nxt:
            break
        frontier = sorted(nxt)
        layers.append(tuple(frontier))
    return DistancePartition(source=v, layers=tuple(layers))


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs BFS distances as int32; unreachable pairs are -1."""
    if g.n == 0:
        return np.zeros((0, 0), dtype=np.int32)
    dist = shortest_path(g.sparse_adjacency(), method="D", directed=False, unweighted=True)
    out = np.full(dist.shape, -1, dtype=np.int32)
    finite = np.isfinite(dist)
    out[finite] = dist[finite].astype(np.int32)
    return out


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    count, _ = connected_components(g.sparse_adjacency(), directed=False)
    return count == 1


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    if g.n == 0:
        return []
    _, labels = connected_components(g.sparse_adjacency(), directed=False)
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(labels.tolist()):
        groups.setdefault(c, []).append(v)
    return sorted(groups.values(), key=lambda comp: comp[0])


def induced_subgraph(
    g: Graph, vertices: Sequence[int], label: str | None = None
) -> InducedSubgraph:
    order = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(order)}
    adjacency = tuple(
        tuple(sorted(index[w] for w in g.adjacency[v] if w in index)) for v in order
    )
    graph = Graph(n=len(order), adjacency=adjacency, label=label)
    return InducedSubgraph(graph=graph, vertices=order)


def neighborhood_subgraph(g: Graph, v: int) -> InducedSubgraph:
    """The local graph X(v) induced on N(v)."""
    if not 0 <= v < g.n:
        raise ParameterError(f"vertex {v} out of range [0, {g.n})")
    return induced_subgraph(g, g.adjacency[v], label=f"X({v})")


def line_graph(g: Graph) -> Graph:
    """L(g); vertex i is the i-th edge of ``g.edges()``."""
    edges = g.edges()
    if not edges:
        raise ParameterError("line graph needs at least one edge")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for ids in incident:
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                pairs.add((ids[a], ids[b]))
    label = f"L({g.label})" if g.label else None
    return Graph.from_edges(len(edges), sorted(pairs), label=label)


def complement(g: Graph) -> Graph:
    everyone = set(range(g.n))
    adjacency = tuple(
        tuple(sorted(everyone - g.neighbor_sets[v] - {v})) for v in range(g.n)
    )
    return Graph(n=g.n, adjacency=adjacency, label=f"co-{g.label}" if g.label else None)


def cartesian_product(g: Graph, h: Graph, label: str | None = None) -> Graph:
    """Box product; vertex (x, y) has index x * h.n + y."""
    adjacency = []
    for x in range(g.n):
        for y in range(h.n):
            row = [w * h.n + y for w in g.adjacency[x]] + [x * h.n + w for w in h.adjacency[y]]
            adjacency.append(tuple(sorted(row)))
    return Graph(n=g.n * h.n, adjacency=tuple(adjacency), label=label)


def diameter(g: Graph) -> int:
    """Diameter of a connected graph (0 for a single vertex)."""
    if g.n == 0:
        return 0
    dist = distance_matrix(g)
    if (dist < 0).any():
        raise ParameterError("diameter of a disconnected graph is undefined")
    return int(dist.max())
