"""Generators for the named graph families.

Vertex order is lexicographic on the combinatorial labels (d-subsets for
Johnson, d-tuples for Hamming) so witnesses can be hard-coded in tests.
"""

import itertools
import logging
from math import comb

from src.core.graph import Graph, cartesian_product
from src.errors import ParameterError
from src.schemas.models import GeneratorSpec, GraphFamily

logger = logging.getLogger(__name__)

SHRIKHANDE_DIFFERENCES = ((1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3))


def _require(value: int | None, name: str, family: GraphFamily) -> int:
    if value is None:
        raise ParameterError(f"{family.value} requires --{name.replace('_', '-')}")
    return value


def validate_spec(spec: GeneratorSpec) -> None:
    """Raise ParameterError naming the first violated family constraint."""
    family = spec.family
    if family == GraphFamily.JOHNSON:
        s, d = _require(spec.s, "s", family), _require(spec.d, "d", family)
        if d < 1:
            raise ParameterError(f"Johnson requires d >= 1, got d={d}")
        if s < 2 * d:
            raise ParameterError(f"Johnson requires s >= 2d, got s={s}, d={d}")
    elif family == GraphFamily.HAMMING:
        s, d = _require(spec.s, "s", family), _require(spec.d, "d", family)
        if s < 2:
            raise ParameterError(f"Hamming requires s >= 2, got s={s}")
        if d < 1:
            raise ParameterError(f"Hamming requires d >= 1, got d={d}")
    elif family == GraphFamily.DOOB:
        l_count = _require(spec.doob_l, "doob_l", family)
        t_count = spec.doob_t if spec.doob_t is not None else 0
        if l_count < 1:
            raise ParameterError(f"Doob requires doob_l >= 1, got doob_l={l_count}")
        if t_count < 0:
            raise ParameterError(f"Doob requires doob_t >= 0, got doob_t={t_count}")
    elif family == GraphFamily.COCKTAIL_PARTY:
        if _require(spec.s, "s", family) < 2:
            raise ParameterError(f"CocktailParty requires s >= 2 pairs, got s={spec.s}")
    elif family == GraphFamily.COMPLETE_BIPARTITE_LINE:
        s, d = _require(spec.s, "s", family), _require(spec.d, "d", family)
        if s < 1 or d < 1:
            raise ParameterError(f"CompleteBipartiteLine requires s, d >= 1, got s={s}, d={d}")
    elif family == GraphFamily.COMPLETE:
        if _require(spec.s, "s", family) < 1:
            raise ParameterError(f"Complete requires s >= 1, got s={spec.s}")
    elif family == GraphFamily.CYCLE and _require(spec.s, "s", family) < 3:
        raise ParameterError(f"Cycle requires s >= 3, got s={spec.s}")


def spec_label(spec: GeneratorSpec) -> str:
    match spec.family:
        case GraphFamily.JOHNSON:
            return f"J({spec.s},{spec.d})"
        case GraphFamily.HAMMING:
            return f"H({spec.d},{spec.s})"
        case GraphFamily.DOOB:
            return f"Doob({spec.doob_t or 0},{spec.doob_l})"
        case GraphFamily.SHRIKHANDE:
            return "Shrikhande"
        case GraphFamily.COCKTAIL_PARTY:
            return f"CP({spec.s})"
        case GraphFamily.COMPLETE_BIPARTITE_LINE:
            return f"L(K_{spec.s},{spec.d})"
        case GraphFamily.COMPLETE:
            return f"K{spec.s}"
        case GraphFamily.CYCLE:
            return f"C{spec.s}"


def johnson_graph(s: int, d: int) -> Graph:
    """J(s, d): d-subsets of an s-set, adjacent when they share d - 1 elements."""
    subsets = list(itertools.combinations(range(s), d))
    index = {sub: i for i, sub in enumerate(subsets)}
    adjacency = []
    for sub in subsets:
        inside = set(sub)
        outside = [x for x in range(s) if x not in inside]
        row = []
        for drop in sub:
            rest = [x for x in sub if x != drop]
            for add in outside:
                row.append(index[tuple(sorted([*rest, add]))])
        adjacency.append(tuple(sorted(row)))
    graph = Graph(n=len(subsets), adjacency=tuple(adjacency), label=f"J({s},{d})")
    logger.debug(f"[Generate] J({s},{d}): n={graph.n} (C(s,d)={comb(s, d)})")
    return graph


def hamming_graph(d: int, s: int) -> Graph:
    """H(d, s): words of length d over an s-letter alphabet at Hamming distance 1."""
    words = list(itertools.product(range(s), repeat=d))
    weights = [s ** (d - 1 - pos) for pos in range(d)]
    adjacency = []
    for word in words:
        base = sum(x * w for x, w in zip(word, weights, strict=True))
        row = []
        for pos, x in enumerate(word):
            for y in range(s):
                if y != x:
                    row.append(base + (y - x) * weights[pos])
        adjacency.append(tuple(sorted(row)))
    return Graph(n=len(words), adjacency=tuple(adjacency), label=f"H({d},{s})")


def shrikhande_graph() -> Graph:
    """4x4 torus with connection set {+-(1,0), +-(0,1), +-(1,1)}."""
    edges = set()
    for a, b in itertools.product(range(4), repeat=2):
        for da, db in SHRIKHANDE_DIFFERENCES:
            u, v = 4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(16, sorted(edges), label="Shrikhande")


def doob_graph(t: int, l_count: int) -> Graph:
    """Box product of H(t, 4) with l_count copies of the Shrikhande graph."""
    graph = hamming_graph(t, 4) if t > 0 else Graph(n=1, adjacency=((),))
    shrikhande = shrikhande_graph()
    for _ in range(l_count):
        graph = cartesian_product(graph, shrikhande)
    return graph.with_label(f"Doob({t},{l_count})")


def complete_graph(s: int) -> Graph:
    return Graph(
        n=s,
        adjacency=tuple(tuple(w for w in range(s) if w != v) for v in range(s)),
        label=f"K{s}",
    )


def cycle_graph(s: int) -> Graph:
    edges = [(i, (i + 1) % s) for i in range(s)]
    return Graph.from_edges(s, [(min(u, v), max(u, v)) for u, v in edges], label=f"C{s}")


def cocktail_party_graph(s: int) -> Graph:
    """K_{s x 2}: 2s vertices, each adjacent to everything but its partner v ^ 1."""
    n = 2 * s
    adjacency = tuple(tuple(w for w in range(n) if w != v and w != v ^ 1) for v in range(n))
    return Graph(n=n, adjacency=adjacency, label=f"CP({s})")


def rook_graph(s: int, t: int) -> Graph:
    """s x t rook's graph; vertex (i, j) has index i * t + j. Equals L(K_{s,t})."""
    edges = []
    for i, j in itertools.product(range(s), range(t)):
        v = i * t + j
        edges.extend((v, i * t + jj) for jj in range(j + 1, t))
        edges.extend((v, ii * t + j) for ii in range(i + 1, s))
    return Graph.from_edges(s * t, edges, label=f"L(K_{s},{t})")


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t}; the first s vertices form one side."""
    edges = [(i, s + j) for i in range(s) for j in range(t)]
    return Graph.from_edges(s + t, edges, label=f"K_{s},{t}")


def petersen_graph() -> Graph:
    """Kneser graph K(5, 2): 2-subsets of {0..4}, adjacent when disjoint."""
    subsets = list(itertools.combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(subsets)), 2)
        if not set(subsets[i]) & set(subsets[j])
    ]
    return Graph.from_edges(10, edges, label="Petersen")


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph named by ``spec``."""
    validate_spec(spec)
    match spec.family:
        case GraphFamily.JOHNSON:
            graph = johnson_graph(spec.s, spec.d)
        case GraphFamily.HAMMING:
            graph = hamming_graph(spec.d, spec.s)
        case GraphFamily.DOOB:
            graph = doob_graph(spec.doob_t or 0, spec.doob_l)
        case GraphFamily.SHRIKHANDE:
            graph = shrikhande_graph()
        case GraphFamily.COCKTAIL_PARTY:
            graph = cocktail_party_graph(spec.s)
        case GraphFamily.COMPLETE_BIPARTITE_LINE:
            graph = rook_graph(spec.s, spec.d)
        case GraphFamily.COMPLETE:
            graph = complete_graph(spec.s)
        case GraphFamily.CYCLE:
            graph = cycle_graph(spec.s)
    logger.info(f"[Generate] {graph.label}: n={graph.n}, edges={graph.num_edges}")
    return graph
