import networkx as nx
import pytest

from src.core.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    doob_graph,
    generate,
    hamming_graph,
    johnson_graph,
    petersen_graph,
    rook_graph,
    validate_spec,
)
from src.core.graph import (
    Graph,
    cartesian_product,
    complement,
    components,
    diameter,
    distance_matrix,
    distance_partition,
    is_connected,
    line_graph,
    neighborhood_subgraph,
)
from src.core.io import format_graph, parse_graph
from src.core.search import (
    enumerate_maximal_cliques,
    find_induced_complete_bipartite,
    find_induced_quadrangle,
)
from src.errors import GraphFormatError, ParameterError
from src.schemas.models import GeneratorSpec, GraphFamily

# Graph


def test_from_edges_builds_sorted_adjacency():
    g = Graph.from_edges(4, [(2, 0), (0, 1), (3, 2)], label="path")
    assert g.adjacency == ((1, 2), (0,), (0, 3), (2,))
    assert g.num_edges == 3
    assert g.edges() == [(0, 1), (0, 2), (2, 3)]
    assert g.regular_degree() is None


@pytest.mark.parametrize(
    "edges",
    [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)]],
    ids=["loop", "duplicate", "out-of-range"],
)
def test_from_edges_rejects_bad_input(edges):
    with pytest.raises(ParameterError):
        Graph.from_edges(3, edges)


def test_asymmetric_adjacency_rejected():
    with pytest.raises(ParameterError, match="asymmetric"):
        Graph(n=2, adjacency=((1,), ()))


def test_distance_partition_of_johnson(j52):
    assert distance_partition(j52, 0).layer_sizes() == [1, 6, 3]
    assert distance_partition(j52, 0).eccentricity == 2


def test_distance_matrix_matches_networkx(petersen, as_nx):
    expected = dict(nx.all_pairs_shortest_path_length(as_nx(petersen)))
    dist = distance_matrix(petersen)
    assert all(dist[u, v] == expected[u][v] for u in range(10) for v in range(10))


def test_components_and_connectivity():
    g = Graph.from_edges(5, [(0, 1), (3, 4)])
    assert not is_connected(g)
    assert components(g) == [[0, 1], [2], [3, 4]]
    with pytest.raises(ParameterError):
        diameter(g)


def test_neighborhood_subgraph_of_johnson_is_a_prism(j52, as_nx):
    local = neighborhood_subgraph(j52, 0)
    prism = nx.cartesian_product(nx.complete_graph(3), nx.complete_graph(2))
    assert local.vertices == j52.adjacency[0]
    assert nx.is_isomorphic(as_nx(local.graph), prism)


def test_line_graph_of_petersen(petersen):
    lg = line_graph(petersen)
    assert lg.n == 15
    assert lg.regular_degree() == 4
    assert lg.label == "L(Petersen)"


def test_complement_of_petersen_is_johnson(petersen, j52, as_nx):
    assert nx.is_isomorphic(as_nx(complement(petersen)), as_nx(j52))


def test_cartesian_product_of_complete_graphs_is_hamming(as_nx):
    product = cartesian_product(complete_graph(3), complete_graph(3))
    assert nx.is_isomorphic(as_nx(product), as_nx(hamming_graph(2, 3)))


# Generators


@pytest.mark.parametrize(
    ("graph", "oracle"),
    [
        (johnson_graph(5, 2), nx.complement(nx.petersen_graph())),
        (petersen_graph(), nx.petersen_graph()),
        (hamming_graph(3, 2), nx.hypercube_graph(3)),
        (rook_graph(3, 4), nx.line_graph(nx.complete_bipartite_graph(3, 4))),
        (complete_bipartite(2, 3), nx.complete_bipartite_graph(2, 3)),
        (cycle_graph(7), nx.cycle_graph(7)),
    ],
    ids=["J(5,2)", "Petersen", "H(3,2)", "rook", "K_2,3", "C7"],
)
def test_generators_match_networkx(graph, oracle, as_nx):
    assert nx.is_isomorphic(as_nx(graph), oracle)


def test_johnson_vertex_order_is_lexicographic():
    g = johnson_graph(4, 2)
    # {0,1} is vertex 0 and {2,3} is vertex 5
    assert not g.has_edge(0, 5)
    assert g.has_edge(0, 1)


def test_shrikhande_is_not_the_rook_graph(shrikhande, h24, as_nx):
    assert shrikhande.regular_degree() == h24.regular_degree() == 6
    assert not nx.is_isomorphic(as_nx(shrikhande), as_nx(h24))


def test_doob_graph_label_and_size():
    g = doob_graph(1, 1)
    assert g.label == "Doob(1,1)"
    assert g.n == 64
    assert g.regular_degree() == 9


@pytest.mark.parametrize(
    ("spec", "message"),
    [
        (GeneratorSpec(family=GraphFamily.JOHNSON, s=3, d=2), "s >= 2d"),
        (GeneratorSpec(family=GraphFamily.JOHNSON, s=5), "--d"),
        (GeneratorSpec(family=GraphFamily.HAMMING, s=1, d=2), "s >= 2"),
        (GeneratorSpec(family=GraphFamily.DOOB, doob_t=1, doob_l=0), "doob_l >= 1"),
        (GeneratorSpec(family=GraphFamily.CYCLE, s=2), "s >= 3"),
    ],
)
def test_validate_spec_names_the_violated_constraint(spec, message):
    with pytest.raises(ParameterError, match=message):
        validate_spec(spec)


def test_generate_labels_the_graph():
    g = generate(GeneratorSpec(family=GraphFamily.HAMMING, s=3, d=2))
    assert g.label == "H(2,3)"
    assert g.n == 9


# Edge-list format


def test_format_then_parse_keeps_graph(j52):
    text = format_graph(j52)
    assert text.splitlines()[:2] == ["# J(5,2)", "10 30"]
    parsed = parse_graph(text)
    assert parsed == j52


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("3 x\n", 1),
        ("3 1\n0 3\n", 2),
        ("3 2\n0 1\n", 2),
        ("3 1\n0 1\n1 2\n", 3),
        ("3 2\n0 1\n0 1\n", 3),
        ("# only a label\n", 1),
        ("3 1\n0 1 2\n", 2),
    ],
    ids=["non-integer", "range", "short", "extra", "duplicate", "no-header", "fields"],
)
def test_parse_errors_carry_the_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_reversed_edge_is_rejected():
    with pytest.raises(GraphFormatError, match="edge 3 0 violates 0 <= u < v < 4") as info:
        parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n")
    assert info.value.line == 5


# Search


@pytest.mark.parametrize("name", ["j52", "shrikhande", "petersen"])
def test_maximal_cliques_match_networkx(name, request, as_nx):
    g = request.getfixturevalue(name)
    expected = sorted(tuple(sorted(c)) for c in nx.find_cliques(as_nx(g)))
    assert enumerate_maximal_cliques(g) == expected


def test_maximal_cliques_respect_min_size(j52):
    assert len(enumerate_maximal_cliques(j52, min_size=4)) == 5
    assert len(enumerate_maximal_cliques(j52, min_size=3)) == 15


def test_induced_quadrangle(h23, petersen):
    u, a, w, b = find_induced_quadrangle(h23)
    assert h23.has_edge(u, a) and h23.has_edge(a, w) and h23.has_edge(w, b) and h23.has_edge(b, u)
    assert not h23.has_edge(u, w) and not h23.has_edge(a, b)
    assert find_induced_quadrangle(petersen) is None
    assert find_induced_quadrangle(complete_graph(5)) is None


def test_induced_complete_bipartite(h23, petersen):
    side_a, side_b = find_induced_complete_bipartite(petersen, 1, 3)
    assert all(petersen.has_edge(x, y) for x in side_a for y in side_b)
    assert find_induced_complete_bipartite(h23, 2, 2) is not None
    # X(v) of H(2,3) is two disjoint edges, so no claw
    assert find_induced_complete_bipartite(h23, 1, 3) is None


def test_induced_complete_bipartite_is_capped(h23):
    with pytest.raises(ParameterError):
        find_induced_complete_bipartite(h23, 4, 4)
    with pytest.raises(ParameterError):
        find_induced_complete_bipartite(h23, 0, 2)
