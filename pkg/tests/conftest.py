"""Shared fixtures: small distance-regular graphs and an isolated working directory."""

import networkx as nx
import pytest

from src.config import get_settings
from src.core.generators import (
    cocktail_party_graph,
    hamming_graph,
    johnson_graph,
    petersen_graph,
    shrikhande_graph,
)
from src.core.graph import Graph, line_graph
from src.drg.params import check_distance_regular
from src.spectral.eigen import eigen_solve


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    """Event logs land under ./logs; keep them out of the checkout."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("DRG_MAX_GROUP", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def j52() -> Graph:
    return johnson_graph(5, 2)


@pytest.fixture
def h23() -> Graph:
    return hamming_graph(2, 3)


@pytest.fixture
def h24() -> Graph:
    return hamming_graph(2, 4)


@pytest.fixture
def petersen() -> Graph:
    return petersen_graph()


@pytest.fixture
def octahedron() -> Graph:
    return cocktail_party_graph(3)


@pytest.fixture
def shrikhande() -> Graph:
    return shrikhande_graph()


@pytest.fixture
def line_petersen() -> Graph:
    return line_graph(petersen_graph())


@pytest.fixture
def drg_data():
    """(array, profile) for a graph, read off the graph itself."""

    def read(g: Graph):
        arr = check_distance_regular(g)
        return arr, eigen_solve(arr)

    return read


@pytest.fixture
def as_nx():
    return to_nx
