from functools import lru_cache

import networkx as nx
import pytest

from src.graphs.model import SimpleGraph
from src.groups.builders import build_group
from src.groups.catalog import builtin_catalog


@lru_cache(maxsize=None)
def _cached_group(spec: str):
    return build_group(spec)


@pytest.fixture(scope="session")
def group_of():
    """Builds (and memoizes) a group from its descriptor."""
    return _cached_group


@pytest.fixture(scope="session")
def catalog16():
    return builtin_catalog(16)


@pytest.fixture(scope="session")
def catalog32():
    return builtin_catalog(32)


@pytest.fixture(scope="session")
def to_networkx():
    """Converts a SimpleGraph into a networkx.Graph for independent checks."""
    def convert(graph: SimpleGraph) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(graph.vcount))
        g.add_edges_from(graph.edges())
        return g
    return convert
