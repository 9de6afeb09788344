import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cyclekit.search import enumerate_connected_graphs, enumerate_graphs_with_edges
from cyclekit.graphs import SimpleGraph


@pytest.fixture(scope="session")
def connected_upto_7():
    return enumerate_connected_graphs(7)


@pytest.fixture(scope="session")
def all_graphs_upto_6():
    """Every graph with <= 6 vertices up to isomorphism (isolated vertices
    carry no cycles, so edge-bearing classes plus the empty graphs cover all
    cycle behavior)."""
    out = [SimpleGraph(n, frozenset()) for n in range(7)]
    for m in range(1, 16):
        out.extend(enumerate_graphs_with_edges(m, max_n=6, connected=False))
    return out
