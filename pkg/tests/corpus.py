"""Seeded random graph generators shared by the unit and acceptance tests."""

from __future__ import annotations

import random
from itertools import combinations

from cyclekit.graphs import Multigraph, SimpleGraph


def random_hub_graph(rng: random.Random) -> SimpleGraph:
    """Sparse graph with one dominating hub: max degree in [12, 15], n <= 18.

    Vertex 0 is the hub; the other vertices form a random tree (plus a few
    extra edges), keeping non-hub degrees small so the hub stays the unique
    maximum and exact counting stays cheap.
    """
    n = rng.randrange(14, 19)
    hub_degree = rng.randrange(12, min(15, n - 1) + 1)
    edges = set()
    for v in range(2, n):
        edges.add((rng.randrange(1, v), v))        # random tree on 1..n-1
    targets = rng.sample(range(1, n), hub_degree)
    for t in targets:
        edges.add((0, t))
    for _ in range(rng.randrange(0, 4)):           # a few chords
        a, b = rng.sample(range(1, n), 2)
        edges.add((min(a, b), max(a, b)))
    g = SimpleGraph.from_edges(n, edges)
    degs = g.degrees
    if degs[0] < 12 or max(degs) > degs[0]:
        return random_hub_graph(rng)               # resample rare collisions
    return g


def random_multigraph(rng: random.Random, max_m: int = 10) -> Multigraph:
    n = rng.randrange(2, 7)
    mult = {}
    m = 0
    for e in combinations(range(n), 2):
        if rng.random() < 0.45:
            k = rng.randrange(1, 4)
            if m + k <= max_m:
                mult[e] = k
                m += k
    if not mult:
        mult[(0, 1)] = 1
    return Multigraph(n, mult)
