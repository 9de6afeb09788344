"""Generators for the extremal graph families, with their count guarantees.

Vertex labeling conventions (fixed, relied on by tests and the CLI):
  ladder(n):   rail A vertex i  -> label i-1   (i = 1..n+1)
               rail B vertex i  -> label n+i   (i = 1..n+1)
  looped(n):   ladder(n) with labels 0 and n merged into 0; labels above n
               shift down by one.
  multi cycle: cycle vertices 0..n-1 in order, heavier pairs first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .counting import count_paths
from .errors import DomainError
from .graphs import Multigraph, SimpleGraph

# Exact enumeration is used up to this rung count; beyond it the two-term
# recurrence (seeded from enumerated values) takes over.
_ENUMERATE_MAX = 8


@dataclass(frozen=True)
class LadderSpec:
    """Rung parameter for the braced-ladder family: 2n+2 vertices, 5n+1 edges."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"ladder needs n >= 1, got {self.n}")

    @property
    def vertex_count(self) -> int:
        return 2 * self.n + 2

    @property
    def edge_count(self) -> int:
        return 5 * self.n + 1


def construct_hn(n: int) -> SimpleGraph:
    """Braced ladder: rails a_1..a_{n+1}, b_1..b_{n+1}; rungs a_i b_j for
    |i-j| <= 1 plus both rails' consecutive edges.  5n+1 edges total."""
    spec = LadderSpec(n)
    edges = []
    for i in range(1, n + 2):
        for j in (i - 1, i, i + 1):
            if 1 <= j <= n + 1:
                edges.append((i - 1, n + j))
    for i in range(1, n + 1):
        edges.append((i - 1, i))          # a_i a_{i+1}
        edges.append((n + i, n + i + 1))  # b_i b_{i+1}
    g = SimpleGraph.from_edges(spec.vertex_count, edges)
    assert g.m == spec.edge_count
    return g


def path_count_P(n: int) -> int:
    """Number of simple end-to-end rail paths (a_1 to a_{n+1}) in the braced
    ladder; enumerated exactly for small n, extended by the recurrence
    P(n) = 4 P(n-1) + 4 P(n-2) seeded from enumerated values."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if n <= _ENUMERATE_MAX:
        return _enumerated_path_count(n)
    p_prev, p_cur = _enumerated_path_count(1), _enumerated_path_count(2)
    for _ in range(3, n + 1):
        p_prev, p_cur = p_cur, 4 * p_cur + 4 * p_prev
    return p_cur


def _enumerated_path_count(n: int) -> int:
    return count_paths(construct_hn(n), 0, n)


def construct_gn(n: int) -> SimpleGraph:
    """Braced ladder with its two end rail-A vertices identified: 2n+1
    vertices, 5n+1 edges, still simple (the endpoint neighborhoods are
    disjoint once n >= 3)."""
    if n < 3:
        raise DomainError(f"end identification needs n >= 3, got {n}")
    h = construct_hn(n)
    edges = []
    for u, v in h.edges:
        u2 = 0 if u == n else (u if u < n else u - 1)
        v2 = 0 if v == n else (v if v < n else v - 1)
        edges.append((u2, v2))
    g = SimpleGraph.from_edges(h.n - 1, edges)
    assert g.m == h.m  # no parallel collisions for n >= 3
    return g


def gn_cycle_floor(n: int) -> int:
    """Exact integer floor guarantee ceil((2+2*sqrt(2))**n) for the looped
    ladder's cycle count."""
    from .rounding import ceil_silver_pow
    return ceil_silver_pow(n)


def construct_lower_bound_graph(m: int) -> SimpleGraph:
    """Graph with exactly m edges built from the looped ladder with rung count
    floor((m-1)/5), plus a pendant path carrying the leftover 0..4 edges
    (pendant edges join no cycle, so the count guarantee is preserved)."""
    if m < 16:
        raise DomainError(f"need m >= 16, got {m}")
    n = (m - 1) // 5
    g = construct_gn(n)
    leftover = m - (5 * n + 1)
    edges = set(g.edges)
    nv = g.n
    anchor = 0
    for _ in range(leftover):
        edges.add((anchor, nv))
        anchor = nv
        nv += 1
    out = SimpleGraph.from_edges(nv, edges)
    assert out.m == m
    return out


@dataclass(frozen=True)
class MultiCycleSpec:
    """Cycle of length n carrying m edges: multiplicities floor(m/n) or
    floor(m/n)+1, the heavier ones on consecutive cycle edges from (0,1)."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"cycle length must be >= 2, got {self.n}")
        if self.m < self.n:
            raise DomainError(f"need m >= n, got m={self.m} < n={self.n}")

    def multiplicities(self) -> tuple[int, ...]:
        """Per cycle-edge multiplicity, edge i joining vertices i, i+1 mod n."""
        q, r = divmod(self.m, self.n)
        return (q + 1,) * r + (q,) * (self.n - r)


def construct_cnm(spec: MultiCycleSpec) -> Multigraph:
    mults = spec.multiplicities()
    pairs: dict[tuple[int, int], int] = {}
    for i, k in enumerate(mults):
        u, v = i, (i + 1) % spec.n
        key = (min(u, v), max(u, v))
        pairs[key] = pairs.get(key, 0) + k  # n=2 folds both slots onto one pair
    return Multigraph(spec.n, pairs)


def cnm_cycle_count(spec: MultiCycleSpec) -> int:
    """Closed-form cycle count of the multi-edge cycle: the long cycle in all
    multiplicity combinations plus one 2-cycle per parallel pair."""
    if spec.n == 2:
        return math.comb(spec.m, 2)
    mults = spec.multiplicities()
    prod = 1
    for k in mults:
        prod *= k
    return prod + sum(math.comb(k, 2) for k in mults)
