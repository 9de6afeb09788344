"""Isomorph-free graph enumeration and brute-force extremal search.

Graphs are generated level by level in the edge count: each level's graphs
are extended by one edge (between existing vertices, to a fresh pendant
vertex, or - in unrestricted mode - as a fresh disjoint edge) and reduced to
canonical representatives.  Every connected graph arises this way through
connected intermediates, so per-level canonical dedup yields an exhaustive
isomorph-free listing.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .bounds import BoundParams, ahrens, aldred_thomassen, new_bound
from .counting import count_cycles
from .errors import CapacityError
from .graphs import SimpleGraph, canonical_form, degree_stats, parse_graph6

SEARCH_MAX_EDGES = 14
CORPUS_MAX_N = 8


def _extensions(g: SimpleGraph, max_n: int, allow_new_component: bool,
                delta_cap: int | None):
    """Labeled one-edge extensions of g (as (n, edges-frozenset) pairs)."""
    degs = g.degrees
    out = []
    for u in range(g.n):
        if delta_cap is not None and degs[u] >= delta_cap:
            continue
        for v in range(u + 1, g.n):
            if delta_cap is not None and degs[v] >= delta_cap:
                continue
            if not g.has_edge(u, v):
                out.append((g.n, g.edges | {(u, v)}))
        if g.n < max_n:
            out.append((g.n + 1, g.edges | {(u, g.n)}))
    if allow_new_component and g.n + 2 <= max_n:
        out.append((g.n + 2, g.edges | {(g.n, g.n + 1)}))
    return out


def _canonical_of(item: tuple[int, frozenset]) -> bytes:
    return canonical_form(SimpleGraph(item[0], item[1]))


def _next_level(level: dict[bytes, SimpleGraph], max_n: int,
                allow_new_component: bool, delta_cap: int | None,
                workers: int = 1) -> dict[bytes, SimpleGraph]:
    seen_labeled: set[tuple[int, frozenset]] = set()
    for g in level.values():
        for item in _extensions(g, max_n, allow_new_component, delta_cap):
            seen_labeled.add(item)
    items = sorted(seen_labeled, key=lambda it: (it[0], sorted(it[1])))
    if workers > 1 and len(items) > 64:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            keys = list(pool.map(_canonical_of, items, chunksize=64))
    else:
        keys = [_canonical_of(item) for item in items]
    nxt: dict[bytes, SimpleGraph] = {}
    for key in keys:
        if key not in nxt:
            # store the canonical representative itself: deterministic values
            nxt[key] = parse_graph6(key.decode("ascii"))
    return nxt


def enumerate_graphs_with_edges(m: int, max_n: int, connected: bool = True,
                                delta_cap: int | None = None,
                                workers: int = 1) -> list[SimpleGraph]:
    """All graphs with exactly m edges and no isolated vertices, up to
    isomorphism (connected only, unless connected=False)."""
    if m < 1:
        return []
    k2 = SimpleGraph.from_edges(2, [(0, 1)])
    level = {canonical_form(k2): k2}
    for _ in range(m - 1):
        level = _next_level(level, max_n, not connected, delta_cap, workers)
    return list(level.values())


def enumerate_connected_graphs(max_n: int) -> list[SimpleGraph]:
    """Every connected graph with 1 <= n <= max_n vertices, up to isomorphism."""
    out = [SimpleGraph(1, frozenset())]
    k2 = SimpleGraph.from_edges(2, [(0, 1)])
    level = {canonical_form(k2): k2}
    while level:
        out.extend(level.values())
        level = _next_level(level, max_n, False, None)
    return out


@dataclass(frozen=True)
class ExtremalResult:
    """Exact maximum cycle count over the searched graphs with m edges."""

    m: int
    cmax: int
    witnesses: tuple[SimpleGraph, ...]   # canonically labeled, sorted
    n_range_searched: tuple[int, int]
    prune_max_degree: bool
    prune_min_degree: bool

    @property
    def witness_graph6(self) -> tuple[str, ...]:
        from .graphs import write_graph6
        return tuple(write_graph6(g) for g in self.witnesses)


def extremal_search(m: int, prune_max_degree: bool = False,
                    prune_min_degree: bool = False,
                    workers: int = 1) -> ExtremalResult:
    """Exact max cycle count (with all witnesses) over connected graphs with
    m edges and 3 <= n <= m vertices.

    Witnesses contain at least one cycle, hence at most m vertices, so the
    vertex cap loses nothing; trees and disconnected/pendant-free restrictions
    are NOT applied (the m=7 maximizers include a pendant vertex).  Optional
    prunes: degree cap 11 (sound: any extension only raises degrees) and
    final-level minimum degree 3, applied only for m > 7.
    """
    if not (3 <= m <= SEARCH_MAX_EDGES):
        raise CapacityError(
            f"extremal search supports 3 <= m <= {SEARCH_MAX_EDGES}, got {m}")
    delta_cap = 11 if prune_max_degree else None
    finals = enumerate_graphs_with_edges(m, max_n=m, connected=True,
                                         delta_cap=delta_cap, workers=workers)
    if prune_min_degree and m > 7:
        finals = [g for g in finals if min(g.degrees) >= 3]
    cmax = -1
    witnesses: list[tuple[bytes, SimpleGraph]] = []
    for g in finals:
        c = count_cycles(g)
        if c > cmax:
            cmax = c
            witnesses = [(canonical_form(g), g)]
        elif c == cmax:
            witnesses.append((canonical_form(g), g))
    witnesses.sort(key=lambda kv: kv[0])
    return ExtremalResult(m, cmax, tuple(g for _, g in witnesses), (3, m),
                          prune_max_degree, prune_min_degree)


def max_cycles_unrestricted(m: int) -> int:
    """Max cycle count over ALL graphs with m edges (disconnected allowed,
    any minimum degree; isolated vertices never change the count).  Small m
    only; used to validate the connected restriction of extremal_search."""
    if not (1 <= m <= 8):
        raise CapacityError(f"unrestricted search supports m <= 8, got {m}")
    finals = enumerate_graphs_with_edges(m, max_n=2 * m, connected=False)
    return max(count_cycles(g) for g in finals)


@dataclass(frozen=True)
class RatioProfile:
    """Largest observed count/bound ratio and the graphs attaining it."""

    ratio: Fraction
    attained_by: tuple[str, ...]   # graph6 strings


@dataclass(frozen=True)
class CorpusReport:
    nmax: int
    graphs_checked: int
    violations: tuple[str, ...]
    ahrens: RatioProfile
    aldred_thomassen: RatioProfile
    density_bound_margin: float    # min bound/count over graphs with a cycle


def verify_bounds_on_corpus(nmax: int) -> CorpusReport:
    """Check every closed-form bound on every connected graph with <= nmax
    vertices; reports violations (expected none) and tightness profiles."""
    if nmax > CORPUS_MAX_N:
        raise CapacityError(f"corpus verification capped at n <= {CORPUS_MAX_N}")
    corpus = enumerate_connected_graphs(nmax)
    violations: list[str] = []
    best_ahrens = Fraction(0)
    ahrens_wit: list[str] = []
    best_at = Fraction(0)
    at_wit: list[str] = []
    margin = float("inf")
    checked = 0
    from .graphs import write_graph6
    for g in corpus:
        checked += 1
        c = count_cycles(g)
        lo, hi = ahrens(g.n, g.m, 1)
        if not (lo <= c <= max(hi, 0)):
            violations.append(f"cyclomatic sandwich fails on {write_graph6(g)}")
        if hi > 0:
            r = Fraction(c, hi)
            if r > best_ahrens:
                best_ahrens, ahrens_wit = r, [write_graph6(g)]
            elif r == best_ahrens:
                ahrens_wit.append(write_graph6(g))
        at = aldred_thomassen(g.n, g.m)
        if c > at:
            violations.append(f"connected-bound fails on {write_graph6(g)}")
        if c > 0:
            r = Fraction(c) / at
            if r > best_at:
                best_at, at_wit = r, [write_graph6(g)]
            elif r == best_at:
                at_wit.append(write_graph6(g))
        if g.n >= 2:
            nb = new_bound(BoundParams.from_graph(g))
            if c >= nb:
                violations.append(f"density bound fails on {write_graph6(g)}")
            if c > 0:
                margin = min(margin, float(nb / c))
    return CorpusReport(nmax, checked, tuple(violations),
                        RatioProfile(best_ahrens, tuple(ahrens_wit)),
                        RatioProfile(best_at, tuple(at_wit)),
                        margin)
