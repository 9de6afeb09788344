"""Exact counting of simple cycles and simple paths.

All counts are plain Python ints (arbitrary precision).  Two independent
strategies are provided for simple graphs: a visited-bitmask DFS that
enumerates rooted paths, and a subset dynamic program that merges paths by
(vertex set, endpoint) and is far faster on dense graphs.  Multigraph cycle
counts run on the underlying simple graph with per-cycle multiplicity
products; two-vertex cycles use the binomial closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from concurrent.futures import ProcessPoolExecutor

from .errors import CapacityError, DomainError
from .graphs import Multigraph, SimpleGraph

# Above this vertex count the subset DP's mask table is no longer worthwhile.
_DP_MAX_N = 20


def count_cycles(g: SimpleGraph, method: str = "auto", workers: int = 1) -> int:
    """Number of simple cycles (cycle = vertex set supporting one, length >= 3).

    method: "auto" picks the subset DP for n <= 20, else the rooted DFS;
    "dfs" / "dp" force a strategy.  workers > 1 splits DFS roots across
    processes (results are identical for any worker count).
    """
    if method == "auto":
        method = "dp" if g.n <= _DP_MAX_N else "dfs"
    if method == "dp":
        return _count_cycles_dp(g.n, g.adj)
    if method == "dfs":
        if workers > 1 and g.n > 2:
            return _count_cycles_dfs_parallel(g, workers)
        return sum(_dfs_root_cycles(g.adj, r) for r in range(g.n))
    raise ValueError(f"unknown method {method!r}")


def _dfs_root_cycles(adj: tuple[int, ...], root: int) -> int:
    """Cycles whose minimum vertex is root: DFS over vertices > root.

    A cycle root, a, ..., b, root is counted once, at a < b (the two traversal
    directions are separated structurally, not by halving at the end).
    """
    total = 0
    above = ~((1 << (root + 1)) - 1)
    rbit = 1 << root
    start_mask = adj[root] & above

    def extend(v: int, visited: int, first: int) -> None:
        nonlocal total
        av = adj[v]
        if (av & rbit) and v > first:
            total += 1
        ext = av & ~visited & above
        while ext:
            wb = ext & -ext
            extend(wb.bit_length() - 1, visited | wb, first)
            ext &= ext - 1

    starts = start_mask
    while starts:
        fb = starts & -starts
        first = fb.bit_length() - 1
        # depth-2 prefix: root, first, w; closures only checked from depth 2 on
        ext = adj[first] & above & ~fb
        while ext:
            wb = ext & -ext
            extend(wb.bit_length() - 1, rbit | fb | wb, first)
            ext &= ext - 1
        starts &= starts - 1
    return total


def _count_cycles_dfs_parallel(g: SimpleGraph, workers: int) -> int:
    roots = list(range(g.n))
    chunks = [roots[i::workers] for i in range(workers)]
    args = [(g.adj, c) for c in chunks if c]
    with ProcessPoolExecutor(max_workers=len(args)) as pool:
        return sum(pool.map(_dfs_root_worker, args))


def _dfs_root_worker(arg: tuple[tuple[int, ...], list[int]]) -> int:
    adj, roots = arg
    return sum(_dfs_root_cycles(adj, r) for r in roots)


def _count_cycles_dp(n: int, adj: tuple[int, ...]) -> int:
    """Subset DP: paths[mask][v] = #simple paths min(mask)->v spanning mask.

    Each cycle is seen twice (once per direction) from its minimum vertex;
    the doubled total is halved at the end, which is safe for simple graphs
    where every cycle has two distinct traversals.
    """
    paths: list[dict[int, int] | None] = [None] * (1 << n)
    for r in range(n):
        paths[1 << r] = {r: 1}
    doubled = 0
    for mask in range(1, 1 << n):
        row = paths[mask]
        if row is None:
            continue
        rbit = mask & -mask
        long_enough = mask.bit_count() >= 3
        low = rbit | (rbit - 1)
        for v, cnt in row.items():
            av = adj[v]
            if long_enough and (av & rbit):
                doubled += cnt
            ext = av & ~mask & ~low
            while ext:
                wb = ext & -ext
                nxt = paths[mask | wb]
                if nxt is None:
                    nxt = {}
                    paths[mask | wb] = nxt
                w = wb.bit_length() - 1
                nxt[w] = nxt.get(w, 0) + cnt
                ext &= ext - 1
    assert doubled % 2 == 0
    return doubled // 2


def count_cycles_multi(g: Multigraph) -> int:
    """Cycles in a multigraph: vertex-simple cycles weighted by multiplicity
    products, plus binom(mult, 2) two-vertex cycles per parallel pair."""
    total = sum(math.comb(k, 2) for k in g.mult.values())
    adj = g.adj
    mult = g.mult

    def medge(a: int, b: int) -> int:
        return mult[(a, b) if a < b else (b, a)]

    for root in range(g.n):
        above = ~((1 << (root + 1)) - 1)
        rbit = 1 << root

        def extend(v: int, visited: int, first: int, weight: int) -> int:
            sub = 0
            av = adj[v]
            if (av & rbit) and v > first:
                sub += weight * medge(v, root)
            ext = av & ~visited & above
            while ext:
                wb = ext & -ext
                w = wb.bit_length() - 1
                sub += extend(w, visited | wb, first, weight * medge(v, w))
                ext &= ext - 1
            return sub

        starts = adj[root] & above
        while starts:
            fb = starts & -starts
            first = fb.bit_length() - 1
            wf = medge(root, first)
            ext = adj[first] & above & ~fb
            while ext:
                wb = ext & -ext
                w = wb.bit_length() - 1
                total += extend(w, rbit | fb | wb, first, wf * medge(first, w))
                ext &= ext - 1
            starts &= starts - 1
    return total


def count_paths(g: SimpleGraph | Multigraph, s: int, t: int) -> int:
    """Simple paths s -> t; in multigraphs each path counts with the product
    of edge multiplicities along it."""
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise DomainError(f"vertices {s},{t} out of range for n={g.n}")
    if s == t:
        raise DomainError("path endpoints must differ")
    if isinstance(g, SimpleGraph) and g.n <= _DP_MAX_N:
        return _paths_from(g.n, g.adj, s)[t]
    adj = g.adj
    weighted = isinstance(g, Multigraph)
    mult = g.mult if weighted else {}
    tbit = 1 << t

    def extend(v: int, visited: int, weight: int) -> int:
        sub = 0
        ext = adj[v] & ~visited
        while ext:
            wb = ext & -ext
            w = wb.bit_length() - 1
            step = weight * mult[(v, w) if v < w else (w, v)] if weighted else weight
            if wb == tbit:
                sub += step
            else:
                sub += extend(w, visited | wb, step)
            ext &= ext - 1
        return sub

    return extend(s, 1 << s, 1)


def _paths_from(n: int, adj: tuple[int, ...], s: int,
                forbidden: int = 0) -> list[int]:
    """out[t] = number of simple paths s -> t avoiding `forbidden` vertices
    (subset DP over (visited set, endpoint); out[s] stays 0)."""
    paths: list[dict[int, int] | None] = [None] * (1 << n)
    paths[1 << s] = {s: 1}
    out = [0] * n
    for mask in range(1 << s, 1 << n):
        row = paths[mask]
        if row is None:
            continue
        for v, cnt in row.items():
            if v != s:
                out[v] += cnt
            ext = adj[v] & ~mask & ~forbidden
            while ext:
                wb = ext & -ext
                nxt = paths[mask | wb]
                if nxt is None:
                    nxt = {}
                    paths[mask | wb] = nxt
                w = wb.bit_length() - 1
                nxt[w] = nxt.get(w, 0) + cnt
                ext &= ext - 1
    return out


@dataclass(frozen=True)
class PairWeights:
    """Symmetric path counts between the k neighbors of a removed vertex.

    vertices[i] is the i-th neighbor in increasing vertex order; w[i][j] is
    the number of simple paths between neighbors i and j avoiding the hub.
    """

    k: int
    vertices: tuple[int, ...]
    w: tuple[tuple[int, ...], ...]

    def total(self) -> int:
        """S = sum of w[i][j] over i < j."""
        return sum(self.w[i][j] for i in range(self.k) for j in range(i + 1, self.k))


def pair_weights(g: SimpleGraph, u: int) -> PairWeights:
    """w[i][j] = number of simple paths between neighbors i and j of u in g - u."""
    if not (0 <= u < g.n):
        raise DomainError(f"vertex {u} out of range for n={g.n}")
    nbrs = g.neighbors[u]
    k = len(nbrs)
    w = [[0] * k for _ in range(k)]
    if g.n <= _DP_MAX_N:
        for i in range(k - 1):
            per_target = _paths_from(g.n, g.adj, nbrs[i], forbidden=1 << u)
            for j in range(i + 1, k):
                w[i][j] = w[j][i] = per_target[nbrs[j]]
    else:
        h = g.without_vertex(u)
        for i in range(k):
            for j in range(i + 1, k):
                w[i][j] = w[j][i] = count_paths(h, nbrs[i], nbrs[j])
    return PairWeights(k, nbrs, tuple(tuple(r) for r in w))


def cycles_through_vertex(g: SimpleGraph, u: int) -> int:
    """Cycles containing u, as count_cycles(g) - count_cycles(g - u)."""
    if not (0 <= u < g.n):
        raise DomainError(f"vertex {u} out of range for n={g.n}")
    if g.degrees[u] <= 1:
        return 0
    return count_cycles(g) - count_cycles(g.without_vertex(u))


def iter_cycles(g: SimpleGraph, limit: int = 10**6):
    """Debug listing of cycles as vertex tuples (root first, smaller-neighbor
    direction).  Raises CapacityError beyond `limit` cycles."""
    adj = g.adj
    emitted = 0
    for root in range(g.n):
        above = ~((1 << (root + 1)) - 1)
        rbit = 1 << root
        path = [root]

        def extend(v: int, visited: int, first: int):
            nonlocal emitted
            av = adj[v]
            if (av & rbit) and v > first:
                emitted += 1
                if emitted > limit:
                    raise CapacityError(f"more than {limit} cycles")
                yield tuple(path)
            ext = av & ~visited & above
            while ext:
                wb = ext & -ext
                w = wb.bit_length() - 1
                path.append(w)
                yield from extend(w, visited | wb, first)
                path.pop()
                ext &= ext - 1

        starts = adj[root] & above
        while starts:
            fb = starts & -starts
            first = fb.bit_length() - 1
            path.append(first)
            ext = adj[first] & above & ~fb
            while ext:
                wb = ext & -ext
                w = wb.bit_length() - 1
                path.append(w)
                yield from extend(w, rbit | fb | wb, first)
                path.pop()
                ext &= ext - 1
            path.pop()
            starts &= starts - 1
