"""Degree-reduction surgery: replace a high-degree hub by a 4-clique of
gateways, preserving the edge count while strictly increasing the cycle count.

Both selection steps (which 6 neighbor indices to cut loose, how to split the
rest four ways) are certified: the returned object always carries its exact
rational averaging guarantee, and the achieved weight is checked against it.
Exhaustive selection runs whenever the candidate space is small enough, so
desk-scale inputs always take the exact path; the randomized fallback retries
until the certificate holds.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .counting import PairWeights, pair_weights
from .errors import CycleKitError, DomainError, PreconditionError
from .graphs import SimpleGraph, degree_stats

EXHAUSTIVE_LIMIT = 10 ** 6
_RESTART_LIMIT = 10_000


class StepLimitExceeded(CycleKitError):
    """Iterated reduction hit its step cap; carries the steps done so far."""

    def __init__(self, message: str, steps):
        super().__init__(message)
        self.steps = steps


@dataclass(frozen=True)
class DeletionChoice:
    """Six weight indices removed from consideration, keeping the most weight."""

    indices: tuple[int, ...]
    retained: int
    guarantee: Fraction
    exhaustive: bool

    def __post_init__(self):
        assert len(self.indices) == 6
        assert self.retained >= self.guarantee


@dataclass(frozen=True)
class Quadripartition:
    """Index partition into four parts of sizes floor((k+l-1)/4), l = 1..4."""

    parts: tuple[tuple[int, ...], ...]
    cross: int
    guarantee: Fraction
    exhaustive: bool

    def __post_init__(self):
        assert len(self.parts) == 4
        assert self.cross >= self.guarantee


def deletion_guarantee(k: int, total: int) -> Fraction:
    return (1 - Fraction(6 * (2 * k - 7), k * (k - 1))) * total


def partition_guarantee(k: int, total: int) -> Fraction:
    return Fraction(3 * k * k - 4, 4 * k * (k - 1)) * total


def part_sizes(k: int) -> tuple[int, int, int, int]:
    return tuple((k + l) // 4 for l in range(4))  # l-1 = 0..3


def select_deletion_set(w: PairWeights, rng: random.Random | None = None) -> DeletionChoice:
    """Pick 6 of the k indices whose removal keeps the most pair weight.

    Exhaustive when C(k, 6) is small; otherwise greedy-seeded swap search with
    random restarts until the averaging guarantee is met.
    """
    k = w.k
    if k < 6:
        raise DomainError(f"deletion set needs k >= 6, got {k}")
    total = w.total()
    guarantee = deletion_guarantee(k, total)
    row = [sum(w.w[i]) for i in range(k)]

    def retained_for(d: tuple[int, ...]) -> int:
        drop = sum(row[i] for i in d)
        inside = sum(w.w[i][j] for i, j in combinations(d, 2))
        return total - drop + inside

    if math.comb(k, 6) <= EXHAUSTIVE_LIMIT:
        best_d = None
        best = -1
        for d in combinations(range(k), 6):
            r = retained_for(d)
            if r > best:
                best, best_d = r, d
        return DeletionChoice(best_d, best, guarantee, True)

    rng = rng or random.Random(0)
    # drop the lightest rows first: they cost the least retained weight
    seed = tuple(sorted(sorted(range(k), key=lambda i: (row[i], i))[:6]))
    d = list(seed)
    for attempt in range(_RESTART_LIMIT):
        improved = True
        cur = retained_for(tuple(d))
        while improved:
            improved = False
            outside = [i for i in range(k) if i not in d]
            for pos in range(6):
                for cand in outside:
                    trial = d.copy()
                    trial[pos] = cand
                    r = retained_for(tuple(trial))
                    if r > cur:
                        d, cur = trial, r
                        improved = True
                        break
                if improved:
                    break
        if cur >= guarantee:
            return DeletionChoice(tuple(sorted(d)), cur, guarantee, False)
        d = rng.sample(range(k), 6)
    raise ArithmeticError("deletion-set search failed to certify its guarantee")


def select_quadripartition(w: PairWeights, rng: random.Random | None = None) -> Quadripartition:
    """Split [k] into four fixed-size parts maximizing cross-part weight
    (exhaustive when feasible, else randomized until certified)."""
    k = w.k
    if k < 2:
        raise DomainError(f"quadripartition needs k >= 2, got {k}")
    total = w.total()
    guarantee = partition_guarantee(k, total)
    sizes = part_sizes(k)
    n_ordered = math.factorial(k)
    for a in sizes:
        n_ordered //= math.factorial(a)

    if n_ordered <= EXHAUSTIVE_LIMIT:
        within = _within_weights(w)
        best = None
        best_cross = -1
        for parts in _fixed_size_partitions(k, sizes):
            cross = total - sum(within[mask] for mask in parts)
            if cross > best_cross:
                best_cross, best = cross, parts
        chosen = tuple(_mask_to_indices(mask) for mask in best)
        return Quadripartition(chosen, best_cross, guarantee, True)

    rng = rng or random.Random(0)
    idx = list(range(k))
    for attempt in range(_RESTART_LIMIT):
        rng.shuffle(idx)
        parts = []
        pos = 0
        for a in sizes:
            parts.append(tuple(sorted(idx[pos:pos + a])))
            pos += a
        cross = total - sum(
            sum(w.w[i][j] for i, j in combinations(p, 2)) for p in parts)
        if cross >= guarantee:
            return Quadripartition(tuple(parts), cross, guarantee, False)
    raise ArithmeticError("quadripartition search failed to certify its guarantee")


def _within_weights(w: PairWeights) -> list[int]:
    """within[mask] = total weight of pairs inside the index set `mask`."""
    k = w.k
    within = [0] * (1 << k)
    for mask in range(1, 1 << k):
        vb = mask & -mask
        v = vb.bit_length() - 1
        rest = mask ^ vb
        extra = 0
        rr = rest
        while rr:
            jb = rr & -rr
            extra += w.w[v][jb.bit_length() - 1]
            rr ^= jb
        within[mask] = within[rest] + extra
    return within


def _fixed_size_partitions(k: int, sizes: tuple[int, ...]):
    """Yield tuples of 4 disjoint index masks covering range(k), |part l| = sizes[l]."""
    full = (1 << k) - 1

    def masks_of(avail: int, size: int):
        bits = _mask_to_indices(avail)
        for combo in combinations(bits, size):
            m = 0
            for b in combo:
                m |= 1 << b
            yield m

    for m1 in masks_of(full, sizes[0]):
        r1 = full ^ m1
        for m2 in masks_of(r1, sizes[1]):
            r2 = r1 ^ m2
            for m3 in masks_of(r2, sizes[2]):
                yield (m1, m2, m3, r2 ^ m3)


def _mask_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


@dataclass(frozen=True)
class ReductionStep:
    """One hub replacement, with everything needed to audit it."""

    result: SimpleGraph
    hub: int
    hub_degree: int
    neighbors: tuple[int, ...]
    weight_total: int
    deletion: DeletionChoice
    partition: Quadripartition
    part_vertices: tuple[tuple[int, ...], ...]   # original labels per gateway
    gateway_vertices: tuple[int, int, int, int]  # labels in the result graph

    @property
    def guaranteed_gain(self) -> int:
        """Certified floor for C(result) - C(input): rerouted weight plus four
        detours per cross pair plus the 7 gateway-clique cycles, minus the
        weight lost with the hub."""
        return (self.deletion.retained + 4 * self.partition.cross + 7
                - self.weight_total)


def reduce_max_degree(g: SimpleGraph, rng: random.Random | None = None) -> ReductionStep:
    """Replace one maximum-degree hub (degree >= 12) as follows: delete it,
    add four pairwise-adjacent gateways, attach each retained neighbor to its
    part's gateway.  Edge count is preserved; the cycle count strictly grows.

    Vertices keep their order with labels above the hub shifted down by one;
    the gateways take the four highest labels of the result.
    """
    stats = degree_stats(g)
    if stats.delta_max < 12:
        raise PreconditionError(
            f"hub replacement needs a vertex of degree >= 12, max is {stats.delta_max}")
    hub = g.degrees.index(stats.delta_max)
    w = pair_weights(g, hub)
    k = w.k
    choice = select_deletion_set(w, rng)
    kept = [i for i in range(k) if i not in choice.indices]
    sub = PairWeights(
        k - 6,
        tuple(w.vertices[i] for i in kept),
        tuple(tuple(w.w[i][j] for j in kept) for i in kept),
    )
    quad = select_quadripartition(sub, rng)
    part_vertices = tuple(tuple(sub.vertices[i] for i in part) for part in quad.parts)

    def relabel(x: int) -> int:
        return x if x < hub else x - 1

    edges = [(relabel(a), relabel(b)) for a, b in g.edges if hub not in (a, b)]
    base = g.n - 1
    gateways = (base, base + 1, base + 2, base + 3)
    for gi, members in zip(gateways, part_vertices):
        for x in members:
            edges.append((relabel(x), gi))
    for a, b in combinations(gateways, 2):
        edges.append((a, b))
    h = SimpleGraph.from_edges(g.n + 3, edges)
    assert h.m == g.m
    return ReductionStep(h, hub, k, w.vertices, w.total(), choice, quad,
                         part_vertices, gateways)


@dataclass(frozen=True)
class ReductionOutcome:
    graph: SimpleGraph
    steps: tuple[ReductionStep, ...]


def reduce_to_bounded_degree(g: SimpleGraph, seed: int = 0,
                             step_cap: int | None = None) -> ReductionOutcome:
    """Apply hub replacements until the maximum degree drops to 11 or less.

    Termination within the cap (default: the edge count) is checked, not
    assumed; hitting the cap raises StepLimitExceeded with the step history.
    """
    rng = random.Random(seed)
    cap = step_cap if step_cap is not None else max(g.m, 1)
    steps: list[ReductionStep] = []
    cur = g
    while cur.n > 0 and degree_stats(cur).delta_max >= 12:
        if len(steps) >= cap:
            raise StepLimitExceeded(
                f"degree reduction did not finish within {cap} steps", tuple(steps))
        step = reduce_max_degree(cur, rng)
        steps.append(step)
        cur = step.result
    return ReductionOutcome(cur, tuple(steps))
