import random
from fractions import Fraction
from itertools import combinations

import pytest

import cyclekit.reduction as reduction
from cyclekit.counting import PairWeights, count_cycles, pair_weights
from cyclekit.errors import DomainError, PreconditionError
from cyclekit.graphs import SimpleGraph, degree_stats
from cyclekit.reduction import (DeletionChoice, Quadripartition,
                                deletion_guarantee, part_sizes,
                                partition_guarantee, reduce_max_degree,
                                reduce_to_bounded_degree, select_deletion_set,
                                select_quadripartition)

from corpus import random_hub_graph


def complete(n):
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


def weights_from_matrix(mat) -> PairWeights:
    k = len(mat)
    return PairWeights(k, tuple(range(k)), tuple(tuple(r) for r in mat))


def random_weights(rng, k, hi=50) -> PairWeights:
    mat = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            mat[i][j] = mat[j][i] = rng.randrange(0, hi)
    return weights_from_matrix(mat)


def uniform_weights(k) -> PairWeights:
    return weights_from_matrix(
        [[0 if i == j else 1 for j in range(k)] for i in range(k)])


def brute_best_deletion(w: PairWeights) -> int:
    best = -1
    total = w.total()
    for d in combinations(range(w.k), 6):
        kept = [i for i in range(w.k) if i not in d]
        retained = sum(w.w[i][j] for a, i in enumerate(kept)
                       for j in kept[a + 1:])
        best = max(best, retained)
    assert best == max(
        total - sum(sum(w.w[i]) for i in d) + sum(w.w[i][j]
                                                  for i, j in combinations(d, 2))
        for d in combinations(range(w.k), 6))
    return best


def brute_best_partition(w: PairWeights) -> int:
    sizes = part_sizes(w.k)
    idx = set(range(w.k))
    best = -1
    for a1 in combinations(sorted(idx), sizes[0]):
        r1 = idx - set(a1)
        for a2 in combinations(sorted(r1), sizes[1]):
            r2 = r1 - set(a2)
            for a3 in combinations(sorted(r2), sizes[2]):
                a4 = tuple(sorted(r2 - set(a3)))
                within = sum(
                    sum(w.w[i][j] for i, j in combinations(part, 2))
                    for part in (a1, a2, a3, a4))
                best = max(best, w.total() - within)
    return best


class TestDeletionSet:
    def test_uniform_meets_guarantee_with_equality(self):
        w = uniform_weights(12)
        choice = select_deletion_set(w)
        assert choice.retained == 15
        assert choice.guarantee == Fraction(15, 66) * 66

    def test_all_zero_weights(self):
        w = weights_from_matrix([[0] * 8 for _ in range(8)])
        choice = select_deletion_set(w)
        assert choice.retained == 0 == choice.guarantee

    def test_exhaustive_matches_brute_force(self):
        rng = random.Random(14)
        for k in (6, 7, 9, 13):
            w = random_weights(rng, k)
            choice = select_deletion_set(w)
            assert choice.exhaustive
            assert choice.retained == brute_best_deletion(w)
            assert choice.retained >= choice.guarantee

    def test_guarantee_formula(self):
        assert deletion_guarantee(12, 66) == 15
        assert deletion_guarantee(13, 1) == 1 - Fraction(6 * 19, 13 * 12)

    def test_needs_six(self):
        with pytest.raises(DomainError):
            select_deletion_set(uniform_weights(5))

    def test_randomized_fallback_certifies(self, monkeypatch):
        monkeypatch.setattr(reduction, "EXHAUSTIVE_LIMIT", 10)
        rng = random.Random(1)
        w = random_weights(rng, 11)
        choice = select_deletion_set(w, random.Random(0))
        assert not choice.exhaustive
        assert choice.retained >= choice.guarantee
        again = select_deletion_set(w, random.Random(0))
        assert again == choice   # deterministic under a fixed seed


class TestQuadripartition:
    def test_part_size_rule(self):
        assert part_sizes(2) == (0, 0, 1, 1)
        assert part_sizes(4) == (1, 1, 1, 1)
        assert part_sizes(6) == (1, 1, 2, 2)
        assert part_sizes(13) == (3, 3, 3, 4)
        for k in range(2, 30):
            assert sum(part_sizes(k)) == k

    def test_singletons_catch_everything(self):
        w = uniform_weights(4)
        q = select_quadripartition(w)
        assert q.cross == 6
        assert q.guarantee == Fraction(44, 48) * 6

    def test_two_elements(self):
        w = weights_from_matrix([[0, 3], [3, 0]])
        q = select_quadripartition(w)
        assert q.cross == 3 == q.guarantee

    def test_exhaustive_matches_brute_force(self):
        rng = random.Random(15)
        for k in (2, 3, 5, 8):
            w = random_weights(rng, k, hi=20)
            q = select_quadripartition(w)
            assert q.exhaustive
            assert q.cross == brute_best_partition(w)
            assert q.cross >= q.guarantee
            assert tuple(len(p) for p in q.parts) == part_sizes(k)
            assert sorted(i for p in q.parts for i in p) == list(range(k))

    def test_randomized_fallback_certifies(self, monkeypatch):
        monkeypatch.setattr(reduction, "EXHAUSTIVE_LIMIT", 5)
        rng = random.Random(2)
        w = random_weights(rng, 9)
        q = select_quadripartition(w, random.Random(0))
        assert not q.exhaustive
        assert q.cross >= q.guarantee
        assert select_quadripartition(w, random.Random(0)) == q

    def test_needs_two(self):
        with pytest.raises(DomainError):
            select_quadripartition(weights_from_matrix([[0]]))


class TestHubReplacement:
    def test_star_gains_the_clique_cycles(self):
        star = SimpleGraph.from_edges(13, [(0, i) for i in range(1, 13)])
        step = reduce_max_degree(star)
        assert step.result.m == star.m
        assert count_cycles(star) == 0
        assert count_cycles(step.result) == 7
        assert step.guaranteed_gain == 7

    def test_wheel_improves(self):
        rim = [(i, i % 12 + 1) for i in range(1, 13)]
        wheel = SimpleGraph.from_edges(13, [(0, i) for i in range(1, 13)] + rim)
        step = reduce_max_degree(wheel)
        before, after = count_cycles(wheel), count_cycles(step.result)
        assert step.result.m == wheel.m
        assert after > before
        assert after - before >= step.guaranteed_gain

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            reduce_max_degree(complete(4))

    def test_random_corpus_improves(self):
        rng = random.Random(404)
        for _ in range(10):
            g = random_hub_graph(rng)
            step = reduce_max_degree(g)
            assert step.result.m == g.m
            assert step.result.n == g.n + 3
            before, after = count_cycles(g), count_cycles(step.result)
            assert after > before
            assert after - before >= step.guaranteed_gain
            assert step.deletion.retained >= step.deletion.guarantee
            assert step.partition.cross >= step.partition.guarantee

    def test_certificates_reference_the_hub_weights(self):
        rng = random.Random(808)
        g = random_hub_graph(rng)
        step = reduce_max_degree(g)
        w = pair_weights(g, step.hub)
        assert step.weight_total == w.total()
        assert step.hub_degree == w.k == degree_stats(g).delta_max
        kept = [i for i in range(w.k) if i not in step.deletion.indices]
        assert len(kept) == w.k - 6
        flat = tuple(v for part in step.part_vertices for v in part)
        assert sorted(flat) == sorted(w.vertices[i] for i in kept)


class TestIteratedReduction:
    def test_identity_when_low_degree(self):
        g = SimpleGraph.from_edges(12, [(0, i) for i in range(1, 12)])
        out = reduce_to_bounded_degree(g)
        assert out.steps == () and out.graph == g

    def test_star_single_step(self):
        star = SimpleGraph.from_edges(13, [(0, i) for i in range(1, 13)])
        out = reduce_to_bounded_degree(star)
        assert len(out.steps) == 1
        assert degree_stats(out.graph).delta_max <= 11

    def test_complete_13(self):
        k13 = complete(13)
        out = reduce_to_bounded_degree(k13)
        assert out.graph.m == 78
        assert degree_stats(out.graph).delta_max <= 11
        assert count_cycles(out.graph) > count_cycles(k13)

    def test_two_hubs(self):
        hub_a = [(0, i) for i in range(2, 14)]
        hub_b = [(1, i) for i in range(2, 14)]
        g = SimpleGraph.from_edges(14, hub_a + hub_b + [(2, 3), (4, 5)])
        out = reduce_to_bounded_degree(g)
        assert degree_stats(out.graph).delta_max <= 11
        assert out.graph.m == g.m
        cur = g
        for step in out.steps:
            nxt = step.result
            assert count_cycles(nxt) > count_cycles(cur)
            cur = nxt
