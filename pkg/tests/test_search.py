import math
from itertools import combinations

import pytest

from cyclekit.bounds import corollary_bound
from cyclekit.counting import count_cycles
from cyclekit.errors import CapacityError
from cyclekit.graphs import SimpleGraph, canonical_form, is_connected
from cyclekit.search import (enumerate_connected_graphs,
                             enumerate_graphs_with_edges, extremal_search,
                             max_cycles_unrestricted, verify_bounds_on_corpus)

from oracles import automorphism_count, labeled_connected_count, labeled_graphs


def complete(n):
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


class TestEnumeration:
    def test_connected_class_counts(self, connected_upto_7):
        by_n = {}
        for g in connected_upto_7:
            by_n[g.n] = by_n.get(g.n, 0) + 1
        assert by_n == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}

    def test_connectivity_and_uniqueness(self, connected_upto_7):
        forms = set()
        for g in connected_upto_7:
            assert is_connected(g)
            forms.add(canonical_form(g))
        assert len(forms) == len(connected_upto_7)

    def test_orbit_counting_matches_labeled_recurrence(self, connected_upto_7):
        # sum over classes of n!/|Aut| must equal the labeled connected count
        for n in range(1, 7):
            classes = [g for g in connected_upto_7 if g.n == n]
            labeled = sum(math.factorial(n) // automorphism_count(g)
                          for g in classes)
            assert labeled == labeled_connected_count(n)

    def test_by_edges_matches_labeled_dedup_connected(self):
        for m in range(1, 6):
            mine = enumerate_graphs_with_edges(m, max_n=m + 1, connected=True)
            seen = set()
            for n in range(2, m + 2):
                for g in labeled_graphs(n, m):
                    if min(g.degrees) >= 1 and is_connected(g):
                        seen.add(canonical_form(g))
            assert {canonical_form(g) for g in mine} == seen

    def test_by_edges_matches_labeled_dedup_unrestricted(self):
        for m in range(1, 5):
            mine = enumerate_graphs_with_edges(m, max_n=2 * m, connected=False)
            seen = set()
            for n in range(2, 2 * m + 1):
                for g in labeled_graphs(n, m):
                    if g.degrees and min(g.degrees) >= 1:
                        seen.add(canonical_form(g))
            assert {canonical_form(g) for g in mine} == seen


class TestExtremalSearch:
    def test_three_edges(self):
        res = extremal_search(3)
        assert res.cmax == 1
        assert [canonical_form(w) for w in res.witnesses] == [
            canonical_form(complete(3))]

    def test_six_edges(self):
        res = extremal_search(6)
        assert res.cmax == 7
        assert [canonical_form(w) for w in res.witnesses] == [
            canonical_form(complete(4))]

    def test_seven_edges_witness_pair(self):
        res = extremal_search(7)
        assert res.cmax == 7
        with_pendant = SimpleGraph.from_edges(
            5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
        subdivided = SimpleGraph.from_edges(
            5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)])
        want = sorted((canonical_form(with_pendant), canonical_form(subdivided)))
        assert sorted(canonical_form(w) for w in res.witnesses) == want

    def test_witnesses_recount_and_canonicalize_uniquely(self):
        for m in (5, 8):
            res = extremal_search(m)
            forms = set()
            for w in res.witnesses:
                assert w.m == m
                assert count_cycles(w) == res.cmax
                forms.add(canonical_form(w))
            assert len(forms) == len(res.witnesses)

    @pytest.mark.parametrize("m", range(3, 9))
    def test_prune_soundness_small(self, m):
        plain = extremal_search(m)
        pruned = extremal_search(m, prune_max_degree=True, prune_min_degree=True)
        assert plain.cmax == pruned.cmax
        assert [w.edges for w in plain.witnesses] == [w.edges for w in pruned.witnesses]

    @pytest.mark.parametrize("m", range(3, 9))
    def test_connected_restriction_loses_nothing(self, m):
        assert extremal_search(m).cmax == max_cycles_unrestricted(m)

    def test_below_corollary_bound(self):
        for m in range(3, 9):
            assert extremal_search(m).cmax < corollary_bound(m).value

    def test_workers_equivalent(self):
        a = extremal_search(7, workers=1)
        b = extremal_search(7, workers=2)
        assert a == b

    def test_capacity(self):
        with pytest.raises(CapacityError):
            extremal_search(2)
        with pytest.raises(CapacityError):
            extremal_search(15)
        with pytest.raises(CapacityError):
            max_cycles_unrestricted(9)


class TestCorpusVerification:
    def test_small(self):
        rep = verify_bounds_on_corpus(4)
        assert rep.violations == ()
        assert rep.ahrens.ratio == 1
        tight = {canonical_form(complete(3)).decode(),
                 canonical_form(complete(4)).decode()}
        assert tight <= set(rep.ahrens.attained_by)

    def test_six_vertices_adds_bipartite_witness(self):
        rep = verify_bounds_on_corpus(6)
        assert rep.violations == ()
        assert rep.ahrens.ratio == 1
        k33 = SimpleGraph.from_edges(6, [(a, b) for a in range(3)
                                         for b in range(3, 6)])
        k4e = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        names = set(rep.ahrens.attained_by)
        assert canonical_form(k33).decode() in names
        assert canonical_form(k4e).decode() in names
        assert rep.aldred_thomassen.ratio <= 1

    def test_capacity(self):
        with pytest.raises(CapacityError):
            verify_bounds_on_corpus(9)
