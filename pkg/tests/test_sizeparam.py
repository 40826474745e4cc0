from __future__ import annotations

from math import factorial

import pytest

from polarkit.graphs import (
    Graph,
    GuardError,
    P3,
    PI_EDGELESS,
    PI_MAX_DEGREE_ONE,
    PI_UNIVERSAL,
    complete_graph,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    is_cluster_graph,
    path_graph,
)
from polarkit.random_graphs import Xorshift64Star, generate_random
from polarkit.sizeparam import (
    LabelState,
    P3Packing,
    SetFamily,
    bsize_bound,
    classify_and_label,
    cluster_delta_bound,
    enumerate_forbidden_sets,
    find_sunflower,
    greedy_p3_packing,
    important_bound,
    kernelize_by_b_size,
    kernelize_cluster_delta,
    sunflower_reduce,
)

from conftest import bsize_partition_exists, minimal_hitting_sets_upto


def random_family(rng, universe, d, max_sets):
    sets = []
    for _ in range(1 + rng.randrange(max_sets)):
        size = 1 + rng.randrange(d)
        s = set()
        while len(s) < size:
            s.add(rng.randrange(universe))
        sets.append(tuple(sorted(s)))
    return SetFamily.build(universe, sets)


class TestForbiddenSets:
    def test_p4(self):
        fam = enumerate_forbidden_sets(path_graph(4), [P3])
        assert fam.sets == ((0, 1, 2), (1, 2, 3)) and fam.d == 3

    def test_k3_p3_free(self):
        fam = enumerate_forbidden_sets(complete_graph(3), [P3])
        assert fam.sets == ()

    def test_edges_as_forbidden_pairs(self):
        fam = enumerate_forbidden_sets(path_graph(3), [path_graph(2)])
        assert fam.sets == ((0, 1), (1, 2)) and fam.d == 2

    def test_guard(self):
        with pytest.raises(GuardError):
            enumerate_forbidden_sets(empty_graph(7), [path_graph(6)])

    def test_empty_sets_rejected(self):
        with pytest.raises(ValueError):
            SetFamily.build(3, [()])


class TestSunflower:
    def test_small_family_untouched(self):
        fam = SetFamily.build(6, [(0, 1), (1, 2)])
        reduced, forced = sunflower_reduce(fam, 1)
        assert reduced.sets == fam.sets and not forced

    def test_three_disjoint_pairs_forced_no(self):
        fam = SetFamily.build(6, [(0, 1), (2, 3), (4, 5)])
        reduced, forced = sunflower_reduce(fam, 1)
        assert forced
        assert minimal_hitting_sets_upto(fam.sets, 6, 1) == set()
        assert minimal_hitting_sets_upto(reduced.sets, 6, 1) == set()

    def test_shared_core_shrinks(self):
        # ten pairs through one center; only {center} hits with one vertex
        sets = [(0, i) for i in range(1, 11)]
        fam = SetFamily.build(11, sets)
        reduced, forced = sunflower_reduce(fam, 1)
        assert len(reduced.sets) <= 2 * (1 + 1) ** 2
        assert minimal_hitting_sets_upto(fam.sets, 11, 1) == {frozenset({0})}
        assert minimal_hitting_sets_upto(reduced.sets, 11, 1) == {frozenset({0})}
        assert not forced

    def test_find_sunflower_returns_valid_structure(self):
        sets = [(0, 1), (0, 2), (0, 3), (4, 5)]
        core, petals = find_sunflower(sets, 3)
        assert core == {0}
        diffs = [p - core for p in petals]
        assert all(diffs) and len(petals) >= 3
        for i in range(len(diffs)):
            for j in range(i + 1, len(diffs)):
                assert not diffs[i] & diffs[j]

    def test_random_contract(self):
        rng = Xorshift64Star(321)
        for _ in range(150):
            universe = 4 + rng.randrange(9)
            fam = random_family(rng, universe, d=3, max_sets=40)
            k = rng.randrange(4)
            reduced, forced = sunflower_reduce(fam, k)
            assert len(reduced.sets) <= factorial(fam.d) * (k + 1) ** fam.d
            assert set(reduced.sets) <= set(fam.sets)
            assert minimal_hitting_sets_upto(
                fam.sets, universe, k
            ) == minimal_hitting_sets_upto(reduced.sets, universe, k)
            if forced:
                assert minimal_hitting_sets_upto(fam.sets, universe, k) == set()


class TestBSizeKernel:
    def test_p5_k1_yes(self):
        kernel, k = kernelize_by_b_size(path_graph(5), 1, [P3])
        assert k == 1
        assert bsize_partition_exists(kernel, 1, [P3], PI_UNIVERSAL)

    def test_p3_free_kernel_empty(self):
        kernel, _ = kernelize_by_b_size(complete_graph(4), 0, [P3])
        assert kernel.n == 0
        assert bsize_partition_exists(kernel, 0, [P3], PI_UNIVERSAL)

    def test_three_p3s_k1_no(self):
        g = disjoint_union([path_graph(3)] * 3)
        kernel, _ = kernelize_by_b_size(g, 1, [P3])
        assert not bsize_partition_exists(kernel, 1, [P3], PI_UNIVERSAL)

    def test_random_equivalence(self):
        rng = Xorshift64Star(1111)
        for _ in range(120):
            n = 1 + rng.randrange(10)
            g = generate_random(n, 0.1 + 0.8 * rng.random(), rng.next_u64())
            for k in range(4):
                kernel, _ = kernelize_by_b_size(g, k, [P3])
                assert kernel.n <= bsize_bound(3, k)
                for pi_b in (PI_UNIVERSAL, PI_EDGELESS, PI_MAX_DEGREE_ONE):
                    assert bsize_partition_exists(
                        g, k, [P3], pi_b
                    ) == bsize_partition_exists(kernel, k, [P3], pi_b)


class TestPacking:
    def test_p3(self):
        assert greedy_p3_packing(path_graph(3)).triples == ((0, 1, 2),)

    def test_k3_empty(self):
        assert greedy_p3_packing(complete_graph(3)).triples == ()

    def test_p6_two_triples(self):
        assert greedy_p3_packing(path_graph(6)).triples == ((0, 1, 2), (3, 4, 5))

    def test_maximality_random(self):
        rng = Xorshift64Star(3131)
        for _ in range(60):
            g = generate_random(1 + rng.randrange(12), 0.4, rng.next_u64())
            packing = greedy_p3_packing(g)
            rest = sorted(set(range(g.n)) - set(packing.v_p))
            sub, _ = induced_subgraph(g, rest)
            assert is_cluster_graph(sub)[0]


class TestLabeling:
    def test_heavy_vertex(self):
        # packing P3 on {0,1,2}; vertex 0 sees three singleton clusters
        k = 1
        g = Graph(6, [(0, 1), (1, 2), (0, 3), (0, 4), (0, 5)])
        labels = classify_and_label(g, greedy_p3_packing(g), k, delta=0)
        assert labels.heavy == (0,)
        assert set(labels.important) == {3, 4, 5}

    def test_nonheavy_fixed_boundary(self):
        # vertex 0 of the packing has exactly delta+2 neighbors and delta+2
        # nonneighbors in the 4-clique {3,4,5,6}
        k = 1
        clique = [(3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]
        g = Graph(7, [(0, 1), (1, 2), (0, 3), (0, 4)] + clique)
        labels = classify_and_label(g, greedy_p3_packing(g), k, delta=0)
        assert labels.nonheavy_fixed == (0,)
        assert set(labels.important) == {3, 4, 5, 6}

    def test_isolated_packing_vertex_labels_nothing(self):
        g = path_graph(3)
        labels = classify_and_label(g, greedy_p3_packing(g), 1, delta=0)
        assert labels.nonfixed == (0, 1, 2)
        assert labels.important == ()

    def test_important_bound(self):
        rng = Xorshift64Star(717)
        for _ in range(40):
            g = generate_random(1 + rng.randrange(12), 0.5, rng.next_u64())
            packing = greedy_p3_packing(g)
            for k in (1, 2, 3):
                if len(packing.triples) > k:
                    continue
                for delta in (0, 1):
                    labels = classify_and_label(g, packing, k, delta)
                    assert len(labels.important) <= important_bound(k, delta)


class TestClusterDeltaKernel:
    def test_two_p3s_reject(self):
        g = disjoint_union([path_graph(3)] * 2)
        res = kernelize_cluster_delta(g, 1, 0)
        assert res.outcome == "reject"

    def test_isolated_padding_removed(self):
        g = disjoint_union([path_graph(3), empty_graph(50)])
        res = kernelize_cluster_delta(g, 1, 0)
        assert res.outcome == "kernel"
        assert res.after == 3
        assert bsize_partition_exists(res.graph, 1, [P3], PI_EDGELESS)

    def test_p3_free_k0(self):
        res = kernelize_cluster_delta(complete_graph(4), 0, 0)
        assert res.outcome == "kernel"
        assert bsize_partition_exists(res.graph, 0, [P3], PI_EDGELESS)

    def test_rules_run_once_in_order(self):
        g = disjoint_union([path_graph(3), empty_graph(5)])
        res = kernelize_cluster_delta(g, 1, 0)
        assert [name for name, _ in res.rule_log] == [
            "packing-size",
            "unimportant-clique",
            "many-unimportant",
        ]

    def test_random_equivalence(self):
        rng = Xorshift64Star(2222)
        for _ in range(120):
            n = 1 + rng.randrange(12)
            g = generate_random(n, 0.1 + 0.8 * rng.random(), rng.next_u64())
            for k in range(4):
                for delta, pi_b in ((0, PI_EDGELESS), (1, PI_MAX_DEGREE_ONE)):
                    res = kernelize_cluster_delta(g, k, delta)
                    want = bsize_partition_exists(g, k, [P3], pi_b)
                    if res.outcome == "reject":
                        assert want is False
                    else:
                        assert res.after <= cluster_delta_bound(k, delta)
                        assert (
                            bsize_partition_exists(res.graph, k, [P3], pi_b) == want
                        )
