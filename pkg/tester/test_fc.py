# -*- coding: utf-8 -*-

from unittest import TestCase, main

from fcover.errors import InstanceError, InvalidForestError, UsageError
from fcover.exact import exact_fc
from fcover.fc import (
    DualCertificate,
    FcResult,
    check_dual_feasibility,
    experiment_count,
    forest_cover_binary,
    lp_rounding_fc,
    primal_vectors,
    randomized_fc,
    round_solution,
    run_experiment,
    split_by_weight,
)
from fcover.fc.rounding import RoundingStats
from fcover.generators import (
    KIND_GNP_BINARY,
    KIND_GNP_UNIFORM,
    GeneratorParams,
    generate,
)
from fcover.graph import Forest, Graph, Tree, is_forest_cover
from fcover.lp import FractionalSolution
from fcover.system.environ import environ_flag
from tester.graphs import (
    atlas_graphs,
    binary_weightings,
    cycle_graph,
    path_graph,
    random_graphs,
    triangle,
)

FULL = environ_flag("FULL_ACCEPTANCE")


class FcResultTestCase(TestCase):
    def test_rejects_non_cover(self):
        with self.assertRaises(InvalidForestError):
            FcResult.build(path_graph([1.0, 1.0]), Forest.of([Tree.singleton(0)]), "x")

    def test_rejects_bound_above_value(self):
        graph = path_graph([1.0])
        forest = Forest.of([Tree.singleton(0)])
        with self.assertRaises(InvalidForestError):
            FcResult.build(graph, forest, "x", lower_bound=2.0)

    def test_vectors(self):
        graph = path_graph([0.0, 1.0])
        forest = Forest.of([Tree.of([0, 1], [0])])
        self.assertEqual(((1, 1, 0), (1, 0)), primal_vectors(graph, forest))
        covering = Forest.of([Tree.of([0, 1], [0]), Tree.of([2])])
        result = FcResult.build(graph, covering, "x")
        self.assertEqual(((1, 1, 1), (1, 0)), result.vectors(graph))


class BinaryTestCase(TestCase):
    def test_path_unit_weights(self):
        result, certificate = forest_cover_binary(path_graph([1.0, 1.0]))
        self.assertEqual(2.0, result.wi)
        self.assertEqual(1.0, certificate.bound)
        self.assertEqual(2.0, result.ratio())
        self.assertEqual(1.0, exact_fc(path_graph([1.0, 1.0]))[1])

    def test_free_triangle(self):
        result, certificate = forest_cover_binary(triangle(0.0))
        self.assertEqual(1.0, result.wi)
        self.assertEqual(1.0, certificate.bound)
        self.assertEqual(1, result.k)

    def test_mixed_path(self):
        graph = path_graph([0.0, 1.0])
        self.assertEqual(([0, 1], [2]), split_by_weight(graph))
        result, _ = forest_cover_binary(graph)
        self.assertEqual(Forest.of([Tree.of([0, 1], [0])]), result.forest)
        self.assertEqual(1.0, result.wi)
        self.assertEqual(0, result.diagnostics["matching"])

    def test_non_binary(self):
        with self.assertRaises(InstanceError):
            forest_cover_binary(path_graph([0.5]))

    def test_edgeless(self):
        result, certificate = forest_cover_binary(Graph(3))
        self.assertEqual(0.0, result.wi)
        self.assertEqual(0.0, certificate.bound)

    def assert_binary_bounds(self, graph: Graph):
        result, certificate = forest_cover_binary(graph)
        optimum = exact_fc(graph)[1]
        self.assertTrue(is_forest_cover(graph, result.forest))
        self.assertTrue(check_dual_feasibility(graph, certificate))
        self.assertTrue(certificate.sets_disjoint())
        self.assertLessEqual(certificate.bound, optimum + 1e-9)
        self.assertLessEqual(result.wi, 2.0 * optimum + 1e-9)
        self.assertEqual(
            result.wi,
            result.diagnostics["components"] + 2 * result.diagnostics["matching"],
        )

    def test_certificate_and_ratio(self):
        count = 60 if FULL else 20
        for graph in random_graphs(count, 7, p=0.4, seed=19, binary=True):
            self.assert_binary_bounds(graph)

    def test_every_weighting_of_small_connected_graphs(self):
        for topology in atlas_graphs(6 if FULL else 4, connected_only=True):
            for graph in binary_weightings(topology):
                self.assert_binary_bounds(graph)

    def test_generated_binary_instances(self):
        count = 500 if FULL else 24
        for seed in range(count):
            params = GeneratorParams(n=3 + seed % 6, p=0.5)
            self.assert_binary_bounds(generate(KIND_GNP_BINARY, params, seed))


class DualTestCase(TestCase):
    def test_zero_certificate(self):
        certificate = DualCertificate()
        self.assertTrue(check_dual_feasibility(triangle(), certificate))
        self.assertEqual(0.0, certificate.bound)

    def test_set_on_free_edge(self):
        certificate = DualCertificate.from_sets([[0, 1]])
        self.assertTrue(check_dual_feasibility(path_graph([0.0]), certificate))
        self.assertEqual(1.0, certificate.bound)

    def test_overloaded_vertex(self):
        certificate = DualCertificate(z_e={0: 1.0}, z_sets=((frozenset({0, 1}), 1.0),))
        self.assertFalse(check_dual_feasibility(path_graph([0.0]), certificate))

    def test_uncovered_linkage(self):
        certificate = DualCertificate(z_e={0: 1.0})
        self.assertFalse(check_dual_feasibility(path_graph([0.0]), certificate))
        linked = DualCertificate(z_e={0: 0.5}, z_ue={(0, 0): 0.5, (1, 0): 0.5})
        self.assertTrue(check_dual_feasibility(path_graph([0.0]), linked))

    def test_negative_value(self):
        certificate = DualCertificate(z_e={0: -0.5})
        self.assertFalse(check_dual_feasibility(path_graph([1.0]), certificate))


class RandomizedTestCase(TestCase):
    def test_experiment_count(self):
        self.assertEqual(8, experiment_count(1, 0.5))
        self.assertEqual(1, experiment_count(0, 1.0))
        with self.assertRaises(UsageError):
            experiment_count(1, 0.0)
        with self.assertRaises(UsageError):
            experiment_count(1, 1.5)

    def test_half_edge(self):
        result = randomized_fc(path_graph([0.5]), 0.5, seed=7)
        self.assertAlmostEqual(1.5, result.wi)
        self.assertIsNone(result.lower_bound)
        self.assertEqual("2+epsilon", result.diagnostics["guarantee"])

    def test_deterministic(self):
        graph = random_graphs(1, 7, p=0.5, seed=3)[0]
        first = randomized_fc(graph, 0.9, seed=5)
        second = randomized_fc(graph, 0.9, seed=5)
        self.assertEqual(first.forest, second.forest)
        self.assertEqual(first.wi, second.wi)

    def test_degenerate_weights_draw_fixed(self):
        graph = path_graph([0.0, 1.0])
        for index in range(5):
            self.assertEqual((1, 0), run_experiment(graph, 3, index).draws)

    def test_capped_run_is_heuristic(self):
        graph = cycle_graph([0.3] * 5)
        result = randomized_fc(graph, 0.5, seed=1, max_experiments=4)
        self.assertEqual(4, result.diagnostics["experiments"])
        self.assertTrue(result.diagnostics["capped"])
        self.assertEqual("heuristic", result.diagnostics["guarantee"])

    def test_bad_arguments(self):
        with self.assertRaises(UsageError):
            randomized_fc(path_graph([0.5]), 0.5, seed=-1)
        with self.assertRaises(UsageError):
            randomized_fc(path_graph([0.5]), 0.5, seed=0, max_experiments=0)

    def test_feasible_on_small_graphs(self):
        count = 10 if FULL else 3
        for graph in random_graphs(count, 6, p=0.5, seed=37):
            result = randomized_fc(graph, 1.0, seed=2)
            optimum = exact_fc(graph)[1]
            self.assertGreaterEqual(result.wi, optimum - 1e-9)
            self.assertLessEqual(result.wi, graph.n + 1e-9)
            self.assertGreater(result.diagnostics["mean_dual_bound"], -1e-9)

    def test_epsilon_half_within_bound(self):
        count = 200 if FULL else 10
        misses = 0
        for seed in range(count):
            params = GeneratorParams(n=3 + seed % 6, p=0.5)
            graph = generate(KIND_GNP_UNIFORM, params, 101 + seed)
            result = randomized_fc(graph, 0.5, seed=seed)
            optimum = exact_fc(graph)[1]
            self.assertTrue(is_forest_cover(graph, result.forest))
            self.assertEqual("2+epsilon", result.diagnostics["guarantee"])
            if result.wi > 2.5 * optimum + 1e-9:
                misses += 1
        self.assertLessEqual(misses, count // 20)


class RoundingTestCase(TestCase):
    def test_triangle(self):
        result = lp_rounding_fc(triangle())
        self.assertAlmostEqual(1.5, result.lower_bound)
        self.assertAlmostEqual(3.0, result.wi)
        self.assertAlmostEqual(2.0, result.ratio())

    def test_path(self):
        result = lp_rounding_fc(path_graph([1.0, 1.0]))
        self.assertEqual(Forest.of([Tree.singleton(1)]), result.forest)
        self.assertAlmostEqual(1.0, result.wi)

    def test_free_edge(self):
        result = lp_rounding_fc(path_graph([0.0]))
        self.assertAlmostEqual(1.0, result.lower_bound)
        self.assertLessEqual(result.wi, 2.0)

    def test_single_pass_pruning(self):
        graph = path_graph([0.5, 0.5, 0.5])
        solution = FractionalSolution((0.2, 0.3, 1.0, 1.0), (0.2, 0.3, 1.0), 0.0)
        stats = RoundingStats()
        forest = round_solution(graph, solution, stats=stats)
        self.assertEqual(Forest.of([Tree.of([1, 2, 3], [1, 2])]), forest)
        self.assertEqual(1, stats.pruned_pendants)

        fixed = round_solution(graph, solution, fixed_point_pruning=True)
        self.assertEqual(Forest.of([Tree.of([2, 3], [2])]), fixed)

    def test_pendant_pair(self):
        graph = path_graph([0.5])
        solution = FractionalSolution((0.2, 0.2), (0.2,), 0.0)
        forest = round_solution(graph, solution)
        self.assertEqual(1, len(forest.vertices))

    def test_isolated_vertices(self):
        graph = Graph(3, [(0, 1, 1.0)])
        solution = FractionalSolution((0.4, 0.6, 0.0), (0.0,), 1.0)
        stats = RoundingStats()
        forest = round_solution(graph, solution, stats=stats)
        self.assertEqual(Forest.of([Tree.singleton(1)]), forest)
        self.assertEqual(1, stats.dropped_isolated)
        self.assertEqual(1, stats.kept_isolated)

    def test_factor_two(self):
        count = 300 if FULL else 12
        for seed in range(count):
            params = GeneratorParams(n=3 + seed % 6, p=0.5)
            graph = generate(KIND_GNP_UNIFORM, params, 43 + seed)
            result = lp_rounding_fc(graph)
            optimum = exact_fc(graph)[1]
            self.assertTrue(is_forest_cover(graph, result.forest))
            self.assertLessEqual(result.lower_bound, optimum + 1e-6)
            self.assertLessEqual(result.wi, 2.0 * result.lower_bound + 1e-6)
            self.assertLessEqual(result.wi, 2.0 * optimum + 1e-6)
            fixed = lp_rounding_fc(graph, fixed_point_pruning=True)
            self.assertLessEqual(fixed.wi, 2.0 * fixed.lower_bound + 1e-6)


if __name__ == "__main__":
    main()
