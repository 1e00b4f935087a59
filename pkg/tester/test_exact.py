# -*- coding: utf-8 -*-

from unittest import TestCase, main

import numpy as np

from fcover.errors import BudgetExceededError, InstanceError
from fcover.exact import (
    ExactBudget,
    brute_force_separation,
    exact_fc,
    minimum_vertex_cover_size,
)
from fcover.generators import from_vertex_cover, gnp_pairs
from fcover.graph import Graph, GraphMode, is_forest_cover, weighted_index
from fcover.system.environ import environ_flag
from tester.graphs import (
    atlas_graphs,
    cycle_graph,
    path_graph,
    random_graphs,
    triangle,
)

FULL = environ_flag("FULL_ACCEPTANCE")


class ExactFcTestCase(TestCase):
    def test_single_light_edge(self):
        forest, value = exact_fc(path_graph([0.4]))
        self.assertAlmostEqual(1.0, value)
        self.assertEqual(1, forest.k)

    def test_triangle(self):
        self.assertAlmostEqual(2.0, exact_fc(triangle())[1])

    def test_free_path(self):
        forest, value = exact_fc(path_graph([0.0, 0.0, 0.0]))
        self.assertAlmostEqual(1.0, value)
        self.assertEqual(1, forest.k)

    def test_empty(self):
        forest, value = exact_fc(Graph(3))
        self.assertEqual(0.0, value)
        self.assertEqual(0, forest.k)

    def test_lexicographic_ties(self):
        forest, value = exact_fc(path_graph([1.0]))
        self.assertEqual(frozenset({0}), forest.vertices)

    def test_optimum_is_a_cover(self):
        for graph in random_graphs(15, 7, p=0.4, seed=53):
            forest, value = exact_fc(graph)
            self.assertTrue(is_forest_cover(graph, forest))
            self.assertAlmostEqual(value, weighted_index(graph, forest))

    def test_vertex_cover_reduction(self):
        rng = np.random.default_rng(59)
        for _ in range(15):
            graph = from_vertex_cover(7, gnp_pairs(7, 0.4, rng))
            self.assertAlmostEqual(minimum_vertex_cover_size(graph), exact_fc(graph)[1])
        self.assertEqual(2, minimum_vertex_cover_size(cycle_graph([1.0] * 4)))

    def test_vertex_cover_reduction_on_all_small_graphs(self):
        for graph in atlas_graphs(7 if FULL else 5):
            pairs = [(e.u, e.v) for e in graph.edges]
            reduced = from_vertex_cover(graph.n, pairs)
            forest, value = exact_fc(reduced)
            self.assertTrue(is_forest_cover(reduced, forest))
            self.assertAlmostEqual(minimum_vertex_cover_size(reduced), value)

    def test_relabeling(self):
        rng = np.random.default_rng(61)
        for graph in random_graphs(10, 6, p=0.5, seed=67):
            perm = [int(v) for v in rng.permutation(graph.n)]
            relabeled = Graph(
                graph.n, [(perm[e.u], perm[e.v], e.w) for e in graph.edges]
            )
            self.assertAlmostEqual(exact_fc(graph)[1], exact_fc(relabeled)[1])

    def test_budget(self):
        with self.assertRaises(BudgetExceededError):
            exact_fc(path_graph([1.0] * 9))
        with self.assertRaises(BudgetExceededError):
            exact_fc(path_graph([1.0] * 3), ExactBudget(max_n=3, max_edges=3))

    def test_bfc_instance(self):
        with self.assertRaises(InstanceError):
            exact_fc(Graph(2, [(0, 1, 3.0)], GraphMode.BFC))


class BruteForceSeparationTestCase(TestCase):
    def test_triangle(self):
        vertices, value = brute_force_separation(
            triangle(), (0.6, 0.6, 0.6), (0.4, 0.4, 0.4)
        )
        self.assertEqual(frozenset({0, 1, 2}), vertices)
        self.assertAlmostEqual(0.6, value)

    def test_edgeless(self):
        self.assertIsNone(brute_force_separation(Graph(2), (0.0, 0.0), ()))


if __name__ == "__main__":
    main()
