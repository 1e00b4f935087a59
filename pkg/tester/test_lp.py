# -*- coding: utf-8 -*-

from itertools import combinations
from math import inf
from unittest import TestCase, main, skipUnless

import numpy as np

from fcover.errors import InstanceError, SolverError, UsageError
from fcover.exact.separation import brute_force_separation
from fcover.generators import from_vertex_cover
from fcover.graph import Graph
from fcover.lp import (
    BACKEND_SCIPY,
    DenseSimplexBackend,
    FlowNetwork,
    FractionalSolution,
    LpModel,
    SubsetCut,
    backend_names,
    create_backend,
    cutting_plane_solve,
    default_iteration_cap,
    dump_cuts,
    max_flow,
    minimize_through_edge,
    separation_oracle,
    solve_base_lp,
    subset_lhs,
)
from fcover.system.environ import environ_flag
from tester.graphs import path_graph, random_graphs, triangle

FULL = environ_flag("FULL_ACCEPTANCE")


class SimplexTestCase(TestCase):
    def setUp(self):
        self.simplex = DenseSimplexBackend()
        self.scipy = create_backend(BACKEND_SCIPY)

    def test_single_edge_model(self):
        model = LpModel(path_graph([1.0]))
        self.assertAlmostEqual(1.0, solve_base_lp(model, self.simplex).objective)

    def test_triangle_model(self):
        model = LpModel(triangle())
        solution = solve_base_lp(model, self.simplex)
        self.assertAlmostEqual(1.5, solution.objective)

    def test_no_variables(self):
        outcome = self.simplex.solve(np.zeros(0), np.zeros((0, 0)), np.zeros(0))
        self.assertEqual(0.0, outcome.objective)

    def test_infeasible(self):
        a = np.array([[1.0, 1.0]])
        with self.assertRaises(SolverError):
            self.simplex.solve(np.ones(2), a, np.array([3.0]))

    def test_against_scipy(self):
        rng = np.random.default_rng(17)
        for _ in range(40):
            rows = int(rng.integers(1, 8))
            cols = int(rng.integers(1, 8))
            a = rng.integers(-1, 3, size=(rows, cols)).astype(float)
            b = np.minimum(a.clip(min=0.0).sum(axis=1), rng.random(rows) * 2 - 0.5)
            c = rng.random(cols) * 2 - 1
            expected = self.scipy.solve(c, a, b)
            found = self.simplex.solve(c, a, b)
            self.assertAlmostEqual(expected.objective, found.objective, places=6)
            self.assertTrue(np.all(a @ found.z >= b - 1e-7))

    def test_backend_registry(self):
        self.assertEqual(["simplex", "scipy"], backend_names())
        with self.assertRaises(UsageError):
            create_backend("glpk")


def brute_force_cut(network: FlowNetwork, source: int, sink: int) -> float:
    interior = [v for v in range(network.num_nodes) if v not in (source, sink)]
    best = inf
    for size in range(len(interior) + 1):
        for chosen in combinations(interior, size):
            best = min(best, network.cut_capacity(frozenset((source, *chosen))))
    return best


class FlowTestCase(TestCase):
    def test_single_arc(self):
        network = FlowNetwork(2)
        network.add_arc(0, 1, 3.0)
        self.assertEqual(3.0, max_flow(network, 0, 1).value)

    def test_two_paths(self):
        network = FlowNetwork(4)
        network.add_arc(0, 1, 1.0)
        network.add_arc(1, 3, 1.0)
        network.add_arc(0, 2, 2.0)
        network.add_arc(2, 3, 2.0)
        result = max_flow(network, 0, 3)
        self.assertEqual(3.0, result.value)
        self.assertEqual(frozenset({0}), result.source_side)

    def test_infinite_arcs(self):
        network = FlowNetwork(3)
        network.add_arc(0, 1, inf)
        network.add_arc(1, 2, 1.5)
        result = max_flow(network, 0, 2)
        self.assertEqual(1.5, result.value)
        self.assertEqual(frozenset({0, 1}), result.source_side)

    def test_errors(self):
        network = FlowNetwork(2)
        with self.assertRaises(ValueError):
            network.add_arc(0, 1, -1.0)
        network.add_arc(0, 1, inf)
        with self.assertRaises(ValueError):
            max_flow(network, 0, 1)
        with self.assertRaises(ValueError):
            max_flow(network, 0, 0)

    def test_against_exhaustive_cut(self):
        rng = np.random.default_rng(29)
        for _ in range(60):
            network = FlowNetwork(6)
            for tail in range(6):
                for head in range(6):
                    if tail != head and rng.random() < 0.4:
                        network.add_arc(tail, head, float(rng.random() * 4))
            expected = brute_force_cut(network, 0, 5)
            result = max_flow(network, 0, 5)
            self.assertAlmostEqual(expected, result.value)
            self.assertAlmostEqual(expected, result.cut_capacity)


class SeparationTestCase(TestCase):
    def test_single_edge_violated(self):
        graph = path_graph([0.0])
        solution = FractionalSolution((0.5, 0.5), (0.5,), 0.5)
        cut = separation_oracle(graph, solution)
        self.assertIsNotNone(cut)
        self.assertEqual(frozenset({0, 1}), cut.vertices)
        self.assertAlmostEqual(0.5, cut.value)

    def test_single_edge_tight(self):
        graph = path_graph([0.0])
        solution = FractionalSolution((1.0, 1.0), (1.0,), 1.0)
        self.assertIsNone(separation_oracle(graph, solution))

    def test_triangle(self):
        graph = triangle(0.0)
        x = (0.6, 0.6, 0.6)
        y = (0.4, 0.4, 0.4)
        cut = separation_oracle(graph, FractionalSolution(x, y, 0.0))
        expected = brute_force_separation(graph, x, y)
        self.assertIsNotNone(cut)
        self.assertAlmostEqual(expected[1], cut.value)
        self.assertAlmostEqual(0.6, cut.value)

    def test_most_violated_beats_lower_edge_id(self):
        graph = path_graph([0.0, 0.0, 0.0])
        x = (0.5, 0.5, 0.3, 0.3)
        y = (0.1, 0.0, 0.2)
        first, first_value = minimize_through_edge(graph, x, y, graph.edge(0))
        self.assertLess(first_value, 1.0)
        cut = separation_oracle(graph, FractionalSolution(x, y, 0.0))
        self.assertIsNotNone(cut)
        self.assertEqual(frozenset({2, 3}), cut.vertices)
        self.assertAlmostEqual(0.4, cut.value)
        self.assertNotEqual(first.vertices, cut.vertices)

    def test_edge_minimum_holds_anchor(self):
        graph = path_graph([0.0, 0.0, 0.0])
        x = (1.0, 0.2, 0.2, 1.0)
        y = (0.1, 0.9, 0.1)
        cut, value = minimize_through_edge(graph, x, y, graph.edge(0))
        self.assertTrue({0, 1} <= cut.vertices)
        self.assertAlmostEqual(subset_lhs(graph, x, y, cut.vertices), value)

    def test_against_brute_force(self):
        rng = np.random.default_rng(41)
        count = 300 if FULL else 40
        for index in range(count):
            n = 2 + index % 9
            graph = random_graphs(1, n, p=0.5, seed=13 + index)[0]
            if not graph.m:
                continue
            floor = 0.5 * (index % 2)
            x = tuple(floor + (1.0 - floor) * float(v) for v in rng.random(graph.n))
            y = tuple(float(v) for v in rng.random(graph.m))
            expected = brute_force_separation(graph, x, y)
            found = min(
                minimize_through_edge(graph, x, y, edge)[1] for edge in graph.edges
            )
            self.assertAlmostEqual(expected[1], found)

            cut = separation_oracle(graph, FractionalSolution(x, y, 0.0))
            if expected[1] >= 1.0 - 1e-7:
                self.assertIsNone(cut)
            else:
                self.assertIsNotNone(cut)
                self.assertAlmostEqual(expected[1], cut.value, delta=1e-7)
                self.assertAlmostEqual(
                    cut.value, subset_lhs(graph, x, y, cut.vertices), delta=1e-9
                )


class CuttingPlaneTestCase(TestCase):
    def assert_converged(self, graph: Graph, solution: FractionalSolution):
        best = brute_force_separation(graph, solution.x, solution.y)
        if best is not None:
            self.assertGreaterEqual(best[1], 1.0 - 1e-6)
        self.assertLessEqual(LpModel(graph).max_violation(solution), 1e-7)

    def test_path_unit_weights(self):
        graph = path_graph([1.0, 1.0])
        solution = cutting_plane_solve(graph)
        self.assertAlmostEqual(1.0, solution.objective)
        self.assert_converged(graph, solution)

    def test_single_free_edge(self):
        graph = path_graph([0.0])
        solution = cutting_plane_solve(graph)
        self.assertAlmostEqual(1.0, solution.objective)
        self.assertEqual([SubsetCut.of([0, 1])], list(solution.cuts))
        self.assertEqual(2, solution.iterations)

    def test_vertex_cover_cycle(self):
        graph = from_vertex_cover(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        self.assertAlmostEqual(2.0, cutting_plane_solve(graph).objective)

    def test_iteration_cap(self):
        with self.assertRaises(SolverError):
            cutting_plane_solve(path_graph([0.0]), max_iterations=1)
        self.assertEqual(10, default_iteration_cap(1))
        self.assertEqual(90, default_iteration_cap(3))

    def test_bfc_instance_rejected(self):
        graph = Graph(2, [(0, 1, 3.0)], mode="bfc")
        with self.assertRaises(InstanceError):
            cutting_plane_solve(graph)

    def test_cut_needs_an_edge(self):
        with self.assertRaises(InstanceError):
            LpModel(Graph(2), [SubsetCut.of([0, 1])])

    def test_backends_agree(self):
        count = 30 if FULL else 8
        scipy = create_backend(BACKEND_SCIPY)
        for graph in random_graphs(count, 6, p=0.5, seed=23):
            expected = cutting_plane_solve(graph, backend=scipy)
            found = cutting_plane_solve(graph)
            self.assertAlmostEqual(expected.objective, found.objective, places=6)
            self.assert_converged(graph, found)

    def test_dump(self):
        graph = path_graph([0.0])
        text = dump_cuts(graph, cutting_plane_solve(graph))
        lines = text.splitlines()
        self.assertTrue(lines[0].startswith("c objective 1.000000000"))
        self.assertIn("S = {1, 2}: 1.000000000", lines)
        self.assertIn("y 1 2 1.000000000", lines)

    @skipUnless(FULL, "FCOVER_FULL_ACCEPTANCE=1 runs the larger instances")
    def test_larger_instances(self):
        for graph in random_graphs(10, 12, p=0.3, seed=31):
            solution = cutting_plane_solve(graph)
            self.assertLessEqual(solution.objective, graph.n + 1e-9)


if __name__ == "__main__":
    main()
