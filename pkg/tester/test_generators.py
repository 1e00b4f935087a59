# -*- coding: utf-8 -*-

from unittest import TestCase, main

from fcover.errors import UsageError
from fcover.generators import (
    KIND_CYCLE,
    KIND_FROM_VC,
    KIND_GNP_BINARY,
    KIND_GNP_RAW,
    KIND_GNP_UNIFORM,
    KIND_PATH,
    KIND_STAR,
    KIND_TREE,
    GeneratorParams,
    generate,
    generator_kinds,
)
from fcover.graph import GraphMode, is_connected


class GeneratorTestCase(TestCase):
    def test_kinds(self):
        self.assertEqual(8, len(generator_kinds()))

    def test_deterministic(self):
        params = GeneratorParams(n=9, p=0.4)
        for kind in generator_kinds():
            with self.subTest(kind=kind):
                self.assertEqual(generate(kind, params, 5), generate(kind, params, 5))

    def test_modes(self):
        params = GeneratorParams(n=6, scale=3.0, weight=2.0)
        self.assertEqual(GraphMode.FC, generate(KIND_GNP_UNIFORM, params, 1).mode)
        self.assertEqual(GraphMode.BFC, generate(KIND_GNP_RAW, params, 1).mode)
        self.assertEqual(GraphMode.BFC, generate(KIND_PATH, params, 1).mode)
        self.assertEqual(GraphMode.BFC, generate(KIND_TREE, params, 1).mode)

    def test_binary_weights(self):
        graph = generate(KIND_GNP_BINARY, GeneratorParams(n=8, p=0.6), 3)
        self.assertTrue(graph.is_binary())
        vc = generate(KIND_FROM_VC, GeneratorParams(n=8, p=0.6), 3)
        self.assertTrue(all(e.w == 1.0 for e in vc.edges))

    def test_fixtures(self):
        params = GeneratorParams(n=5, weight=0.5)
        self.assertEqual(4, generate(KIND_PATH, params, 0).m)
        self.assertEqual(4, generate(KIND_STAR, params, 0).m)
        self.assertEqual(5, generate(KIND_CYCLE, params, 0).m)
        tree = generate(KIND_TREE, GeneratorParams(n=7), 0)
        self.assertEqual(6, tree.m)
        self.assertTrue(is_connected(tree, tree.vertices))

    def test_errors(self):
        with self.assertRaises(UsageError):
            generate("lattice", GeneratorParams(n=3), 0)
        with self.assertRaises(UsageError):
            generate(KIND_CYCLE, GeneratorParams(n=2), 0)
        with self.assertRaises(UsageError):
            generate(KIND_GNP_UNIFORM, GeneratorParams(n=3, p=1.5), 0)


if __name__ == "__main__":
    main()
