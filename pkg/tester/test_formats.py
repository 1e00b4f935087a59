# -*- coding: utf-8 -*-

import os
from tempfile import TemporaryDirectory
from unittest import TestCase, main

from fcover.errors import InstanceError, SolverError, UsageError
from fcover.formats import (
    REPORT_FORMAT_JSON,
    REPORT_FORMAT_MSGPACK,
    RunReport,
    dumps_report,
    emit_instance,
    emit_solution,
    loads_report,
    parse_instance,
    parse_instance_file,
    parse_solution,
    read_instance,
    write_instance,
)
from fcover.graph import Graph, GraphMode, Tree


class InstanceFormatTestCase(TestCase):
    def test_parse(self):
        text = "c hello\np fc 3 2\ne 1 2 0.5\n\ne 2 3 1\n"
        instance = parse_instance_file(text)
        self.assertEqual(("hello",), instance.comments)
        self.assertEqual([(0, 1, 0.5), (1, 2, 1.0)], instance.graph.edge_tuples())

    def test_emit_is_parseable(self):
        graph = Graph(3, [(0, 2, 0.1), (1, 2, 7.25)], GraphMode.BFC)
        text = emit_instance(graph, ["generated"])
        self.assertTrue(text.startswith("c generated\np bfc 3 2\n"))
        self.assertEqual(graph, parse_instance(text))

    def test_errors(self):
        cases = [
            "e 1 2 0.5\n",
            "p fc 2 1\n",
            "p fc 2 1\ne 1 2 x\n",
            "p fc 2 1\ne 1 3 0.5\n",
            "p fc 2 1\ne 1 1 0.5\n",
            "p fc 2 1\ne 1 2 1.5\n",
            "p xx 2 0\n",
            "p fc 2 0\np fc 2 0\n",
            "p fc 2 1\nq 1 2\n",
            "",
        ]
        for text in cases:
            with self.subTest(text=text):
                with self.assertRaises(InstanceError):
                    parse_instance(text)

    def test_line_numbers(self):
        with self.assertRaisesRegex(InstanceError, "Line 3"):
            parse_instance("c\np fc 2 1\ne 1 two 0.5\n")

    def test_files(self):
        graph = Graph(2, [(0, 1, 0.25)])
        with TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "g.txt")
            write_instance(path, graph)
            self.assertEqual(graph, read_instance(path).graph)
            with self.assertRaises(InstanceError):
                read_instance(os.path.join(tmp, "missing.txt"))


class SolutionFormatTestCase(TestCase):
    def test_emit(self):
        trees = [Tree.of([0, 1], [0]), Tree.singleton(2)]
        text = emit_solution(GraphMode.FC, 3, trees)
        self.assertEqual("s fc 3 2\nt 1 2 ; 1\nt 3 ;\n", text)
        parsed = parse_solution(text)
        self.assertEqual(GraphMode.FC, parsed.kind)
        self.assertEqual(tuple(trees), parsed.trees)

    def test_errors(self):
        cases = [
            "t 1 ;\n",
            "s fc 2 2\nt 1 ;\n",
            "s fc 2 1\nt 0 ;\n",
            "s fc 2 1\nt 1 1 ;\n",
            "s zz 2 0\n",
            "s fc 2 1\nx 1\n",
        ]
        for text in cases:
            with self.subTest(text=text):
                with self.assertRaises(InstanceError):
                    parse_solution(text)


class ReportFormatTestCase(TestCase):
    def report(self, **kwargs) -> RunReport:
        return RunReport(command="round", method="round", instance={"n": 2}, **kwargs)

    def test_json(self):
        data = dumps_report(self.report(value=1.5, diagnostics={"cuts": {2, 1}}))
        document = loads_report(data, REPORT_FORMAT_JSON)
        self.assertEqual("fcover.report/1", document["schema"])
        self.assertEqual(1.5, document["value"])
        self.assertEqual([1, 2], document["diagnostics"]["cuts"])

    def test_msgpack(self):
        data = dumps_report(self.report(value=2.0), REPORT_FORMAT_MSGPACK)
        self.assertEqual(2.0, loads_report(data, REPORT_FORMAT_MSGPACK)["value"])

    def test_non_finite(self):
        with self.assertRaises(SolverError):
            dumps_report(self.report(value=float("inf")))

    def test_unknown_format(self):
        with self.assertRaises(UsageError):
            dumps_report(self.report(), "yaml")

    def test_summary(self):
        summary = self.report(value=1.0, lower_bound=0.5, ratio=2.0).summary()
        self.assertIn("wi=1.000000", summary)
        self.assertIn("ratio=2.000000", summary)


if __name__ == "__main__":
    main()
