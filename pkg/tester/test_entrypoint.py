# -*- coding: utf-8 -*-

import json
import os
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from tempfile import TemporaryDirectory
from typing import List, Tuple
from unittest import TestCase, main

from fcover.arguments import version
from fcover.entrypoint import main as entrypoint_main
from fcover.errors import (
    EXIT_CODE_INSTANCE,
    EXIT_CODE_USAGE,
)
from fcover.formats.report import REPORT_FORMAT_MSGPACK, loads_report

SINGLE_EDGE = "p fc 2 1\ne 1 2 0.5\n"
PATH3 = "p fc 3 2\ne 1 2 1\ne 2 3 1\n"


def run(cmdline: List[str]) -> Tuple[int, List[str]]:
    printed: List[str] = []
    with redirect_stderr(StringIO()):
        code = entrypoint_main(["--no-dotenv", *cmdline], printed.append)
    return code, printed


class EntrypointTestCase(TestCase):
    def setUp(self):
        self.tmp = TemporaryDirectory()
        self.dir = self.tmp.name

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name: str, text: str) -> str:
        path = os.path.join(self.dir, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def report(self, cmdline: List[str]) -> dict:
        code, printed = run(cmdline)
        self.assertEqual(0, code)
        self.assertEqual(1, len(printed))
        return json.loads(printed[0])

    def test_version(self):
        buffer = StringIO()
        code = -1
        with redirect_stdout(buffer):
            try:
                entrypoint_main(["--version"])
            except SystemExit as e:
                code = e.code
        self.assertEqual(0, code)
        self.assertEqual(version(), buffer.getvalue().strip())

    def test_binary_path(self):
        path = self.write("p3.txt", PATH3)
        report = self.report(["binary", "--input", path])
        self.assertEqual("fcover.report/1", report["schema"])
        self.assertAlmostEqual(2.0, report["value"])
        self.assertAlmostEqual(2.0, report["ratio"])
        self.assertTrue(report["diagnostics"]["dual_feasible"])

    def test_round_path(self):
        path = self.write("p3.txt", PATH3)
        report = self.report(["round", "--input", path])
        self.assertAlmostEqual(1.0, report["value"])
        self.assertAlmostEqual(1.0, report["ratio"])

    def test_exact_and_solution_roundtrip(self):
        path = self.write("p3.txt", PATH3)
        solution = os.path.join(self.dir, "p3.sol")
        report = self.report(["exact", "-i", path, "--solution-out", solution])
        self.assertAlmostEqual(1.0, report["value"])
        verified = self.report(["verify", "-i", path, "--solution", solution])
        self.assertAlmostEqual(1.0, verified["value"])
        self.assertTrue(verified["diagnostics"]["valid"])

    def test_verify_rejects_uncovered_edge(self):
        path = self.write("p3.txt", PATH3)
        solution = self.write("p3.sol", "s fc 3 1\nt 1 ;\n")
        code, printed = run(["verify", "-i", path, "--solution", solution])
        self.assertEqual(EXIT_CODE_INSTANCE, code)
        self.assertEqual([], printed)

    def test_bfc_needs_lambda(self):
        path = self.write("p3.txt", PATH3)
        code, _ = run(["bfc", "--input", path])
        self.assertEqual(EXIT_CODE_USAGE, code)

    def test_bfc_path(self):
        path = self.write("path.txt", "p bfc 3 2\ne 1 2 6\ne 2 3 4\n")
        report = self.report(["bfc", "-i", path, "--lambda", "10"])
        self.assertEqual("count", report["value_name"])
        self.assertGreaterEqual(report["value"], 1.0)

    def test_missing_input(self):
        code, _ = run(["binary"])
        self.assertEqual(EXIT_CODE_USAGE, code)

    def test_malformed_instance(self):
        path = self.write("bad.txt", "p fc 2 1\ne 1 3 0.5\n")
        code, _ = run(["round", "--input", path])
        self.assertEqual(EXIT_CODE_INSTANCE, code)

    def test_non_binary_weights(self):
        path = self.write("edge.txt", "p fc 2 1\ne 1 2 0.3\n")
        code, _ = run(["binary", "--input", path])
        self.assertEqual(EXIT_CODE_INSTANCE, code)

    def test_random_is_reproducible(self):
        path = self.write("edge.txt", SINGLE_EDGE)
        cmdline = ["random", "-i", path, "--seed", "3", "--epsilon", "0.5"]
        first = self.report(cmdline)
        second = self.report(cmdline)
        self.assertEqual(first["trees"], second["trees"])
        self.assertEqual(first["value"], second["value"])

    def test_gen_then_solve(self):
        out = os.path.join(self.dir, "gen.txt")
        code, _ = run(["gen", "--kind", "gnp-binary", "--n", "6", "--out", out])
        self.assertEqual(0, code)
        report = self.report(["binary", "-i", out])
        self.assertLessEqual(report["value"], 6.0)

    def test_gen_stdout(self):
        code, printed = run(["gen", "--kind", "path", "--n", "3", "--seed", "1"])
        self.assertEqual(0, code)
        self.assertIn("p fc 3 2", printed[0])

    def test_bench_rows(self):
        report = self.report(
            ["bench", "--kind", "gnp-binary", "--n", "5", "--trials", "3"]
            + ["--method", "binary"]
        )
        self.assertEqual(3, len(report["rows"]))
        self.assertEqual(0, report["diagnostics"]["infeasible"])
        self.assertLessEqual(report["diagnostics"]["max_ratio_opt"], 2.0 + 1e-9)

    def test_msgpack_report(self):
        path = self.write("p3.txt", PATH3)
        out = os.path.join(self.dir, "report.msgpack")
        code, _ = run(
            ["round", "-i", path, "--out", out, "--report-format", "msgpack"]
        )
        self.assertEqual(0, code)
        with open(out, "rb") as f:
            document = loads_report(f.read(), REPORT_FORMAT_MSGPACK)
        self.assertEqual("round", document["command"])

    def test_msgpack_needs_out(self):
        path = self.write("p3.txt", PATH3)
        code, _ = run(["round", "-i", path, "--report-format", "msgpack"])
        self.assertEqual(EXIT_CODE_USAGE, code)


if __name__ == "__main__":
    main()
