# -*- coding: utf-8 -*-

from asyncio import run
from unittest import TestCase, main

from fcover.apps.bench import format_table, run_trials, summarize
from fcover.apps.bench.trial import TrialSpec, run_trial
from fcover.generators import GeneratorParams


def spec(index: int, method: str = "binary", kind: str = "gnp-binary", **kwargs):
    values = dict(
        index=index,
        seed=4,
        kind=kind,
        params=GeneratorParams(n=6, p=0.5, scale=3.0),
        method=method,
        epsilon=1.0,
        lam=0.0,
        max_experiments=50,
        tol=1e-7,
        max_iterations=None,
        backend="simplex",
        fixed_point=False,
        oracle=True,
    )
    values.update(kwargs)
    return TrialSpec(**values)


class TrialTestCase(TestCase):
    def test_instance_seed_depends_on_index(self):
        self.assertEqual(spec(0).instance_seed(), spec(0).instance_seed())
        self.assertNotEqual(spec(0).instance_seed(), spec(1).instance_seed())

    def test_algorithm_seed_depends_on_index(self):
        self.assertEqual(spec(0).algorithm_seed(), spec(0).algorithm_seed())
        self.assertNotEqual(spec(0).algorithm_seed(), spec(1).algorithm_seed())
        self.assertNotEqual(spec(0).algorithm_seed(), spec(0, seed=5).algorithm_seed())
        self.assertNotEqual(spec(0).instance_seed(), spec(0).algorithm_seed())

    def test_random_row_uses_trial_seed(self):
        first = run_trial(spec(3, method="random", kind="gnp-uniform"))
        again = run_trial(spec(3, method="random", kind="gnp-uniform"))
        self.assertTrue(first["feasible"])
        self.assertEqual(spec(3).algorithm_seed(), first["algorithm_seed"])
        self.assertEqual(first["value"], again["value"])

    def test_binary_row(self):
        row = run_trial(spec(0))
        self.assertTrue(row["feasible"])
        self.assertEqual(6, row["n"])
        self.assertIsNotNone(row["optimum"])
        if row["ratio_opt"] is not None:
            self.assertLessEqual(row["ratio_opt"], 2.0 + 1e-9)

    def test_round_row(self):
        row = run_trial(spec(1, method="round", kind="gnp-uniform"))
        self.assertTrue(row["feasible"])
        self.assertLessEqual(row["lower_bound"], row["optimum"] + 1e-6)

    def test_bfc_row(self):
        row = run_trial(spec(2, method="bfc", kind="gnp-raw", lam=4.0))
        self.assertTrue(row["feasible"])
        self.assertLessEqual(row["value"], 6 * row["optimum"])

    def test_no_oracle(self):
        row = run_trial(spec(0, oracle=False))
        self.assertIsNone(row["optimum"])
        self.assertIsNone(row["ratio_opt"])


class RunTrialsTestCase(TestCase):
    def test_parallel_matches_sequential(self):
        specs = [spec(i) for i in range(4)]
        sequential = run(run_trials(specs, 1))
        parallel = run(run_trials(specs, 2))
        keys = ("trial", "seed", "value", "optimum")
        self.assertEqual(
            [tuple(r[k] for k in keys) for r in sequential],
            [tuple(r[k] for k in keys) for r in parallel],
        )

    def test_summary(self):
        rows = run(run_trials([spec(i) for i in range(3)], 1))
        summary = summarize(rows)
        self.assertEqual(3, summary["trials"])
        self.assertEqual(0, summary["infeasible"])
        table = format_table(rows).splitlines()
        self.assertEqual(4, len(table))
        self.assertTrue(table[0].startswith("trial\tn\tm"))


if __name__ == "__main__":
    main()
