import unittest

from constructions import D_nrs, G_nrs, out_radius_path
from graph_types import Digraph, Graph, ParameterDomainError
from verification import (
    SuiteResult,
    codecs,
    eq1_sweep,
    eq2_sweep,
    figures,
    increments,
    maxrad,
    minrad,
    radplus,
    run_suite,
    sizes,
    suite_names,
)
from tests.support import SEED, slow


def _drop_last_edge(n, r, s):
    g = G_nrs(n, r, s)
    return Graph.from_edges(g.order, g.edges()[:-1])


def _drop_first_arc(n, r, s):
    d = D_nrs(n, r, s)
    return Digraph.from_arcs(d.order, d.arcs()[1:])


class SuitePassTest(unittest.TestCase):
    def test_small_sweeps_pass(self):
        for result in (
            eq1_sweep(r_values=[3, 4], n_max=14),
            eq2_sweep(r_values=[3, 4], n_max=12),
            increments(eq1_n_max=20, eq2_n_max=20),
            sizes(eq1_n_max=14, eq2_n_max=12),
        ):
            with self.subTest(suite=result.name):
                self.assertTrue(result.passed, result.failures[:3])
                self.assertGreater(result.cases, 0)

    def test_figures_pass(self):
        result = figures()
        self.assertTrue(result.passed, result.failures[:3])

    def test_codecs_pass(self):
        result = codecs(seed=SEED, count=50, max_order=12)
        self.assertTrue(result.passed, result.failures[:3])
        self.assertEqual(result.cases, 3 + 50 * 3)

    def test_digraph_suites_pass(self):
        for result in (minrad(n_max=14), maxrad(span=4), radplus(span=3)):
            with self.subTest(suite=result.name):
                self.assertTrue(result.passed, result.failures[:3])

    @slow
    def test_registered_suites_pass(self):
        for result in run_suite("all"):
            with self.subTest(suite=result.name):
                self.assertTrue(result.passed, result.failures[:3])


class MutantTest(unittest.TestCase):
    def test_broken_graph_builder_is_reported_with_its_parameters(self):
        result = eq1_sweep(builder=_drop_last_edge, r_values=[3], n_max=8)
        self.assertFalse(result.passed)
        self.assertIn("G_nrs(n=6, r=3, s=1)", result.failures[0])

    def test_broken_digraph_builder_fails(self):
        result = eq2_sweep(builder=_drop_first_arc, r_values=[3], n_max=8)
        self.assertFalse(result.passed)
        self.assertIn("n=6, r=3, s=1", result.failures[0])

    def test_broken_path_digraph_fails(self):
        result = radplus(builder=lambda n, r: out_radius_path(n + 1, r), span=1)
        self.assertFalse(result.passed)


class RunnerTest(unittest.TestCase):
    def test_names(self):
        names = suite_names()
        self.assertEqual(names[-1], "all")
        self.assertIn("eq1-sweep", names)
        self.assertIn("radplus", names)

    def test_single_suite(self):
        results = run_suite("increments")
        self.assertEqual([r.name for r in results], ["increments"])
        self.assertTrue(results[0].passed)

    def test_unknown_suite(self):
        with self.assertRaises(ParameterDomainError):
            run_suite("everything")

    def test_summary_line(self):
        result = SuiteResult("demo")
        result.check(True, "fine")
        self.assertTrue(result.summary_line().startswith("PASS demo: 1 cases, 0 failures"))
        result.check(False, "broken")
        self.assertEqual(result.failures, ["broken"])
        self.assertTrue(result.summary_line().startswith("FAIL demo"))


if __name__ == "__main__":
    unittest.main()
