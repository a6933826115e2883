import unittest

from app import build_parser
from constructions import ConstructionSpec
from graph_types import ParameterDomainError
from run_config import RunConfig, parse_chords, parse_int_list


def _config(argv):
    return RunConfig.from_namespace(build_parser().parse_args(argv))


class ParseTest(unittest.TestCase):
    def test_int_lists(self):
        self.assertEqual(parse_int_list("4,6..8"), [4, 6, 7, 8])
        self.assertEqual(parse_int_list(" 10 , 20 "), [10, 20])
        self.assertEqual(parse_int_list(""), [])
        self.assertEqual(parse_int_list(None), [])
        with self.assertRaises(ParameterDomainError):
            parse_int_list("4,x")

    def test_chords(self):
        self.assertEqual(parse_chords("7:1,6:2"), ((7, 1), (6, 2)))
        self.assertEqual(parse_chords(None), ())
        with self.assertRaises(ParameterDomainError):
            parse_chords("7-1")


class RunConfigTest(unittest.TestCase):
    def test_construct_spec(self):
        config = _config(["construct", "G_nrs", "--n", "8", "--r", "3", "--s", "1"]).validate()
        self.assertEqual(config.construction_spec(), ConstructionSpec(family="G_nrs", n=8, r=3, s=1))

    def test_chord_spec(self):
        config = _config(["construct", "chord", "--n", "9", "--r", "4", "--chords", "7:1,6:2"]).validate()
        self.assertEqual(config.construction_spec().chords, ((7, 1), (6, 2)))

    def test_validation_errors(self):
        bad = [
            ["--threads", "0", "formula", "eq1", "8", "3"],
            ["construct", "path", "--n", "-1"],
            ["verify", "everything"],
            ["report", "trees"],
            ["report", "graphs", "--survey-max-n", "11"],
            ["survey", "chord", "--r", "3", "--keep", "0"],
            ["survey", "min-wiener", "--n", "6", "--r", "3", "--shards", "0"],
        ]
        for argv in bad:
            with self.subTest(argv=argv):
                with self.assertRaises(ParameterDomainError):
                    _config(argv).validate()

    def test_header_ignores_execution_knobs(self):
        one = _config(["--threads", "1", "survey", "min-wiener", "--n", "6", "--r", "3"])
        four = _config(["--threads", "4", "--quiet", "survey", "min-wiener", "--n", "6", "--r", "3", "--shards", "8"])
        self.assertEqual(one.header(), four.header())
        self.assertTrue(one.header().startswith('# command="survey"'))
        self.assertNotIn("threads", one.header())
        self.assertIn('params={"n":6,"r":3}', one.header())

    def test_resolved_is_json_ready(self):
        resolved = _config(["construct", "chord", "--n", "9", "--r", "4", "--chords", "7:1"]).resolved()
        self.assertEqual(resolved["params"]["chords"], [[7, 1]])
        self.assertEqual(resolved["seed"], 20240229)


if __name__ == "__main__":
    unittest.main()
