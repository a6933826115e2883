import csv
import io
import unittest
from fractions import Fraction

from formulas import eq1_wiener, eq2_wiener, maxradplus_construction_wiener, min_rad_construction_wiener
from graph_types import ParameterDomainError
from report import COLUMNS, ReportRow, build_table, write_csv


class GraphTableTest(unittest.TestCase):
    def test_large_order_has_only_the_construction_row(self):
        rows = build_table("graphs", [30], [3])
        self.assertEqual([row.row for row in rows], ["min-radius"])
        self.assertEqual(rows[0].total, eq1_wiener(30, 3))
        self.assertEqual(rows[0].mu, Fraction(eq1_wiener(30, 3), 435))
        self.assertEqual(rows[0].mu, Fraction(181, 145))

    def test_survey_rows_at_small_order(self):
        rows = build_table("graphs", [6], [3], survey_max_order=6)
        totals = {row.row: row.total for row in rows}
        self.assertEqual(totals, {"min-radius": 27, "min-radius-survey": 27, "max-radius-survey": 35})

    def test_survey_rows_respect_the_order_cap(self):
        rows = build_table("graphs", [6], [3], survey_max_order=5)
        self.assertEqual([row.row for row in rows], ["min-radius"])


class DigraphTableTest(unittest.TestCase):
    def test_rows(self):
        rows = build_table("digraphs", [10], [3])
        self.assertEqual([row.row for row in rows], ["min-out-radius", "min-radius", "max-radius", "max-out-radius"])
        totals = {row.row: row.total for row in rows}
        self.assertEqual(totals["min-out-radius"], eq2_wiener(10, 3))
        self.assertEqual(totals["min-radius"], min_rad_construction_wiener(10, 6))
        self.assertEqual(totals["max-out-radius"], maxradplus_construction_wiener(10, 3))
        self.assertTrue(all(row.pairs == 90 for row in rows))

    def test_max_out_radius_record(self):
        row = build_table("digraphs", [10], [3])[-1]
        self.assertEqual(row.to_record()[4:8], ["369", "90", "41/10", "4.100000"])

    def test_unknown_table(self):
        with self.assertRaises(ParameterDomainError):
            build_table("trees", [10], [3])


class CsvTest(unittest.TestCase):
    def test_header_then_columns(self):
        rows = [ReportRow("graphs", "min-radius", 8, 3, 48, "G_nrs", False)]
        stream = io.StringIO()
        write_csv(rows, stream, header="# table=\"graphs\"")
        lines = stream.getvalue().splitlines()
        self.assertEqual(lines[0], "# table=\"graphs\"")
        records = list(csv.reader(lines[1:]))
        self.assertEqual(tuple(records[0]), COLUMNS)
        self.assertEqual(records[1], ["graphs", "min-radius", "8", "3", "48", "28", "12/7", "1.714286", "G_nrs"])

    def test_missing_total_leaves_cells_empty(self):
        row = ReportRow("digraphs", "max-radius", 5, 2, None, "x", True)
        self.assertEqual(row.to_record()[4:8], ["", "20", "", ""])


if __name__ == "__main__":
    unittest.main()
