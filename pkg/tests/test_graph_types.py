import unittest

import numpy as np

from graph_types import (
    INFINITE,
    UNREACHABLE,
    Digraph,
    DistanceMatrix,
    Graph,
    GraphError,
    MetricSummary,
    OrderTooLargeError,
    ParameterDomainError,
    VertexError,
    check_order,
    extended_max,
    extended_min,
    iter_bits,
    popcount,
)


class BitHelpersTest(unittest.TestCase):
    def test_iter_bits_lists_set_positions_in_order(self):
        self.assertEqual(list(iter_bits(0b1011)), [0, 1, 3])
        self.assertEqual(list(iter_bits(0)), [])

    def test_popcount(self):
        self.assertEqual(popcount(0b101101), 4)

    def test_check_order_bounds(self):
        with self.assertRaises(ParameterDomainError):
            check_order(0)
        with self.assertRaises(OrderTooLargeError):
            check_order(5000)
        check_order(4096)


class GraphTest(unittest.TestCase):
    def test_from_edges_is_symmetric(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (3, 1)])
        self.assertTrue(g.has_edge(1, 0))
        self.assertEqual(g.degree(1), 3)
        self.assertEqual(g.neighbors(1), [0, 2, 3])
        self.assertEqual(g.edges(), [(0, 1), (1, 2), (1, 3)])
        self.assertEqual(g.edge_count(), 3)

    def test_asymmetric_rows_rejected(self):
        with self.assertRaises(GraphError):
            Graph(2, (0b10, 0))

    def test_self_loop_rejected(self):
        with self.assertRaises(GraphError):
            Graph.from_edges(3, [(1, 1)])

    def test_row_outside_order_rejected(self):
        with self.assertRaises(VertexError):
            Graph(2, (0b100, 0))

    def test_vertex_errors_are_index_errors(self):
        g = Graph.from_edges(3, [(0, 1)])
        with self.assertRaises(IndexError):
            g.degree(3)

    def test_adjacency_matrix(self):
        g = Graph.from_edges(3, [(0, 2)])
        expected = np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=np.uint8)
        np.testing.assert_array_equal(g.adjacency_matrix(), expected)


class DigraphTest(unittest.TestCase):
    def test_in_rows_and_degrees(self):
        d = Digraph.from_arcs(3, [(0, 1), (0, 2), (2, 1)])
        self.assertEqual(d.in_neighbors(1), [0, 2])
        self.assertEqual(d.out_degree(0), 2)
        self.assertEqual(d.in_degree(0), 0)
        self.assertEqual(d.arc_count(), 3)

    def test_reverse_flips_every_arc(self):
        d = Digraph.from_arcs(3, [(0, 1), (1, 2)])
        self.assertEqual(sorted(d.reverse().arcs()), [(1, 0), (2, 1)])

    def test_from_graph_doubles_edges(self):
        d = Digraph.from_graph(Graph.from_edges(3, [(0, 1), (1, 2)]))
        self.assertEqual(d.arc_count(), 4)

    def test_equal_rows_compare_equal(self):
        a = Digraph.from_arcs(2, [(0, 1)])
        b = Digraph(2, (0b10, 0))
        self.assertEqual(a, b)


class DistanceMatrixTest(unittest.TestCase):
    def test_unreachable_entries_make_totals_infinite(self):
        dist = np.array([[0, 1], [UNREACHABLE, 0]], dtype=np.uint32)
        matrix = DistanceMatrix(2, dist, directed=True)
        self.assertFalse(matrix.is_finite())
        self.assertIs(matrix.total(), INFINITE)
        self.assertEqual(matrix.out_sums(), [1, INFINITE])
        self.assertEqual(matrix.in_sums(), [INFINITE, 1])
        self.assertEqual(matrix.to_lists(), [[0, 1], [None, 0]])

    def test_shape_must_match_order(self):
        with self.assertRaises(GraphError):
            DistanceMatrix(3, np.zeros((2, 2), dtype=np.uint32), directed=False)


class ExtendedValuesTest(unittest.TestCase):
    def test_min_ignores_infinite_and_max_propagates_it(self):
        self.assertEqual(extended_min([3, INFINITE, 2]), 2)
        self.assertIs(extended_min([INFINITE]), INFINITE)
        self.assertIs(extended_max([3, INFINITE]), INFINITE)
        self.assertEqual(extended_max([3, 5]), 5)

    def test_summary_json_spells_out_infinity(self):
        summary = MetricSummary(order=2, directed=False, wiener=INFINITE, size=0, radius=INFINITE,
                                diameter=INFINITE, eccentricities=[INFINITE, INFINITE])
        data = summary.to_json_dict()
        self.assertEqual(data["wiener"], "infinite")
        self.assertEqual(data["eccentricities"], ["infinite", "infinite"])
        self.assertNotIn("out_radius", data)


if __name__ == "__main__":
    unittest.main()
