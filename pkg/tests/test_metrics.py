import unittest
from fractions import Fraction
from math import ceil, comb

import networkx as nx
import numpy as np

from codec import from_networkx, to_networkx
from constructions import D_nrs, G_nrs, clique, cycle, directed_cycle, directed_path, empty, hypercube, path, petersen
from graph_types import INFINITE, UNREACHABLE, Digraph, GraphError, VertexError
from metrics import (
    all_pairs,
    average_distance,
    bfs_distances,
    bfs_spanning_tree,
    clique_number,
    complement,
    complement_digraph,
    degrees,
    digraph_radii,
    eccentricities,
    greedy_degree_clique,
    is_connected,
    is_strongly_connected,
    is_tree,
    radius_and_wiener,
    radius_diameter,
    relabel,
    summarize,
    vertex_distance_sums,
    wiener,
    wiener_digraph,
)
from tests.support import SEED, nx_wiener


class WienerTest(unittest.TestCase):
    def test_known_values(self):
        self.assertEqual(wiener(cycle(6)), 27)
        self.assertEqual(wiener(hypercube(3)), 48)
        self.assertEqual(wiener(path(5)), comb(6, 3))
        self.assertEqual(wiener(clique(7)), comb(7, 2))

    def test_disconnected_is_infinite(self):
        self.assertIs(wiener(empty(3)), INFINITE)
        self.assertIs(wiener_digraph(directed_path(3)), INFINITE)

    def test_rejects_digraph(self):
        with self.assertRaises(GraphError):
            wiener(directed_cycle(3))

    def test_directed_cycle(self):
        self.assertEqual(wiener_digraph(directed_cycle(3)), 9)
        self.assertEqual(wiener_digraph(directed_cycle(5)), 5 * 10)

    def test_agrees_with_networkx_on_random_graphs(self):
        rng = np.random.default_rng(SEED)
        checked = 0
        while checked < 40:
            n = int(rng.integers(2, 15))
            nxg = nx.gnp_random_graph(n, 0.4, seed=int(rng.integers(1 << 30)))
            if not nx.is_connected(nxg):
                continue
            g = from_networkx(nxg)
            self.assertEqual(wiener(g), nx_wiener(g))
            radius, diameter = radius_diameter(g)
            self.assertEqual((radius, diameter), (nx.radius(nxg), nx.diameter(nxg)))
            self.assertLessEqual(radius, diameter)
            self.assertLessEqual(diameter, 2 * radius)
            checked += 1

    def test_agrees_with_networkx_on_random_digraphs(self):
        rng = np.random.default_rng(SEED + 1)
        strong = 0
        for _ in range(120):
            n = int(rng.integers(2, 12))
            nxg = nx.gnp_random_graph(n, 0.3, seed=int(rng.integers(1 << 30)), directed=True)
            d = from_networkx(nxg)
            out_ecc, in_ecc = eccentricities(d)
            sums = [a + b for a, b in zip(out_ecc, in_ecc) if a is not INFINITE and b is not INFINITE]
            doubled = digraph_radii(d)[2]
            total = wiener_digraph(d)
            if nx.is_strongly_connected(nxg):
                strong += 1
                self.assertTrue(is_strongly_connected(d))
                self.assertEqual(total, nx_wiener(d))
                self.assertEqual(doubled, min(sums))
            else:
                self.assertFalse(is_strongly_connected(d))
                self.assertIs(total, INFINITE)
                self.assertEqual(sums, [])
                self.assertIs(doubled, INFINITE)
        self.assertGreater(strong, 0)
        self.assertLess(strong, 120)


class DistanceTest(unittest.TestCase):
    def test_bfs_distances(self):
        self.assertEqual(bfs_distances(clique(3), 0), [0, 1, 1])
        for source in range(6):
            self.assertEqual(sorted(bfs_distances(cycle(6), source)), [0, 1, 1, 2, 2, 3])
        row = bfs_distances(directed_cycle(3), 0)
        self.assertEqual(row, [0, 1, 2])
        self.assertTrue(all(type(x) is int for x in row))
        self.assertEqual(bfs_distances(empty(2), 1), [UNREACHABLE, 0])

    def test_bfs_distances_source_out_of_range(self):
        for source in (-1, 3):
            with self.assertRaises(VertexError):
                bfs_distances(clique(3), source)

    def test_all_pairs_is_the_same_on_threads(self):
        g = G_nrs(20, 4, 3)
        np.testing.assert_array_equal(all_pairs(g).dist, all_pairs(g, threads=4).dist)

    def test_all_pairs_total_counts_ordered_pairs(self):
        self.assertEqual(all_pairs(cycle(6)).total(), 2 * 27)

    def test_radius_and_wiener_in_one_sweep(self):
        self.assertEqual(radius_and_wiener(cycle(6)), (3, 27))
        self.assertEqual(radius_and_wiener(empty(2)), (INFINITE, INFINITE))

    def test_digraph_radii(self):
        self.assertEqual(digraph_radii(directed_cycle(5)), (4, 4, 8))
        self.assertEqual(digraph_radii(directed_cycle(4))[0], 3)

    def test_half_integer_radius_through_doubled_value(self):
        d = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0), (1, 0)])
        _, _, doubled = digraph_radii(d)
        self.assertEqual(doubled, 3)

    def test_eccentricities_of_digraph_are_a_pair(self):
        out_ecc, in_ecc = eccentricities(directed_cycle(3))
        self.assertEqual(out_ecc, [2, 2, 2])
        self.assertEqual(in_ecc, [2, 2, 2])

    def test_vertex_distance_sums(self):
        self.assertEqual(vertex_distance_sums(path(3)), [3, 2, 3])
        out_sums, in_sums = vertex_distance_sums(directed_cycle(3))
        self.assertEqual(out_sums, [3, 3, 3])
        self.assertEqual(in_sums, [3, 3, 3])

    def test_average_distance_is_exact(self):
        self.assertEqual(average_distance(cycle(4)), Fraction(4, 3))
        self.assertEqual(average_distance(directed_cycle(3)), Fraction(3, 2))
        self.assertIs(average_distance(empty(3)), INFINITE)


class ConnectivityTest(unittest.TestCase):
    def test_connectivity(self):
        self.assertTrue(is_connected(path(4)))
        self.assertFalse(is_connected(empty(2)))
        self.assertTrue(is_strongly_connected(directed_cycle(4)))
        self.assertFalse(is_strongly_connected(directed_path(4)))

    def test_is_tree(self):
        self.assertTrue(is_tree(path(4)))
        self.assertFalse(is_tree(cycle(4)))
        self.assertFalse(is_tree(empty(3)))


class CliqueTest(unittest.TestCase):
    def test_clique_number_matches_networkx(self):
        for g in (petersen(), hypercube(3), clique(6), G_nrs(12, 3, 2), complement(cycle(7))):
            expected = max(len(c) for c in nx.find_cliques(to_networkx(g)))
            self.assertEqual(clique_number(g), expected)

    def test_greedy_clique_meets_its_size_bound(self):
        g = G_nrs(14, 3, 3)
        for min_degree in (3, 5, 7):
            selected = [v for v in range(g.order) if g.degree(v) >= min_degree]
            found = greedy_degree_clique(g, min_degree)
            for i, u in enumerate(found):
                for v in found[i + 1:]:
                    self.assertTrue(g.has_edge(u, v))
            self.assertGreaterEqual(len(found), ceil(len(selected) / (g.order - min_degree)))

    def test_greedy_clique_bound_on_random_graphs(self):
        rng = np.random.default_rng(SEED + 2)
        for _ in range(60):
            n = int(rng.integers(2, 16))
            g = from_networkx(nx.gnp_random_graph(n, float(rng.uniform(0.2, 0.9)), seed=int(rng.integers(1 << 30))))
            for min_degree in range(n):
                selected = sum(1 for v in range(n) if g.degree(v) >= min_degree)
                found = greedy_degree_clique(g, min_degree)
                self.assertTrue(all(g.degree(v) >= min_degree for v in found))
                self.assertTrue(all(g.has_edge(u, v) for i, u in enumerate(found) for v in found[i + 1:]))
                self.assertGreaterEqual(len(found), ceil(selected / (n - min_degree)))


class TransformTest(unittest.TestCase):
    def test_complement_of_c5_is_c5(self):
        self.assertTrue(nx.is_isomorphic(to_networkx(complement(cycle(5))), to_networkx(cycle(5))))

    def test_relabel_keeps_invariants(self):
        g = G_nrs(9, 3, 1)
        perm = [3, 7, 0, 8, 1, 5, 2, 6, 4]
        h = relabel(g, perm)
        self.assertEqual(wiener(h), wiener(g))
        self.assertTrue(h.has_edge(perm[0], perm[g.neighbors(0)[0]]))

    def test_metrics_invariant_under_random_relabelling(self):
        rng = np.random.default_rng(SEED + 4)
        for g in (G_nrs(9, 3, 1), petersen(), hypercube(3), path(7)):
            expected = (wiener(g), radius_diameter(g), sorted(eccentricities(g)))
            for _ in range(100):
                h = relabel(g, [int(v) for v in rng.permutation(g.order)])
                self.assertEqual((wiener(h), radius_diameter(h), sorted(eccentricities(h))), expected)
        for d in (D_nrs(10, 3, 1), directed_cycle(6), directed_path(5)):
            out_ecc, in_ecc = eccentricities(d)
            expected = (wiener_digraph(d), digraph_radii(d), sorted(zip(out_ecc, in_ecc), key=repr))
            for _ in range(100):
                h = relabel(d, [int(v) for v in rng.permutation(d.order)])
                out_h, in_h = eccentricities(h)
                self.assertEqual((wiener_digraph(h), digraph_radii(h), sorted(zip(out_h, in_h), key=repr)), expected)

    def test_complement_digraph(self):
        self.assertEqual(complement_digraph(directed_cycle(3)), directed_cycle(3).reverse())
        self.assertEqual(complement_digraph(complement_digraph(directed_cycle(5))), directed_cycle(5))

    def test_degrees(self):
        self.assertEqual(degrees(clique(4)), [3, 3, 3, 3])
        self.assertEqual(degrees(directed_cycle(5)), [(1, 1, 2)] * 5)
        self.assertEqual(sorted(total for _, _, total in degrees(D_nrs(6, 3, 1))), [4, 4, 5, 5, 7, 7])

    def test_relabel_needs_a_permutation(self):
        with self.assertRaises(GraphError):
            relabel(path(3), [0, 0, 1])

    def test_spanning_tree_from_a_center_keeps_radius(self):
        g = G_nrs(8, 3, 1)
        eccs = eccentricities(g)
        center = eccs.index(min(eccs))
        tree = bfs_spanning_tree(g, center)
        self.assertTrue(is_tree(tree))
        self.assertEqual(radius_diameter(tree)[0], 3)
        self.assertGreater(wiener(tree), wiener(g))


class SummaryTest(unittest.TestCase):
    def test_hypercube_summary(self):
        data = summarize(hypercube(3)).to_json_dict()
        self.assertEqual(data["wiener"], 48)
        self.assertEqual(data["radius"], 3)
        self.assertEqual(data["size"], 12)

    def test_directed_summary(self):
        data = summarize(directed_cycle(5)).to_json_dict()
        self.assertEqual(data["out_radius"], 4)
        self.assertEqual(data["doubled_radius"], 8)

    def test_disconnected_summary(self):
        self.assertEqual(summarize(empty(2)).to_json_dict()["wiener"], "infinite")


if __name__ == "__main__":
    unittest.main()
