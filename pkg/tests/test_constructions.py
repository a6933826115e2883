import unittest

import networkx as nx

from codec import to_networkx
from construction_registry import build, family_names
from constructions import (
    DP,
    KNOWN_CHORD_SETS,
    FIGURES,
    ConstructionSpec,
    D_2r_r_1,
    D_nrs,
    G_nrs,
    bidirected_clique,
    blow_up,
    blow_up_digraph,
    chord_digraph,
    clique,
    converse,
    converse_chords,
    cycle,
    directed_cycle,
    empty,
    rad3_core,
    rad3_core_blowup,
    out_radius_path,
    outradius1_path,
    outradius1_fan,
    figure_digraph,
    hypercube,
    max_rad_construction,
    min_rad2_digraph,
    min_rad_construction,
    min_rad_three_halves_digraph,
    out_radius_split,
)
from formulas import (
    digraph_max_arcs,
    eq1_wiener,
    eq2_wiener,
    maxrad_construction_lower,
    maxradplus_construction_wiener,
    min_rad_lower_bound,
    min_rad_rigorous_bound,
    radplus1_max_wiener,
    vizing_max_size,
)
from graph_types import ParameterDomainError, VertexError
from metrics import all_pairs, digraph_radii, is_strongly_connected, radius_and_wiener, wiener, wiener_digraph


def _isomorphic(a, b) -> bool:
    return nx.is_isomorphic(to_networkx(a), to_networkx(b))


class PrimitiveTest(unittest.TestCase):
    def test_known_values(self):
        self.assertEqual(wiener(cycle(6)), 27)
        self.assertEqual(wiener(hypercube(3)), 48)
        self.assertEqual(digraph_radii(directed_cycle(4))[0], 3)

    def test_domains(self):
        with self.assertRaises(ParameterDomainError):
            cycle(2)
        with self.assertRaises(ParameterDomainError):
            directed_cycle(1)


class BlowUpTest(unittest.TestCase):
    def test_identity_blow_up(self):
        self.assertTrue(_isomorphic(blow_up(cycle(4), 0, clique(1)), cycle(4)))
        self.assertTrue(_isomorphic(blow_up_digraph(directed_cycle(4), 2, bidirected_clique(1)), directed_cycle(4)))

    def test_order_and_degrees(self):
        self.assertEqual(blow_up(cycle(6), 0, clique(3)).order, 8)
        g = blow_up(cycle(6), 0, empty(3))
        # Former neighbours 1 and 5 of the blown vertex are now 0 and 4.
        self.assertEqual(g.degree(0), 4)
        self.assertEqual(g.degree(4), 4)

    def test_arc_count_of_digraph_blow_up(self):
        host = directed_cycle(5)
        h = bidirected_clique(3)
        v = 2
        blown = blow_up_digraph(host, v, h)
        rest = host.arc_count() - host.out_degree(v) - host.in_degree(v)
        self.assertEqual(blown.arc_count(), rest + h.arc_count() + (host.out_degree(v) + host.in_degree(v)) * h.order)

    def test_invalid_vertex(self):
        with self.assertRaises(VertexError):
            blow_up(cycle(4), 4, clique(2))


class MinimumFamiliesTest(unittest.TestCase):
    def test_g_nrs_examples(self):
        self.assertTrue(_isomorphic(G_nrs(6, 3, 1), cycle(6)))
        self.assertEqual(wiener(G_nrs(8, 3, 1)), 48)
        self.assertEqual(G_nrs(10, 3, 2).edge_count(), 24)

    def test_g_nrs_matches_closed_forms(self):
        for r in (3, 4, 5):
            for n in range(2 * r, 2 * r + 9):
                for s in range(1, (n - 2 * r + 2) // 2 + 1):
                    g = G_nrs(n, r, s)
                    self.assertEqual(radius_and_wiener(g), (r, eq1_wiener(n, r)))
                    self.assertEqual(g.edge_count(), vizing_max_size(n, r))

    def test_g_nrs_allows_radius_two(self):
        self.assertEqual(radius_and_wiener(G_nrs(6, 2, 2))[0], 2)

    def test_g_nrs_domain(self):
        for args in ((8, 3, 0), (8, 3, 3), (5, 3, 1), (8, 1, 1)):
            with self.subTest(args=args):
                with self.assertRaises(ParameterDomainError):
                    G_nrs(*args)

    def test_core_digraph(self):
        core = D_2r_r_1(3)
        self.assertEqual(core.order, 6)
        self.assertEqual(core.arc_count(), 16)
        self.assertEqual(digraph_radii(core)[0], 3)
        self.assertEqual(wiener_digraph(core), eq2_wiener(6, 3))
        for r in (4, 5, 6):
            self.assertEqual(D_2r_r_1(r).arc_count(), r * r + 3 * r - 2)

    def test_d_nrs_matches_closed_forms(self):
        for r in (3, 4):
            for n in range(2 * r, 2 * r + 7):
                for s in range(1, (n - 2 * r + 2) // 2 + 1):
                    d = D_nrs(n, r, s)
                    self.assertTrue(is_strongly_connected(d))
                    self.assertEqual(digraph_radii(d)[0], r)
                    self.assertEqual(wiener_digraph(d), eq2_wiener(n, r))
                    self.assertEqual(d.arc_count(), digraph_max_arcs(n, r))
        self.assertEqual(D_nrs(10, 3, 2).arc_count(), 64)
        self.assertEqual(digraph_radii(D_nrs(10, 4, 2))[0], 4)

    def test_small_radius_digraphs(self):
        self.assertEqual(wiener_digraph(min_rad2_digraph(6, (3, 3))), 36)
        self.assertEqual(wiener_digraph(min_rad2_digraph(4, (4,))), 16)
        self.assertEqual(digraph_radii(min_rad2_digraph(6, (2, 4)))[2], 4)
        self.assertEqual(wiener_digraph(min_rad_three_halves_digraph(6)), 33)
        self.assertEqual(digraph_radii(min_rad_three_halves_digraph(7))[2], 3)
        with self.assertRaises(ParameterDomainError):
            min_rad2_digraph(6, (3, 2))

    def test_min_rad_construction_radius_and_bounds(self):
        for doubled_r in (5, 6, 7, 8):
            gaps = set()
            for n in range(doubled_r + 3, 26):
                d = min_rad_construction(n, doubled_r)
                total = wiener_digraph(d)
                self.assertEqual(digraph_radii(d)[2], doubled_r)
                self.assertGreaterEqual(total, min_rad_rigorous_bound(n, doubled_r))
                gaps.add(total - min_rad_lower_bound(n, doubled_r))
            self.assertEqual(len(gaps), 1, f"2r={doubled_r}")

    def test_min_rad_construction_example(self):
        self.assertEqual(digraph_radii(min_rad_construction(20, 6))[2], 6)
        self.assertEqual(wiener_digraph(min_rad_construction(20, 6)), 488)
        self.assertEqual(wiener_digraph(min_rad_construction(20, 5)), 454)

    def test_min_rad_construction_domain(self):
        with self.assertRaises(ParameterDomainError):
            min_rad_construction(5, 6)
        with self.assertRaises(ParameterDomainError):
            min_rad_construction(10, 1)


class MaximumFamiliesTest(unittest.TestCase):
    def test_dp(self):
        self.assertEqual(DP(5, 5), directed_cycle(5))
        for n, d in ((9, 4), (12, 6)):
            g = DP(n, d)
            self.assertEqual(g.order, n)
            self.assertEqual(g.arc_count(), (d - 2) + 2 * (n - d + 1))

    def test_max_rad_construction(self):
        d = max_rad_construction(20, 3)
        self.assertEqual(digraph_radii(d)[2], 6)
        self.assertGreaterEqual(wiener_digraph(d), maxrad_construction_lower(20, 3))
        self.assertEqual(maxrad_construction_lower(20, 3), 1728)

    def test_max_rad_at_radius_one_drops_loops(self):
        d = max_rad_construction(6, 1)
        self.assertEqual(d, DP(6, 2))
        self.assertEqual(digraph_radii(d)[2], 2)

    def test_chord_digraph_validates_chords(self):
        for chords in (((2, 3),), ((6, 1),), ((3, 0),)):
            with self.subTest(chords=chords):
                with self.assertRaises(ParameterDomainError):
                    chord_digraph(8, 3, chords)

    def test_converse(self):
        d = chord_digraph(9, 3, ((4, 2), (5, 1)))
        self.assertEqual(sorted(converse(d).arcs()), sorted((v, u) for u, v in d.arcs()))
        self.assertEqual(converse_chords(3, ((4, 2), (5, 1))), [(4, 2), (5, 1)])
        self.assertEqual(converse_chords(3, ((4, 1), (5, 1))), [(5, 1), (5, 2)])


class FigureTest(unittest.TestCase):
    def test_rad3_core(self):
        core = rad3_core()
        self.assertEqual((core.order, core.arc_count()), (5, 9))
        self.assertEqual(digraph_radii(core)[2], 6)

    def test_rad3_core_blowup_beats_cycle_blowup(self):
        blown = rad3_core_blowup(20)
        self.assertEqual(digraph_radii(blown)[2], 6)
        self.assertEqual(wiener_digraph(blown), 487)
        self.assertLess(wiener_digraph(blown), wiener_digraph(min_rad_construction(20, 6)))

    def test_outradius1_variants_attain_the_maximum(self):
        for n in range(4, 13):
            for d in (outradius1_path(n), outradius1_fan(n)):
                self.assertEqual(digraph_radii(d)[0], 1)
                self.assertEqual(wiener_digraph(d), radplus1_max_wiener(n))
        self.assertEqual(wiener_digraph(outradius1_fan(4)), 20)

    def test_out_radius_path_value_and_pair_identity(self):
        for r in (2, 3, 4):
            for n in range(2 * r + 2, 2 * r + 10):
                d = out_radius_path(n, r)
                self.assertEqual(digraph_radii(d)[0], r)
                self.assertEqual(wiener_digraph(d), maxradplus_construction_wiener(n, r))
                dist = all_pairs(d)
                q, _ = out_radius_split(n, r)
                for p in range(q):
                    for i in range(1, r + 1):
                        x = p * r + i
                        for u in [0] + list(range(x + 1, n)):
                            self.assertEqual(dist[x, u] + dist[u, x], n - p * r)

    def test_out_radius_split(self):
        self.assertEqual(out_radius_split(20, 3), (6, 2))
        self.assertEqual(out_radius_split(5, 3), (1, 2))
        self.assertEqual(out_radius_split(7, 3), (1, 4))

    def test_chord_figures_have_radius_r(self):
        for r, drawn in KNOWN_CHORD_SETS.items():
            for chords in drawn.values():
                self.assertEqual(digraph_radii(chord_digraph(2 * r + 3, r, chords))[2], 2 * r)

    def test_chord_figures_closed_under_converse(self):
        for r, drawn in KNOWN_CHORD_SETS.items():
            sets = {tuple(sorted(c)) for c in drawn.values()}
            self.assertEqual({tuple(converse_chords(r, c)) for c in drawn.values()}, sets)

    def test_every_documented_figure_id_builds(self):
        ids = [
            "rad3_q3", "rad3_g831", "rad3_g832", "chord_r2", "chord_r3_a", "chord_r3_b", "chord_r3_c",
            "chord_r4", "chord_r5", "chord_r6_a", "chord_r6_b", "chord_r7_a", "chord_r7_b",
            "rad3_core", "rad3_core_blowup", "outradius1_path", "outradius1_fan",
        ]
        self.assertEqual(sorted(FIGURES), sorted(ids))
        for figure_id in ids:
            with self.subTest(figure_id=figure_id):
                g = figure_digraph(figure_id)
                self.assertGreaterEqual(g.order, FIGURES[figure_id].min_order)
        self.assertEqual(figure_digraph("out_radius_path", 10, 3).order, 10)

    def test_figure_lookup(self):
        self.assertEqual(wiener(figure_digraph("rad3_q3")), 48)
        self.assertEqual(figure_digraph("chord_r4", 11).order, 11)
        self.assertIn("chord_r6_a", FIGURES)
        self.assertIn("chord_r2", FIGURES)
        with self.assertRaises(ParameterDomainError):
            figure_digraph("out_radius_path", 10)
        with self.assertRaises(ParameterDomainError):
            figure_digraph("rad3_core", 7)
        with self.assertRaises(ParameterDomainError):
            figure_digraph("chord_r3_a", 5)
        with self.assertRaises(ParameterDomainError):
            figure_digraph("nope")


class RegistryTest(unittest.TestCase):
    def test_build_by_name(self):
        g = build(ConstructionSpec("G_nrs", n=8, r=3, s=1))
        self.assertEqual(wiener(g), 48)
        d = build(ConstructionSpec("chord", n=9, r=3, chords=((4, 1), (5, 1))))
        self.assertEqual(digraph_radii(d)[2], 6)

    def test_missing_parameters_and_unknown_family(self):
        with self.assertRaises(ParameterDomainError):
            build(ConstructionSpec("G_nrs", n=8, r=3))
        with self.assertRaises(ParameterDomainError):
            build(ConstructionSpec("no_such_family"))

    def test_every_family_builds_with_sample_parameters(self):
        samples = {
            "clique": dict(n=4), "empty": dict(n=3), "path": dict(n=4), "cycle": dict(n=5), "star": dict(n=5),
            "hypercube": dict(), "petersen": dict(), "bidirected_clique": dict(n=4), "directed_cycle": dict(n=4),
            "directed_path": dict(n=4), "G_nrs": dict(n=8, r=3, s=1), "D_2r_r_1": dict(r=3),
            "D_nrs": dict(n=8, r=3, s=1), "min_rad": dict(n=10, doubled_r=5), "min_rad2": dict(n=6),
            "min_rad_three_halves": dict(n=5), "DP": dict(n=8, d=4), "max_rad": dict(n=9, r=3),
            "chord": dict(n=9, r=3, chords=((5, 1),)), "figure": dict(figure="outradius1_fan", n=6),
        }
        self.assertEqual(sorted(samples), sorted(family_names()))
        for name, params in samples.items():
            with self.subTest(family=name):
                self.assertGreater(build(ConstructionSpec(name, **params)).order, 0)


if __name__ == "__main__":
    unittest.main()
