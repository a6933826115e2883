"""Named suites that check constructions against closed forms by direct BFS.

Each suite returns a SuiteResult; a suite passes when it has no failures.
Builders are parameters so that a deliberately broken construction can be
run through the same checks.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from tqdm import tqdm

from canonical import canonical_form
from codec import encode_digraph6, encode_graph6, parse_digraph6, parse_graph6, to_networkx
from constructions import (
    D_nrs,
    KNOWN_CHORD_SETS,
    G_nrs,
    out_radius_path,
    outradius1_path,
    outradius1_fan,
    figure_digraph,
    max_rad_construction,
    min_rad_construction,
    out_radius_split,
)
from constructions.base import split_bounds
from constructions.maximum import chord_digraph, converse_chords
from formulas import (
    digraph_max_arcs,
    eq1_wiener,
    eq2_wiener,
    maxrad_construction_lower,
    maxradplus_construction_wiener,
    min_digraph_wiener_small_r,
    min_rad_construction_wiener,
    min_rad_lower_bound,
    min_rad_rigorous_bound,
    radplus1_max_wiener,
    vizing_max_size,
)
from graph_types import INFINITE, Digraph, Graph, ParameterDomainError
from metrics import all_pairs, digraph_radii, radius_and_wiener, wiener_digraph

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240229
CODEC_CASES = 10_000
CODEC_MAX_ORDER = 20

GraphBuilder = Callable[[int, int, int], Graph]
DigraphBuilder = Callable[[int, int, int], Digraph]


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> bool:
        self.cases += 1
        if not condition:
            self.failures.append(message)
            logger.error("%s: %s", self.name, message)
        return condition

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.cases} cases, {len(self.failures)} failures, {self.seconds:.2f}s"


def _finish(result: SuiteResult, start: float) -> SuiteResult:
    result.seconds = time.perf_counter() - start
    logger.info("%s", result.summary_line())
    return result


def eq1_sweep(
    builder: GraphBuilder = G_nrs,
    r_values: Sequence[int] = range(3, 9),
    n_max: int = 64,
    progress: bool = False,
) -> SuiteResult:
    """wiener and radius of G_nrs against the closed form, over every valid s."""
    result = SuiteResult("eq1-sweep")
    start = time.perf_counter()
    for r in tqdm(r_values, desc="eq1-sweep", disable=not progress, leave=False):
        for n in range(2 * r, n_max + 1):
            expected = eq1_wiener(n, r)
            low, high = split_bounds(n, r)
            for s in range(low, high + 1):
                radius, total = radius_and_wiener(builder(n, r, s))
                result.check(
                    radius == r and total == expected,
                    f"G_nrs(n={n}, r={r}, s={s}): radius {radius}, wiener {total}, expected radius {r}, wiener {expected}",
                )
    return _finish(result, start)


def eq2_sweep(
    builder: DigraphBuilder = D_nrs,
    r_values: Sequence[int] = range(3, 8),
    n_max: int = 40,
    progress: bool = False,
) -> SuiteResult:
    """wiener_digraph, out-radius and strong connectivity of D_nrs against the closed form."""
    result = SuiteResult("eq2-sweep")
    start = time.perf_counter()
    for r in tqdm(r_values, desc="eq2-sweep", disable=not progress, leave=False):
        for n in range(2 * r, n_max + 1):
            expected = eq2_wiener(n, r)
            low, high = split_bounds(n, r)
            for s in range(low, high + 1):
                d = builder(n, r, s)
                total = wiener_digraph(d)
                out_radius, _, _ = digraph_radii(d)
                result.check(
                    total is not INFINITE and total == expected and out_radius == r,
                    f"D_nrs(n={n}, r={r}, s={s}): out_radius {out_radius}, wiener {total}, "
                    f"expected out_radius {r}, wiener {expected}",
                )
    return _finish(result, start)


def increments(eq1_n_max: int = 64, eq2_n_max: int = 40) -> SuiteResult:
    """Adding a vertex to the extremal families costs exactly the per-vertex minimum."""
    result = SuiteResult("increments")
    start = time.perf_counter()
    for r in range(3, 9):
        for n in range(2 * r + 1, eq1_n_max + 1):
            step = eq1_wiener(n, r) - eq1_wiener(n - 1, r)
            result.check(step == (n - 1) + (r - 1) ** 2, f"eq1 step at n={n}, r={r} is {step}")
    for r in range(3, 8):
        for n in range(2 * r + 1, eq2_n_max + 1):
            step = eq2_wiener(n, r) - eq2_wiener(n - 1, r)
            result.check(step == 2 * (n - 1) + (r - 1) ** 2, f"eq2 step at n={n}, r={r} is {step}")
    return _finish(result, start)


def sizes(
    graph_builder: GraphBuilder = G_nrs,
    digraph_builder: DigraphBuilder = D_nrs,
    eq1_n_max: int = 64,
    eq2_n_max: int = 40,
) -> SuiteResult:
    """Edge and arc counts of the minimum families equal the extremal size bounds."""
    result = SuiteResult("sizes")
    start = time.perf_counter()
    for r in range(3, 9):
        for n in range(2 * r, eq1_n_max + 1):
            expected = vizing_max_size(n, r)
            low, high = split_bounds(n, r)
            for s in range(low, high + 1):
                count = graph_builder(n, r, s).edge_count()
                result.check(count == expected, f"|E(G_nrs(n={n}, r={r}, s={s}))| = {count}, expected {expected}")
    for r in range(3, 8):
        for n in range(2 * r, eq2_n_max + 1):
            expected = digraph_max_arcs(n, r)
            low, high = split_bounds(n, r)
            for s in range(low, high + 1):
                count = digraph_builder(n, r, s).arc_count()
                result.check(count == expected, f"|A(D_nrs(n={n}, r={r}, s={s}))| = {count}, expected {expected}")
                if r == 3:
                    result.check(count == (n - 2) ** 2, f"|A(D_nrs(n={n}, 3, s={s}))| = {count}, expected (n-2)^2")
    return _finish(result, start)


def figures(builder: Callable[..., object] = figure_digraph) -> SuiteResult:
    """Transcribed figure digraphs keep the order, size and radius they are drawn with."""
    result = SuiteResult("figures")
    start = time.perf_counter()

    for figure_id in ("rad3_q3", "rad3_g831", "rad3_g832"):
        radius, total = radius_and_wiener(builder(figure_id))
        result.check(radius == 3 and total == 48, f"{figure_id}: radius {radius}, wiener {total}, expected 3 and 48")

    core = builder("rad3_core")
    _, _, doubled = digraph_radii(core)
    result.check(
        core.order == 5 and core.arc_count() == 9 and doubled == 6,
        f"rad3_core: order {core.order}, arcs {core.arc_count()}, doubled radius {doubled}",
    )
    blown = builder("rad3_core_blowup", 20)
    cycle_blowup = wiener_digraph(min_rad_construction(20, 6))
    blown_total = wiener_digraph(blown)
    result.check(
        digraph_radii(blown)[2] == 6 and blown_total < cycle_blowup,
        f"rad3_core_blowup(20): wiener {blown_total} is not below the cycle blow-up {cycle_blowup}",
    )

    for r, drawn in KNOWN_CHORD_SETS.items():
        for variant, chords in drawn.items():
            for n in range(2 * r + 1, 2 * r + 4):
                _, _, doubled = digraph_radii(chord_digraph(n, r, chords))
                result.check(doubled == 2 * r, f"chord set r={r} {variant} at n={n}: doubled radius {doubled}")
        closed = {tuple(sorted(c)) for c in drawn.values()}
        images = {tuple(converse_chords(r, c)) for c in drawn.values()}
        result.check(closed == images, f"chord sets for r={r} are not closed under the converse map")

    for n in range(4, 13):
        if canonical_form(outradius1_path(n)) == canonical_form(outradius1_fan(n)):
            note = f"outradius1_path and outradius1_fan are isomorphic at n={n}"
            result.notes.append(note)
            logger.warning("%s", note)
    return _finish(result, start)


def codecs(seed: int = DEFAULT_SEED, count: int = CODEC_CASES, max_order: int = CODEC_MAX_ORDER) -> SuiteResult:
    """Seeded roundtrips plus fixed vectors; graph6 output is compared with networkx's writer."""
    result = SuiteResult("codecs")
    start = time.perf_counter()
    result.check(encode_graph6(Graph.from_edges(2, [(0, 1)])) == "A_", "K_2 does not encode to 'A_'")
    result.check(encode_graph6(Graph(2, (0, 0))) == "A?", "empty 2-graph does not encode to 'A?'")
    result.check(encode_digraph6(Digraph.from_arcs(2, [(0, 1)])) == "&AO", "arc 0->1 does not encode to '&AO'")

    rng = np.random.default_rng(seed)
    for case in range(count):
        n = int(rng.integers(1, max_order + 1))
        density = float(rng.random())
        g = Graph(n, _random_rows(rng, n, density, directed=False))
        text = encode_graph6(g)
        reference = nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()
        result.check(text == reference, f"graph6 case {case}: {text!r} differs from reference {reference!r}")
        result.check(parse_graph6(text) == g, f"graph6 case {case}: roundtrip changed the graph")
        d = Digraph(n, _random_rows(rng, n, density, directed=True))
        text = encode_digraph6(d)
        result.check(
            all(63 <= ord(ch) <= 126 for ch in text[1:]) and parse_digraph6(text) == d,
            f"digraph6 case {case}: roundtrip or charset failure for {text!r}",
        )
    logger.debug("codecs: seed %d, %d random instances of each kind", seed, count)
    return _finish(result, start)


def _random_rows(rng: np.random.Generator, n: int, density: float, directed: bool) -> Tuple[int, ...]:
    matrix = rng.random((n, n)) < density
    np.fill_diagonal(matrix, False)
    if not directed:
        matrix = np.triu(matrix, 1)
        matrix = matrix | matrix.T
    return tuple(sum(1 << int(v) for v in np.flatnonzero(row)) for row in matrix)


def minrad(builder: Callable[[int, int], Digraph] = min_rad_construction, n_max: int = 30) -> SuiteResult:
    """Radius, exact value and bounds of the small-Wiener digraphs of given radius."""
    result = SuiteResult("minrad")
    start = time.perf_counter()
    for doubled_r in (2, 3, 4):
        for n in range(3, 13):
            d = builder(n, doubled_r)
            total = wiener_digraph(d)
            _, _, doubled = digraph_radii(d)
            expected = min_digraph_wiener_small_r(n, doubled_r)
            result.check(
                doubled == doubled_r and total == expected,
                f"min_rad(n={n}, 2r={doubled_r}): doubled radius {doubled}, wiener {total}, expected {expected}",
            )
    for doubled_r in (5, 6, 7, 8):
        gaps = set()
        for n in range(doubled_r + 3, n_max + 1):
            d = builder(n, doubled_r)
            total = wiener_digraph(d)
            _, _, doubled = digraph_radii(d)
            result.check(doubled == doubled_r, f"min_rad(n={n}, 2r={doubled_r}): doubled radius {doubled}")
            result.check(
                total == min_rad_construction_wiener(n, doubled_r),
                f"min_rad(n={n}, 2r={doubled_r}): wiener {total} differs from the closed form",
            )
            result.check(
                total >= min_rad_rigorous_bound(n, doubled_r),
                f"min_rad(n={n}, 2r={doubled_r}): wiener {total} is below the lower bound",
            )
            gaps.add(total - min_rad_lower_bound(n, doubled_r))
        result.check(len(gaps) == 1, f"min_rad 2r={doubled_r}: gap to the leading terms varies with n: {sorted(gaps)}")
    return _finish(result, start)


def maxrad(builder: Callable[[int, int], Digraph] = max_rad_construction, span: int = 15) -> SuiteResult:
    """max_rad_construction keeps radius r and meets the proof's lower expression."""
    result = SuiteResult("maxrad")
    start = time.perf_counter()
    for r in range(1, 6):
        for n in range(2 * r + 1, 2 * r + 1 + span):
            d = builder(n, r)
            total = wiener_digraph(d)
            _, _, doubled = digraph_radii(d)
            bound = maxrad_construction_lower(n, r)
            result.check(
                doubled == 2 * r and total is not INFINITE and total >= bound,
                f"max_rad(n={n}, r={r}): doubled radius {doubled}, wiener {total}, lower expression {bound}",
            )
    return _finish(result, start)


def _pair_identity_failures(d: Digraph, n: int, r: int) -> List[str]:
    dist = all_pairs(d)
    q, _ = out_radius_split(n, r)
    failures = []
    for p in range(q):
        for i in range(1, r + 1):
            x = p * r + i
            for u in [0] + list(range(x + 1, n)):
                if dist[x, u] + dist[u, x] != n - p * r:
                    failures.append(f"out_radius_path(n={n}, r={r}): d(v{x},{u}) + d({u},v{x}) != {n - p * r}")
    return failures


def radplus(builder: Callable[[int, int], Digraph] = out_radius_path, span: int = 19) -> SuiteResult:
    """Out-radius r path digraphs against the exact sum, and both out-radius-1 maximisers."""
    result = SuiteResult("radplus")
    start = time.perf_counter()
    for r in range(2, 6):
        for n in range(2 * r + 2, 2 * r + 3 + span):
            d = builder(n, r)
            total = wiener_digraph(d)
            out_radius, _, _ = digraph_radii(d)
            expected = maxradplus_construction_wiener(n, r)
            result.check(
                out_radius == r and total == expected,
                f"out_radius_path(n={n}, r={r}): out_radius {out_radius}, wiener {total}, expected {expected}",
            )
            failures = _pair_identity_failures(d, n, r)
            result.check(not failures, failures[0] if failures else "")
    for n in range(4, 13):
        expected = radplus1_max_wiener(n)
        for name, d in (("outradius1_path", outradius1_path(n)), ("outradius1_fan", outradius1_fan(n))):
            total = wiener_digraph(d)
            out_radius, _, _ = digraph_radii(d)
            result.check(
                out_radius == 1 and total == expected,
                f"{name}(n={n}): out_radius {out_radius}, wiener {total}, expected {expected}",
            )
    return _finish(result, start)


SUITES: Dict[str, Callable[[int, bool], SuiteResult]] = {
    "eq1-sweep": lambda seed, progress: eq1_sweep(progress=progress),
    "eq2-sweep": lambda seed, progress: eq2_sweep(progress=progress),
    "increments": lambda seed, progress: increments(),
    "sizes": lambda seed, progress: sizes(),
    "figures": lambda seed, progress: figures(),
    "codecs": lambda seed, progress: codecs(seed=seed),
    "minrad": lambda seed, progress: minrad(),
    "maxrad": lambda seed, progress: maxrad(),
    "radplus": lambda seed, progress: radplus(),
}


def suite_names() -> List[str]:
    return list(SUITES) + ["all"]


def run_suite(name: str, seed: int = DEFAULT_SEED, progress: bool = False) -> List[SuiteResult]:
    if name == "all":
        return [runner(seed, progress) for runner in SUITES.values()]
    runner: Optional[Callable[[int, bool], SuiteResult]] = SUITES.get(name)
    if runner is None:
        raise ParameterDomainError(f"unknown suite {name!r}; known: {', '.join(suite_names())}")
    return [runner(seed, progress)]
