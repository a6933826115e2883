import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from canonical import canonical_form, canonical_graph
from codec import encode
from enumeration import MAX_ENUMERATION_ORDER, collect_parallel
from graph_types import INFINITE, AnyGraph, Digraph, Graph, ParameterDomainError
from metrics import is_tree, radius_and_wiener, wiener_digraph

logger = logging.getLogger(__name__)

SURVEY_SCHEMA_VERSION = 1
OUTRADIUS1_MAX_ORDER = 6


@dataclass
class ExtremalClass:
    certificate: str
    encoding: str
    graph: AnyGraph


@dataclass
class SurveyReport:
    mode: str
    params: Dict[str, int]
    optimum: Optional[int]
    extremal: List[ExtremalClass] = field(default_factory=list)
    classes_examined: int = 0
    classes_matching: int = 0
    elapsed_seconds: float = 0.0
    extremal_are_trees: Optional[bool] = None

    @property
    def feasible(self) -> bool:
        return self.optimum is not None

    def to_json_dict(self, include_timing: bool = False) -> Dict[str, object]:
        data: Dict[str, object] = {
            "schema": SURVEY_SCHEMA_VERSION,
            "mode": self.mode,
            "params": dict(self.params),
            "feasible": self.feasible,
            "optimum": self.optimum,
            "classes_examined": self.classes_examined,
            "classes_matching": self.classes_matching,
            "extremal": [{"certificate": e.certificate, "encoding": e.encoding} for e in self.extremal],
        }
        if self.extremal_are_trees is not None:
            data["extremal_are_trees"] = self.extremal_are_trees
        if include_timing:
            data["elapsed_seconds"] = round(self.elapsed_seconds, 3)
        return data


@dataclass
class _Tally:
    examined: int = 0
    matching: int = 0
    best: Optional[int] = None
    winners: List[AnyGraph] = field(default_factory=list)

    def offer(self, value: int, g: AnyGraph, maximize: bool) -> None:
        self.matching += 1
        if self.best is None or (value > self.best if maximize else value < self.best):
            self.best = value
            self.winners = [g]
        elif value == self.best:
            self.winners.append(g)


def _merge(tallies: Sequence[_Tally], maximize: bool) -> _Tally:
    merged = _Tally()
    for tally in tallies:
        merged.examined += tally.examined
        merged.matching += tally.matching
        if tally.best is None:
            continue
        if merged.best is None or (tally.best > merged.best if maximize else tally.best < merged.best):
            merged.best = tally.best
            merged.winners = list(tally.winners)
        elif tally.best == merged.best:
            merged.winners.extend(tally.winners)
    return merged


def _extremal_classes(graphs: Sequence[AnyGraph]) -> List[ExtremalClass]:
    by_certificate: Dict[bytes, ExtremalClass] = {}
    for g in graphs:
        certificate = canonical_form(g)
        if certificate.data in by_certificate:
            continue
        representative = canonical_graph(g)
        by_certificate[certificate.data] = ExtremalClass(certificate.hex(), encode(representative), representative)
    return [by_certificate[key] for key in sorted(by_certificate)]


def _radius_survey(
    mode: str,
    n: int,
    r: int,
    maximize: bool,
    threads: int,
    shards: Optional[int],
    progress: bool,
) -> SurveyReport:
    start = time.perf_counter()

    def visit(stream: Iterator[Graph]) -> _Tally:
        tally = _Tally()
        for g in stream:
            tally.examined += 1
            radius, total = radius_and_wiener(g)
            if radius == r:
                tally.offer(total, g, maximize)
        return tally

    tallies = collect_parallel(n, visit, threads=threads, shards=shards, connected_only=True, progress=progress)
    merged = _merge(tallies, maximize)
    report = SurveyReport(
        mode=mode,
        params={"n": n, "r": r},
        optimum=merged.best,
        extremal=_extremal_classes(merged.winners),
        classes_examined=merged.examined,
        classes_matching=merged.matching,
        elapsed_seconds=time.perf_counter() - start,
    )
    if not report.feasible:
        logger.warning("%s survey n=%d r=%d: no connected graph has this radius", mode, n, r)
    logger.info(
        "%s survey n=%d r=%d: optimum %s over %d classes (%d with radius r), %d extremal, %.2fs",
        mode, n, r, report.optimum, report.classes_examined, report.classes_matching,
        len(report.extremal), report.elapsed_seconds,
    )
    return report


def min_wiener_radius_survey(
    n: int,
    r: int,
    threads: int = 1,
    shards: Optional[int] = None,
    progress: bool = False,
) -> SurveyReport:
    """Minimum Wiener index over connected graphs of order n and radius r."""
    if r < 3 or n < 2 * r or n > MAX_ENUMERATION_ORDER:
        raise ParameterDomainError(f"min-wiener survey needs r >= 3 and 2r <= n <= {MAX_ENUMERATION_ORDER}, got n={n}, r={r}")
    return _radius_survey("min-wiener", n, r, False, threads, shards, progress)


def max_wiener_radius_survey(
    n: int,
    r: int,
    threads: int = 1,
    shards: Optional[int] = None,
    progress: bool = False,
) -> SurveyReport:
    """Maximum Wiener index over connected graphs of order n and radius r; records whether all optima are trees."""
    if r < 1 or not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ParameterDomainError(f"max-wiener survey needs r >= 1 and 1 <= n <= {MAX_ENUMERATION_ORDER}, got n={n}, r={r}")
    report = _radius_survey("max-wiener", n, r, True, threads, shards, progress)
    if report.feasible:
        report.extremal_are_trees = all(is_tree(e.graph) for e in report.extremal)
        if not report.extremal_are_trees:
            logger.error("max-wiener survey n=%d r=%d: an extremal graph is not a tree", n, r)
    return report


def outradius1_arc_slots(n: int) -> List[Tuple[int, int]]:
    """Free arcs once vertex 0 points at every other vertex."""
    inner = [(i, j) for i in range(1, n) for j in range(1, n) if i != j]
    return inner + [(i, 0) for i in range(1, n)]


def _outradius1_digraph(n: int, slots: Sequence[Tuple[int, int]], mask: int) -> Digraph:
    rows = [0] * n
    rows[0] = ((1 << n) - 1) & ~1
    bit = 0
    while mask:
        if mask & 1:
            u, v = slots[bit]
            rows[u] |= 1 << v
        mask >>= 1
        bit += 1
    return Digraph(n, tuple(rows))


def max_wiener_outradius1_survey(
    n: int,
    threads: int = 1,
    shards: Optional[int] = None,
    progress: bool = False,
) -> SurveyReport:
    """Maximum Wiener index over strongly connected digraphs of out-radius 1.

    Every such digraph is isomorphic to one where vertex 0 reaches all others
    in one step, so the labelled digraphs over the remaining arc slots cover
    every class; the optima are deduplicated by certificate.
    """
    if not 2 <= n <= OUTRADIUS1_MAX_ORDER:
        raise ParameterDomainError(f"out-radius-1 survey needs 2 <= n <= {OUTRADIUS1_MAX_ORDER}, got n={n}")
    start = time.perf_counter()
    slots = outradius1_arc_slots(n)
    total = 1 << len(slots)
    count = shards or max(threads, 1)
    bounds = [(total * i // count, total * (i + 1) // count) for i in range(count)]

    def visit(span: Tuple[int, int]) -> _Tally:
        tally = _Tally()
        low, high = span
        for mask in tqdm(range(low, high), desc=f"out-radius 1, n={n}", disable=not progress, leave=False):
            tally.examined += 1
            d = _outradius1_digraph(n, slots, mask)
            value = wiener_digraph(d)
            if value is not INFINITE:
                tally.offer(value, d, True)
        return tally

    if threads > 1 and count > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            tallies = list(pool.map(visit, bounds))
    else:
        tallies = [visit(span) for span in bounds]
    merged = _merge(tallies, True)
    report = SurveyReport(
        mode="outradius1-max",
        params={"n": n},
        optimum=merged.best,
        extremal=_extremal_classes(merged.winners),
        classes_examined=merged.examined,
        classes_matching=merged.matching,
        elapsed_seconds=time.perf_counter() - start,
    )
    logger.info(
        "out-radius-1 survey n=%d: max %s over %d labelled digraphs, %d extremal classes, %.2fs",
        n, report.optimum, report.classes_examined, len(report.extremal), report.elapsed_seconds,
    )
    return report
