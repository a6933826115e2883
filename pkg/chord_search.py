"""Search for the backward chord sets on DP(n, 2r) with maximum Wiener index at radius r.

Labels: u_1 .. u_{2r-1} are the cycle vertices, b the vertex blown up into
m = n - 2r + 1 independent copies. A backward chord u_i -> u_j (i > j) never
shortens a path into or out of b, so every copy keeps d(x, b) + d(b, x) = 2r
and two copies sit at distance 2r. Hence

    W(n) = (W_core - S_b) + m S_b + m (m - 1) 2r,    S_b = 2r (2r - 1),

where W_core is the Wiener index of the 2r-vertex core (m = 1). Chord sets
differ only through W_core, which shrinks strictly with every added chord,
while the radius condition can only become true as chords are added. The
search is branch and bound over chord sets on the core.
"""
import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from canonical import canonical_form
from constructions.base import Chord
from constructions.figures import CONJECTURED_FROM_RADIUS, KNOWN_CHORD_SETS
from constructions.maximum import chord_digraph, converse_chords
from graph_types import ParameterDomainError
from metrics import bfs_levels, digraph_radii, wiener_digraph

logger = logging.getLogger(__name__)

MIN_CHORD_RADIUS = 2
MAX_CHORD_RADIUS = 7

Polynomial = Tuple[int, int, int]


@dataclass
class ChordSearchResult:
    r: int
    chords: Tuple[Chord, ...]
    polynomial: Polynomial
    rank: int
    k: int
    contains_base_arc: bool = False
    converse: Tuple[Chord, ...] = ()
    matches_figure: Optional[str] = None
    conjectured: bool = False

    def value(self, n: int) -> int:
        return polynomial_value(self.polynomial, n)

    def to_json_dict(self) -> Dict[str, object]:
        return {
            "r": self.r,
            "k": self.k,
            "rank": self.rank,
            "chords": [f"u{i}->u{j}" for i, j in self.chords],
            "polynomial": list(self.polynomial),
            "contains_base_arc": self.contains_base_arc,
            "converse": [f"u{i}->u{j}" for i, j in self.converse],
            "matches_figure": self.matches_figure,
            "conjectured": self.conjectured,
        }


def polynomial_value(coeffs: Polynomial, n: int) -> int:
    a2, a1, a0 = coeffs
    return a2 * n * n + a1 * n + a0


def interpolate_quadratic(points: Sequence[Tuple[int, int]]) -> Polynomial:
    """Exact (a2, a1, a0) through three points with consecutive abscissae."""
    (x0, y0), (x1, y1), (x2, y2) = points
    if not (x1 == x0 + 1 and x2 == x1 + 1):
        raise ValueError("interpolation needs three consecutive n values")
    a2 = Fraction(y2 - 2 * y1 + y0, 2)
    a1 = Fraction(y1 - y0) - a2 * (2 * x0 + 1)
    a0 = Fraction(y0) - a2 * x0 * x0 - a1 * x0
    if any(c.denominator != 1 for c in (a2, a1, a0)):
        raise ArithmeticError(f"non-integer interpolant through {points}")
    return int(a2), int(a1), int(a0)


def wiener_polynomial(r: int, chords: Sequence[Chord]) -> Polynomial:
    """W(n) of DP(n, 2r) plus chords, interpolated from BFS at n = 2r+1, 2r+2, 2r+3."""
    points = [(n, wiener_digraph(chord_digraph(n, r, chords))) for n in range(2 * r + 1, 2 * r + 4)]
    return interpolate_quadratic(points)


def candidate_chords(r: int) -> List[Chord]:
    return [(i, j) for i in range(2, 2 * r) for j in range(1, i)]


def _core_rows(r: int, chords: Sequence[Chord] = ()) -> List[int]:
    size = 2 * r
    b = size - 1
    rows = [0] * size
    for i in range(size - 1):
        rows[i] |= 1 << (i + 1)
    rows[b] |= 1
    for i, j in chords:
        rows[i - 1] |= 1 << (j - 1)
    return rows


def _distances(rows: Sequence[int]) -> np.ndarray:
    return np.array([bfs_levels(rows, s) for s in range(len(rows))], dtype=np.int64)


def _add_arc(dist: np.ndarray, tail: int, head: int) -> np.ndarray:
    # Exact after one inserted arc: D' = min(D, D[:, tail] + 1 + D[head, :]).
    return np.minimum(dist, dist[:, tail, None] + 1 + dist[None, head, :])


class _CoreSearch:
    """Branch and bound for the chord sets of one size with the largest core Wiener index.

    A node (chosen, start) is open only while chosen plus every chord from
    `start` on still reaches radius r. suffix[p] holds the core distances with
    all chords from position p on, so that test costs one min-plus update per
    chosen chord, batched over the children of a node.
    """

    def __init__(self, r: int, keep: int = 1):
        self.r = r
        self.size = 2 * r
        self.keep = keep
        singles = candidate_chords(r)
        base = _distances(_core_rows(r))
        base_total = int(base.sum())
        impact = {c: base_total - int(_distances(_core_rows(r, [c])).sum()) for c in singles}
        # Cheapest chords first, so high-W sets are met early and tighten the bound.
        self.order: List[Chord] = sorted(singles, key=lambda c: (impact[c], c))
        self.base = base
        self.tails = np.array([i - 1 for i, _ in self.order])
        self.heads = np.array([j - 1 for _, j in self.order])
        suffix = [base]
        for tail, head in zip(self.tails[::-1], self.heads[::-1]):
            suffix.append(_add_arc(suffix[-1], int(tail), int(head)))
        self.suffix = np.stack(suffix[::-1])
        self.nodes = 0

    def _valid(self, dist: np.ndarray) -> np.ndarray:
        """Radius test for a stack of core distance matrices."""
        cycle = self.size - 1
        spread = dist.max(axis=2)[:, :cycle] + dist.max(axis=1)[:, :cycle]
        return spread.min(axis=1) <= self.size

    def _open_children(self, chosen: Sequence[int], positions: np.ndarray) -> np.ndarray:
        closure = self.suffix[positions + 1]
        for p in chosen:
            tail, head = int(self.tails[p]), int(self.heads[p])
            closure = np.minimum(closure, closure[:, :, tail, None] + 1 + closure[:, None, head, :])
        rows = np.arange(len(positions))
        tails, heads = self.tails[positions], self.heads[positions]
        closure = np.minimum(closure, closure[rows, :, tails][:, :, None] + 1 + closure[rows, heads, :][:, None, :])
        return self._valid(closure)

    def _threshold(self, found: Dict[int, List[Tuple[int, ...]]], floor: Optional[int]) -> Optional[int]:
        if len(found) >= self.keep:
            return sorted(found, reverse=True)[self.keep - 1]
        return floor

    def run(self, k: int, floor: Optional[int] = None) -> Dict[int, List[Tuple[int, ...]]]:
        """Core Wiener value -> chord index tuples, best `keep` values with W >= floor."""
        found: Dict[int, List[Tuple[int, ...]]] = {}
        total = len(self.order)
        cycle = self.size - 1

        def visit(dist: np.ndarray, chosen: List[int], start: int) -> None:
            need = k - len(chosen)
            stop = total - need + 1
            if stop <= start:
                return
            self.nodes += 1
            positions = np.arange(start, stop)
            tails, heads = self.tails[positions], self.heads[positions]
            via = dist[:, tails].T[:, :, None] + 1 + dist[heads, :][:, None, :]
            children = np.minimum(dist[None, :, :], via)
            values = children.sum(axis=(1, 2))
            if need == 1:
                spread = children.max(axis=2)[:, :cycle] + children.max(axis=1)[:, :cycle]
                valid = spread.min(axis=1) <= self.size
            else:
                valid = self._open_children(chosen, positions)
            for idx, pos in enumerate(positions):
                if not valid[idx]:
                    continue
                value = int(values[idx])
                threshold = self._threshold(found, floor)
                if need == 1:
                    if threshold is not None and value < threshold:
                        continue
                    found.setdefault(value, []).append(tuple(chosen + [int(pos)]))
                    if len(found) > self.keep:
                        del found[min(found)]
                else:
                    # Descendants lose at least one more unit of W.
                    if threshold is not None and value <= threshold:
                        continue
                    visit(children[idx], chosen + [int(pos)], int(pos) + 1)

        if k <= total and self._valid(self.suffix[:1])[0]:
            visit(self.base, [], 0)
        return found

    def chords_of(self, positions: Sequence[int]) -> Tuple[Chord, ...]:
        return tuple(sorted((self.order[p] for p in positions), reverse=True))


def _figure_match(r: int, chords: Tuple[Chord, ...]) -> Optional[str]:
    for variant, drawn in KNOWN_CHORD_SETS.get(r, {}).items():
        if sorted(drawn) == sorted(chords):
            return variant
    return None


def chord_augmentation_search(r: int, keep: int = 1) -> List[ChordSearchResult]:
    """Chord sets maximising W(n) at radius r, at the first chord count k whose optimum k+1 does not beat.

    keep > 1 also reports the next best polynomial values at that k, ranked from 1.
    """
    if not MIN_CHORD_RADIUS <= r <= MAX_CHORD_RADIUS:
        raise ParameterDomainError(f"chord search supports {MIN_CHORD_RADIUS} <= r <= {MAX_CHORD_RADIUS}, got r={r}")
    start_time = time.perf_counter()
    search = _CoreSearch(r, keep=keep)
    k = 1
    found: Dict[int, List[Tuple[int, ...]]] = {}
    while k <= len(search.order):
        found = search.run(k)
        if not found:
            logger.debug("r=%d k=%d: no chord set reaches radius r", r, k)
            k += 1
            continue
        best = max(found)
        logger.debug("r=%d k=%d: best core Wiener %d", r, k, best)
        if not search.run(k + 1, floor=best + 1):
            break
        k += 1

    base_arc = (2 * r - 1, r)
    results: List[ChordSearchResult] = []
    for rank, value in enumerate(sorted(found, reverse=True), start=1):
        seen = set()
        for positions in sorted(found[value]):
            chords = search.chords_of(positions)
            certificate = canonical_form(chord_digraph(2 * r + 1, r, chords))
            if certificate in seen:
                continue
            seen.add(certificate)
            polynomial = wiener_polynomial(r, chords)
            results.append(
                ChordSearchResult(
                    r=r,
                    chords=chords,
                    polynomial=polynomial,
                    rank=rank,
                    k=k,
                    contains_base_arc=base_arc in chords,
                    converse=tuple(sorted(converse_chords(r, chords), reverse=True)),
                    matches_figure=_figure_match(r, chords),
                    conjectured=r >= CONJECTURED_FROM_RADIUS,
                )
            )
    results.sort(key=lambda res: (res.rank, [(-a, -b) for a, b in res.chords]))
    logger.info(
        "chord search r=%d: k=%d, %d optimal set(s), %d search nodes, %.2fs",
        r, k, sum(1 for res in results if res.rank == 1), search.nodes, time.perf_counter() - start_time,
    )
    return results


def is_valid_chord_set(r: int, chords: Sequence[Chord]) -> bool:
    """Whether DP(n, 2r) plus the chords has radius exactly r for every n >= 2r + 1."""
    _, _, doubled = digraph_radii(chord_digraph(2 * r + 1, r, chords))
    return doubled == 2 * r


def brute_force_chord_sets(r: int, k: int) -> Dict[int, List[Tuple[Chord, ...]]]:
    """Every valid k-set grouped by core Wiener index; for cross-checking small r."""
    grouped: Dict[int, List[Tuple[Chord, ...]]] = {}
    for chords in combinations(candidate_chords(r), k):
        dist = _distances(_core_rows(r, chords))
        cycle = 2 * r - 1
        spread = dist.max(axis=1)[:cycle] + dist.max(axis=0)[:cycle]
        if int(spread.min()) <= 2 * r:
            grouped.setdefault(int(dist.sum()), []).append(tuple(sorted(chords, reverse=True)))
    return grouped
