"""Isomorph-free generation of graphs by canonical vertex augmentation.

A child is its parent plus one vertex joined to a neighbourhood subset; the
subsets are taken one per orbit of Aut(parent). A child is kept only when the
added vertex lies in the Aut(child)-orbit of the canonical deletion vertex:
the vertex with the largest (degree, sorted neighbour degrees), ties broken by
the highest canonical label. Every class is then produced exactly once.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from canonical import CanonicalResult, canonical_form, canonical_labeling
from graph_types import Graph, ParameterDomainError, iter_bits, popcount
from metrics import is_connected

logger = logging.getLogger(__name__)

MAX_ENUMERATION_ORDER = 10
DEFAULT_SHARD_DEPTH = 5

Predicate = Callable[[Graph], bool]


@dataclass(frozen=True)
class ShardSpec:
    """Shard `index` of `count` takes every count-th class of order `depth`, starting at index."""

    index: int = 0
    count: int = 1
    depth: int = DEFAULT_SHARD_DEPTH

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ParameterDomainError(f"shard count must be >= 1, got {self.count}")
        if self.index < 0:
            raise ParameterDomainError(f"shard index must be >= 0, got {self.index}")
        if self.index >= self.count:
            raise ParameterDomainError(f"shard index must be below the count {self.count}, got {self.index}")
        if self.depth < 1:
            raise ParameterDomainError(f"shard depth must be >= 1, got {self.depth}")


def _apply(gen: Sequence[int], mask: int) -> int:
    image = 0
    for v in iter_bits(mask):
        image |= 1 << gen[v]
    return image


def subset_orbit_representatives(order: int, generators: Sequence[Sequence[int]]) -> List[int]:
    """Smallest mask of every orbit of the group on subsets of 0..order-1."""
    if not generators:
        return list(range(1 << order))
    seen = bytearray(1 << order)
    reps: List[int] = []
    for mask in range(1 << order):
        if seen[mask]:
            continue
        reps.append(mask)
        seen[mask] = 1
        stack = [mask]
        while stack:
            current = stack.pop()
            for gen in generators:
                image = _apply(gen, current)
                if not seen[image]:
                    seen[image] = 1
                    stack.append(image)
    return reps


def _extend(parent: Graph, mask: int) -> Graph:
    new = parent.order
    rows = list(parent.rows)
    for v in iter_bits(mask):
        rows[v] |= 1 << new
    rows.append(mask)
    return Graph(new + 1, tuple(rows))


def _invariants(rows: Sequence[int]) -> List[Tuple[int, Tuple[int, ...]]]:
    degs = [popcount(r) for r in rows]
    return [(degs[v], tuple(sorted(degs[w] for w in iter_bits(rows[v])))) for v in range(len(rows))]


def _invariant_colors(invariants: Sequence[Tuple[int, Tuple[int, ...]]]) -> List[int]:
    ranks = {key: i for i, key in enumerate(sorted(set(invariants)))}
    return [ranks[key] for key in invariants]


def is_canonical_extension(child: Graph) -> Tuple[bool, Optional[CanonicalResult]]:
    """Whether the last vertex of child is a canonical deletion vertex."""
    new = child.order - 1
    invariants = _invariants(child.rows)
    top = max(invariants)
    if invariants[new] != top:
        return False, None
    top_vertices = [v for v in range(child.order) if invariants[v] == top]
    if len(top_vertices) == 1:
        return True, None
    result = canonical_labeling(child, colors=_invariant_colors(invariants))
    chosen = max(top_vertices, key=lambda v: result.labeling[v])
    return result.orbits[chosen] == result.orbits[new], result


def _automorphisms(g: Graph, known: Optional[CanonicalResult]) -> List[List[int]]:
    if known is None:
        known = canonical_labeling(g, colors=_invariant_colors(_invariants(g.rows)))
    return known.generators


def _grow(g: Graph, target: int, known: Optional[CanonicalResult] = None) -> Iterator[Graph]:
    if g.order == target:
        yield g
        return
    generators = _automorphisms(g, known)
    for mask in subset_orbit_representatives(g.order, generators):
        child = _extend(g, mask)
        accepted, result = is_canonical_extension(child)
        if accepted:
            yield from _grow(child, target, result)


def _single_vertex() -> Graph:
    return Graph(1, (0,))


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ParameterDomainError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got n={n}")


def shard_roots(n: int, shard: ShardSpec) -> List[Graph]:
    depth = min(shard.depth, n)
    roots = list(_grow(_single_vertex(), depth))
    return roots[shard.index::shard.count]


def shard_enumeration(
    n: int,
    predicate: Optional[Predicate] = None,
    shard: Optional[ShardSpec] = None,
    connected_only: bool = False,
    progress: bool = False,
) -> Iterator[Graph]:
    """Classes of order n below this shard's roots that pass the filters."""
    _check_order(n)
    shard = shard or ShardSpec()
    roots = shard_roots(n, shard)
    logger.debug("shard %d/%d at depth %d: %d roots", shard.index, shard.count, shard.depth, len(roots))
    for root in tqdm(roots, desc=f"n={n} shard {shard.index}", disable=not progress, leave=False):
        for g in _grow(root, n):
            if connected_only and not is_connected(g):
                continue
            if predicate is None or predicate(g):
                yield g


def enumerate_graphs(
    n: int,
    predicate: Optional[Predicate] = None,
    connected_only: bool = False,
    progress: bool = False,
) -> Iterator[Graph]:
    """One representative per isomorphism class of order n passing the filters."""
    return shard_enumeration(n, predicate, ShardSpec(), connected_only, progress)


def collect_parallel(
    n: int,
    visit: Callable[[Iterator[Graph]], object],
    threads: int = 1,
    shards: Optional[int] = None,
    depth: int = DEFAULT_SHARD_DEPTH,
    connected_only: bool = False,
    progress: bool = False,
) -> List[object]:
    """Run visit() over every shard's stream; results come back in shard order."""
    _check_order(n)
    count = shards or max(threads, 1)
    specs = [ShardSpec(i, count, depth) for i in range(count)]
    start = time.perf_counter()

    def run(spec: ShardSpec) -> object:
        return visit(shard_enumeration(n, None, spec, connected_only, progress))

    if threads > 1 and count > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, specs))
    else:
        results = [run(spec) for spec in specs]
    logger.info("enumerated n=%d over %d shard(s) in %.2fs", n, count, time.perf_counter() - start)
    return results


def count_classes(n: int, connected_only: bool = False) -> int:
    return sum(1 for _ in enumerate_graphs(n, connected_only=connected_only))


def certificates(graphs: Iterator[Graph]) -> List[bytes]:
    return sorted(canonical_form(g).data for g in graphs)
