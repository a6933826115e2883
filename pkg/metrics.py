import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

import numpy as np

from graph_types import (
    INFINITE,
    UNREACHABLE,
    AnyGraph,
    Digraph,
    DistanceMatrix,
    Extended,
    Graph,
    GraphError,
    Infinity,
    MetricSummary,
    OrderTooLargeError,
    extended_max,
    extended_min,
    iter_bits,
    popcount,
)

logger = logging.getLogger(__name__)

CLIQUE_ORDER_LIMIT = 64


def bfs_levels(rows: Sequence[int], source: int) -> List[int]:
    # Level-synchronous BFS over bit-rows: one OR per frontier vertex.
    dist = [UNREACHABLE] * len(rows)
    dist[source] = 0
    visited = 1 << source
    frontier = visited
    level = 0
    while frontier:
        level += 1
        reach = 0
        for v in iter_bits(frontier):
            reach |= rows[v]
        frontier = reach & ~visited
        visited |= frontier
        for v in iter_bits(frontier):
            dist[v] = level
    return dist


def _profile(rows: Sequence[int]) -> Tuple[List[Extended], List[Extended]]:
    """Eccentricity and distance sum of every vertex, without building a matrix."""
    eccs: List[Extended] = []
    sums: List[Extended] = []
    for v in range(len(rows)):
        levels = bfs_levels(rows, v)
        if UNREACHABLE in levels:
            eccs.append(INFINITE)
            sums.append(INFINITE)
        else:
            eccs.append(max(levels))
            sums.append(sum(levels))
    return eccs, sums


def _add(a: Extended, b: Extended) -> Extended:
    if a is INFINITE or b is INFINITE:
        return INFINITE
    return a + b


def bfs_distances(g: AnyGraph, source: int) -> List[int]:
    """Distances from source as plain ints; UNREACHABLE where no path exists."""
    g.check_vertex(source)
    return bfs_levels(g.rows, source)


def all_pairs(g: AnyGraph, threads: int = 1) -> DistanceMatrix:
    sources = range(g.order)
    if threads > 1 and g.order > 1:
        logger.debug("all_pairs order=%d on %d threads", g.order, threads)
        # map() keeps source order, so assembly is deterministic.
        with ThreadPoolExecutor(max_workers=threads) as pool:
            levels = list(pool.map(lambda s: bfs_levels(g.rows, s), sources))
    else:
        levels = [bfs_levels(g.rows, s) for s in sources]
    dist = np.array(levels, dtype=np.uint32).reshape(g.order, g.order)
    return DistanceMatrix(order=g.order, dist=dist, directed=g.directed)


def wiener(g: Graph) -> Extended:
    if g.directed:
        raise GraphError("wiener() takes an undirected graph; use wiener_digraph()")
    _, sums = _profile(g.rows)
    total = 0
    for s in sums:
        if s is INFINITE:
            return INFINITE
        total += s
    return total // 2


def wiener_digraph(d: Digraph) -> Extended:
    _, sums = _profile(d.rows)
    total = 0
    for s in sums:
        if s is INFINITE:
            return INFINITE
        total += s
    return total


def eccentricities(g: AnyGraph) -> Union[List[Extended], Tuple[List[Extended], List[Extended]]]:
    """ecc per vertex for graphs; (ecc+, ecc-) per vertex for digraphs."""
    out_ecc, _ = _profile(g.rows)
    if not g.directed:
        return out_ecc
    in_ecc, _ = _profile(g.in_rows)
    return out_ecc, in_ecc


def radius_diameter(g: Graph) -> Tuple[Extended, Extended]:
    eccs = eccentricities(g)
    return extended_min(eccs), extended_max(eccs)


def radius_and_wiener(g: Graph) -> Tuple[Extended, Extended]:
    """Radius and Wiener index from a single BFS sweep."""
    eccs, sums = _profile(g.rows)
    if INFINITE in eccs:
        return INFINITE, INFINITE
    return min(eccs), sum(sums) // 2


def digraph_radii(d: Digraph) -> Tuple[Extended, Extended, Extended]:
    out_ecc, in_ecc = eccentricities(d)
    doubled = extended_min([_add(a, b) for a, b in zip(out_ecc, in_ecc)])
    return extended_min(out_ecc), extended_min(in_ecc), doubled


def vertex_distance_sums(g: AnyGraph) -> Union[List[Extended], Tuple[List[Extended], List[Extended]]]:
    """d(x, V) per vertex; for digraphs the pair (d(x, V), d(V, x))."""
    _, out_sums = _profile(g.rows)
    if not g.directed:
        return out_sums
    _, in_sums = _profile(g.in_rows)
    return out_sums, in_sums


def is_connected(g: AnyGraph) -> bool:
    if g.directed:
        return is_strongly_connected(g)
    return UNREACHABLE not in bfs_levels(g.rows, 0)


def is_strongly_connected(d: Digraph) -> bool:
    # Strong iff vertex 0 reaches everything forwards and backwards.
    return UNREACHABLE not in bfs_levels(d.rows, 0) and UNREACHABLE not in bfs_levels(d.in_rows, 0)


def is_tree(g: Graph) -> bool:
    return g.edge_count() == g.order - 1 and is_connected(g)


def pair_count(order: int, directed: bool) -> int:
    return order * (order - 1) if directed else order * (order - 1) // 2


def average_distance(g: AnyGraph) -> Union[Fraction, Infinity]:
    total = wiener_digraph(g) if g.directed else wiener(g)
    if total is INFINITE:
        return INFINITE
    pairs = pair_count(g.order, g.directed)
    return Fraction(total, pairs) if pairs else Fraction(0)


def _color_bound(candidates: int, rows: Sequence[int]) -> int:
    # Greedy colouring of the candidate set; no clique uses two vertices of one colour.
    colors = 0
    uncolored = candidates
    while uncolored:
        colors += 1
        available = uncolored
        while available:
            v = (available & -available).bit_length() - 1
            uncolored &= ~(1 << v)
            available &= ~rows[v] & ~(1 << v)
    return colors


def clique_number(g: Graph) -> int:
    if g.order > CLIQUE_ORDER_LIMIT:
        raise OrderTooLargeError(f"clique_number supports order <= {CLIQUE_ORDER_LIMIT}, got {g.order}")
    rows = g.rows
    best = 1

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        if size + _color_bound(candidates, rows) <= best:
            return
        while candidates:
            if size + popcount(candidates) <= best:
                return
            v = candidates.bit_length() - 1
            candidates &= ~(1 << v)
            expand(size + 1, candidates & rows[v])

    expand(0, (1 << g.order) - 1)
    return best


def greedy_degree_clique(g: Graph, min_degree: int) -> List[int]:
    """Clique inside S = {v : deg(v) >= min_degree}.

    Start with T empty and U = S; while U is nonempty take the lowest v in U,
    add it to T and shrink U to U ∩ N(v). Each step removes at most
    n - min_degree vertices from U, so |T| >= ceil(|S| / (n - min_degree)).
    """
    clique: List[int] = []
    remaining = 0
    for v in range(g.order):
        if g.degree(v) >= min_degree:
            remaining |= 1 << v
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        clique.append(v)
        remaining &= g.rows[v]
    return clique


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def complement_digraph(d: Digraph) -> Digraph:
    full = (1 << d.order) - 1
    return Digraph(d.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(d.rows)))


def degrees(g: AnyGraph) -> Union[List[int], List[Tuple[int, int, int]]]:
    if not g.directed:
        return [g.degree(v) for v in range(g.order)]
    result = []
    for v in range(g.order):
        out_deg, in_deg = g.out_degree(v), g.in_degree(v)
        result.append((out_deg, in_deg, out_deg + in_deg))
    return result


def relabel(g: AnyGraph, perm: Sequence[int]) -> AnyGraph:
    """Vertex v of g becomes vertex perm[v]."""
    if sorted(perm) != list(range(g.order)):
        raise GraphError("relabel needs a permutation of 0..n-1")
    rows = [0] * g.order
    for u, row in enumerate(g.rows):
        for v in iter_bits(row):
            rows[perm[u]] |= 1 << perm[v]
    return type(g)(g.order, tuple(rows))


def bfs_spanning_tree(g: Graph, center: int) -> Graph:
    """BFS tree rooted at center; each vertex hangs from its lowest-index parent."""
    levels = bfs_levels(g.rows, center)
    if UNREACHABLE in levels:
        raise GraphError("bfs_spanning_tree needs a connected graph")
    edges = []
    for v in range(g.order):
        if v == center:
            continue
        parent = next(u for u in iter_bits(g.rows[v]) if levels[u] == levels[v] - 1)
        edges.append((parent, v))
    return Graph.from_edges(g.order, edges)


def summarize(g: AnyGraph) -> MetricSummary:
    if g.directed:
        out_ecc, in_ecc = eccentricities(g)
        out_rad, in_rad, doubled = digraph_radii(g)
        return MetricSummary(
            order=g.order,
            directed=True,
            wiener=wiener_digraph(g),
            size=g.arc_count(),
            out_radius=out_rad,
            in_radius=in_rad,
            doubled_radius=doubled,
            out_eccentricities=out_ecc,
            in_eccentricities=in_ecc,
        )
    eccs = eccentricities(g)
    return MetricSummary(
        order=g.order,
        directed=False,
        wiener=wiener(g),
        size=g.edge_count(),
        radius=extended_min(eccs),
        diameter=extended_max(eccs),
        eccentricities=eccs,
    )
