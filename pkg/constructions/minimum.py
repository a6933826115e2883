"""Families attaining the minimum Wiener index for a given order and radius."""
from typing import Sequence

from constructions.base import require, split_bounds
from constructions.blowup import blow_up_digraph, blow_up_many
from constructions.primitives import bidirected_clique, clique, cycle, directed_cycle
from graph_types import Digraph, Graph


def G_nrs(n: int, r: int, s: int) -> Graph:
    """C_{2r} with two consecutive vertices blown up by K_s and K_{n-2r+2-s}."""
    require(r >= 2, "G_nrs", f"r must be >= 2, got r={r}")
    require(n >= 2 * r, "G_nrs", f"n must be >= 2r, got n={n}, r={r}")
    low, high = split_bounds(n, r)
    require(low <= s <= high, "G_nrs", f"s must lie in [{low}, {high}] for n={n}, r={r}, got s={s}")
    return blow_up_many(cycle(2 * r), {0: clique(s), 1: clique(n - 2 * r + 2 - s)})


def D_2r_r_1(r: int) -> Digraph:
    """Core digraph on v_1..v_r (0..r-1) and w_1..w_r (r..2r-1).

    v_i -> v_j and w_i -> w_j whenever j <= i + 1, plus v_i -> w_1 and w_i -> v_1.
    """
    require(r >= 3, "D_2r_r_1", f"r must be >= 3, got r={r}")
    arcs = []
    for offset in (0, r):
        for i in range(r):
            for j in range(min(i + 2, r)):
                if i != j:
                    arcs.append((offset + i, offset + j))
    for i in range(r):
        arcs.append((i, r))
        arcs.append((r + i, 0))
    return Digraph.from_arcs(2 * r, set(arcs))


def D_nrs(n: int, r: int, s: int) -> Digraph:
    require(r >= 3, "D_nrs", f"r must be >= 3, got r={r}")
    require(n >= 2 * r, "D_nrs", f"n must be >= 2r, got n={n}, r={r}")
    low, high = split_bounds(n, r)
    require(low <= s <= high, "D_nrs", f"s must lie in [{low}, {high}] for n={n}, r={r}, got s={s}")
    core = D_2r_r_1(r)
    return blow_up_many(core, {0: bidirected_clique(s), r: bidirected_clique(n - 2 * r + 2 - s)})


def min_rad2_digraph(n: int, cycle_lengths: Sequence[int]) -> Digraph:
    """Bidirected K_n minus vertex-disjoint directed cycles covering every vertex (radius 2)."""
    require(n >= 3, "min_rad2_digraph", f"n must be >= 3, got n={n}")
    require(all(length >= 2 for length in cycle_lengths), "min_rad2_digraph", "every cycle needs length >= 2")
    require(sum(cycle_lengths) == n, "min_rad2_digraph", f"cycle lengths {list(cycle_lengths)} do not partition n={n}")
    removed = set()
    start = 0
    for length in cycle_lengths:
        for i in range(length):
            removed.add((start + i, start + (i + 1) % length))
        start += length
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and (u, v) not in removed]
    return Digraph.from_arcs(n, arcs)


def min_rad_three_halves_digraph(n: int) -> Digraph:
    """Bidirected K_n minus ceil(n/2) arcs whose endpoints cover every vertex (radius 3/2)."""
    require(n >= 3, "min_rad_three_halves_digraph", f"n must be >= 3, got n={n}")
    removed = {(i, i + 1) for i in range(0, n - 1, 2)}
    if n % 2:
        removed.add((n - 1, 0))
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and (u, v) not in removed]
    return Digraph.from_arcs(n, arcs)


def min_rad_core(doubled_r: int) -> Digraph:
    """Directed cycle carrying the blow-up vertex at index 1.

    Integer r: C_{r+1}. Half-integer r = k + 1/2: C_{k+2} plus the reverse arc 1 -> 0.
    """
    if doubled_r % 2 == 0:
        return directed_cycle(doubled_r // 2 + 1)
    length = (doubled_r - 1) // 2 + 2
    base = directed_cycle(length)
    return Digraph.from_arcs(length, base.arcs() + [(1, 0)])


def min_rad_construction(n: int, doubled_r: int) -> Digraph:
    """Small-Wiener digraph of radius doubled_r / 2.

    For r >= 5/2 a cycle core whose vertex 1 is blown up by a bidirected clique;
    for the half-integer case vertex 1 is the tail of the reverse arc.
    r in {1, 3/2, 2} falls back to the exact minimisers.
    """
    require(doubled_r >= 2, "min_rad_construction", f"doubled_r must be >= 2, got {doubled_r}")
    if doubled_r == 2:
        require(n >= 2, "min_rad_construction", f"n must be >= 2, got n={n}")
        return bidirected_clique(n)
    if doubled_r == 3:
        return min_rad_three_halves_digraph(n)
    if doubled_r == 4:
        require(n >= 3, "min_rad_construction", f"n must be >= 3, got n={n}")
        return min_rad2_digraph(n, [n])
    # n > r + 2, written without halves.
    require(2 * n > doubled_r + 4, "min_rad_construction", f"n must exceed r + 2, got n={n}, 2r={doubled_r}")
    core = min_rad_core(doubled_r)
    return blow_up_digraph(core, 1, bidirected_clique(n - core.order + 1))
