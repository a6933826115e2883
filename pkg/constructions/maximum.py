"""Families attaining large Wiener index for a given order and (out-)radius.

Cycle vertices of DP(n, d) are u_1 .. u_{d-1} at indices 0 .. d-2; the
independent blow-up copies follow at d-1 .. n-1.
"""
from typing import Iterable, List, Tuple

from constructions.base import Chord, require
from constructions.blowup import blow_up_digraph
from constructions.primitives import directed_cycle, empty_digraph
from graph_types import Digraph


def DP(n: int, d: int) -> Digraph:
    require(d >= 2, "DP", f"d must be >= 2, got d={d}")
    require(n >= d, "DP", f"n must be >= d, got n={n}, d={d}")
    return blow_up_digraph(directed_cycle(d), 0, empty_digraph(n - d + 1))


def u_index(i: int) -> int:
    return i - 1


def with_arcs(d: Digraph, arcs: Iterable[Tuple[int, int]]) -> Digraph:
    return Digraph.from_arcs(d.order, d.arcs() + [a for a in arcs if a[0] != a[1]])


def chord_digraph(n: int, r: int, chords: Iterable[Chord]) -> Digraph:
    """DP(n, 2r) plus backward chords u_i -> u_j, i > j, in 1-based cycle labels."""
    chords = list(chords)
    require(r >= 1, "chord_digraph", f"r must be >= 1, got r={r}")
    require(n >= 2 * r + 1, "chord_digraph", f"n must be >= 2r + 1, got n={n}, r={r}")
    for i, j in chords:
        require(
            1 <= j < i <= 2 * r - 1,
            "chord_digraph",
            f"chord u_{i} -> u_{j} is not a backward chord among u_1..u_{2 * r - 1}",
        )
    return with_arcs(DP(n, 2 * r), ((u_index(i), u_index(j)) for i, j in chords))


def max_rad_construction(n: int, r: int) -> Digraph:
    """DP(n, 2r) plus u_r -> u_1 and u_{2r-1} -> u_r; both arcs are loops at r = 1 and are dropped."""
    require(r >= 1, "max_rad_construction", f"r must be >= 1, got r={r}")
    require(n >= 2 * r + 1, "max_rad_construction", f"n must be >= 2r + 1, got n={n}, r={r}")
    extra = [(u_index(r), u_index(1)), (u_index(2 * r - 1), u_index(r))]
    return with_arcs(DP(n, 2 * r), extra)


def converse_chords(r: int, chords: Iterable[Chord]) -> List[Chord]:
    """Image of a chord set under u_i -> u_j  =>  u_{2r-j} -> u_{2r-i}."""
    return sorted((2 * r - j, 2 * r - i) for i, j in chords)


def converse(d: Digraph) -> Digraph:
    return d.reverse()
