from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from constructions import (
    D_2r_r_1,
    D_nrs,
    DP,
    ConstructionSpec,
    G_nrs,
    bidirected_clique,
    chord_digraph,
    clique,
    cycle,
    directed_cycle,
    directed_path,
    empty,
    figure_digraph,
    hypercube,
    max_rad_construction,
    min_rad2_digraph,
    min_rad_construction,
    min_rad_three_halves_digraph,
    path,
    petersen,
    star,
)
from graph_types import AnyGraph, ParameterDomainError


@dataclass
class ConstructionEntry:
    name: str
    builder: Callable[[ConstructionSpec], AnyGraph]
    required: Tuple[str, ...]
    directed: bool
    description: str


def get_construction_entries() -> List[ConstructionEntry]:
    entries: List[ConstructionEntry] = [
        ConstructionEntry("clique", lambda s: clique(s.n), ("n",), False, "complete graph K_n"),
        ConstructionEntry("empty", lambda s: empty(s.n), ("n",), False, "edgeless graph on n vertices"),
        ConstructionEntry("path", lambda s: path(s.n), ("n",), False, "path P_n"),
        ConstructionEntry("cycle", lambda s: cycle(s.n), ("n",), False, "cycle C_n"),
        ConstructionEntry("star", lambda s: star(s.n - 1), ("n",), False, "star K_{1,n-1}"),
        ConstructionEntry("hypercube", lambda s: hypercube(s.d or 3), (), False, "hypercube Q_d (default Q_3)"),
        ConstructionEntry("petersen", lambda s: petersen(), (), False, "Petersen graph"),
        ConstructionEntry("bidirected_clique", lambda s: bidirected_clique(s.n), ("n",), True, "bidirected K_n"),
        ConstructionEntry("directed_cycle", lambda s: directed_cycle(s.n), ("n",), True, "directed cycle C_n"),
        ConstructionEntry("directed_path", lambda s: directed_path(s.n), ("n",), True, "directed path on n vertices"),
    ]

    # Minimum Wiener index families
    entries += [
        ConstructionEntry("G_nrs", lambda s: G_nrs(s.n, s.r, s.s), ("n", "r", "s"), False,
                          "C_2r with two consecutive vertices blown up by K_s and K_{n-2r+2-s}"),
        ConstructionEntry("D_2r_r_1", lambda s: D_2r_r_1(s.r), ("r",), True, "core digraph of out-radius r"),
        ConstructionEntry("D_nrs", lambda s: D_nrs(s.n, s.r, s.s), ("n", "r", "s"), True,
                          "D_2r_r_1 with v_1, w_1 blown up by bidirected cliques"),
        ConstructionEntry("min_rad", lambda s: min_rad_construction(s.n, s.doubled_r), ("n", "doubled_r"), True,
                          "small Wiener index digraph of radius doubled_r/2"),
        ConstructionEntry("min_rad2", lambda s: min_rad2_digraph(s.n, s.cycle_lengths or (s.n,)), ("n",), True,
                          "bidirected K_n minus spanning disjoint directed cycles (radius 2)"),
        ConstructionEntry("min_rad_three_halves", lambda s: min_rad_three_halves_digraph(s.n), ("n",), True,
                          "bidirected K_n minus ceil(n/2) spanning arcs (radius 3/2)"),
    ]

    # Maximum Wiener index families
    entries += [
        ConstructionEntry("DP", lambda s: DP(s.n, s.d), ("n", "d"), True,
                          "directed C_d with one vertex blown up by n-d+1 independent vertices"),
        ConstructionEntry("max_rad", lambda s: max_rad_construction(s.n, s.r), ("n", "r"), True,
                          "DP(n,2r) plus u_r->u_1 and u_{2r-1}->u_r"),
        ConstructionEntry("chord", lambda s: chord_digraph(s.n, s.r, s.chords), ("n", "r"), True,
                          "DP(n,2r) plus backward chords"),
        ConstructionEntry("figure", lambda s: figure_digraph(s.figure, s.n, s.r), ("figure",), True,
                          "a drawn figure (rad3_q3, rad3_g831, rad3_g832, chord_r*, rad3_core, rad3_core_blowup, "
                          "out_radius_path, outradius1_path, outradius1_fan)"),
    ]
    return entries


def _entries_by_name() -> Dict[str, ConstructionEntry]:
    return {entry.name: entry for entry in get_construction_entries()}


def family_names() -> List[str]:
    return [entry.name for entry in get_construction_entries()]


def build(spec: ConstructionSpec) -> AnyGraph:
    entry = _entries_by_name().get(spec.family)
    if entry is None:
        raise ParameterDomainError(f"unknown family {spec.family!r}; known: {', '.join(family_names())}")
    missing = [name for name in entry.required if getattr(spec, name) is None]
    if missing:
        raise ParameterDomainError(f"{spec.family} needs parameter(s): {', '.join(missing)}")
    return entry.builder(spec)
