"""Fixed digraphs and graphs drawn as figures, with their parameterised parts."""
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from constructions.base import Chord, require
from constructions.blowup import blow_up_digraph
from constructions.maximum import chord_digraph
from constructions.minimum import G_nrs
from constructions.primitives import bidirected_clique, hypercube
from graph_types import AnyGraph, Digraph, ParameterDomainError

# Radius-3 digraph on five vertices with small Wiener index.
RAD3_CORE_ARCS: List[Tuple[int, int]] = [
    (0, 1), (1, 0), (1, 2), (4, 1), (4, 3), (2, 3), (3, 4), (3, 0), (4, 0),
]
RAD3_CORE_BLOWUP_VERTEX = 1

# Chord sets on DP(n, 2r) drawn for r = 2..7, in 1-based cycle labels.
KNOWN_CHORD_SETS: Dict[int, Dict[str, Tuple[Chord, ...]]] = {
    2: {"a": ((3, 1),)},
    3: {
        "a": ((4, 1), (5, 1)),
        "b": ((4, 2), (5, 1)),
        "c": ((5, 1), (5, 2)),
    },
    4: {"a": ((6, 2), (7, 1))},
    5: {"a": ((6, 4), (8, 2), (9, 1))},
    6: {
        "a": ((9, 3), (10, 1), (11, 1)),
        "b": ((9, 3), (11, 1), (11, 2)),
    },
    7: {
        "a": ((8, 6), (11, 3), (12, 1), (13, 1)),
        "b": ((8, 6), (11, 3), (13, 1), (13, 2)),
    },
}
CONJECTURED_FROM_RADIUS = 5


def out_radius_split(n: int, r: int) -> Tuple[int, int]:
    """n = q*r + k with 2 <= k <= r + 1."""
    require(r >= 1, "out_radius_path", f"r must be >= 1, got r={r}")
    require(n >= r + 2, "out_radius_path", f"n must be >= r + 2, got n={n}, r={r}")
    k = (n - 2) % r + 2
    return (n - k) // r, k


def rad3_core(n: int = 5) -> Digraph:
    require(n == 5, "rad3_core", f"the drawn digraph has 5 vertices, got n={n}")
    return Digraph.from_arcs(5, RAD3_CORE_ARCS)


def rad3_core_blowup(n: int) -> Digraph:
    require(n >= 6, "rad3_core_blowup", f"n must be >= 6, got n={n}")
    return blow_up_digraph(rad3_core(), RAD3_CORE_BLOWUP_VERTEX, bidirected_clique(n - 4))


def out_radius_path(n: int, r: int) -> Digraph:
    """Vertex v = 0 and the path v_1 -> ... -> v_{n-1}; v -> v_{pr+1} for p = 0..q and v_{n-1} -> v."""
    q, _ = out_radius_split(n, r)
    arcs = [(i, i + 1) for i in range(1, n - 1)]
    arcs += [(0, p * r + 1) for p in range(q + 1)]
    arcs.append((n - 1, 0))
    return Digraph.from_arcs(n, arcs)


def outradius1_path(n: int) -> Digraph:
    require(n >= 3, "outradius1_path", f"n must be >= 3, got n={n}")
    return out_radius_path(n, 1)


def outradius1_fan(n: int) -> Digraph:
    """v -> everything, v <-> v_{n-1}, v_1 -> v_3, v_2 -> v_3 and the path v_3 -> ... -> v_{n-1}."""
    require(n >= 4, "outradius1_fan", f"n must be >= 4, got n={n}")
    arcs = [(0, i) for i in range(1, n)]
    arcs += [(n - 1, 0), (1, 3), (2, 3)]
    arcs += [(i, i + 1) for i in range(3, n - 1)]
    return Digraph.from_arcs(n, arcs)


def chord_figure(r: int, variant: str, n: int) -> Digraph:
    sets = KNOWN_CHORD_SETS.get(r)
    if sets is None or variant not in sets:
        raise ParameterDomainError(f"no drawn chord set for r={r}, variant {variant!r}")
    return chord_digraph(n, r, sets[variant])


@dataclass
class FigureEntry:
    name: str
    build: Callable[[int], AnyGraph]
    min_order: int
    fixed_order: Optional[int] = None


def _figure_entries() -> Dict[str, FigureEntry]:
    entries = [
        FigureEntry("rad3_q3", lambda n: hypercube(3), 8, fixed_order=8),
        FigureEntry("rad3_g831", lambda n: G_nrs(8, 3, 1), 8, fixed_order=8),
        FigureEntry("rad3_g832", lambda n: G_nrs(8, 3, 2), 8, fixed_order=8),
        FigureEntry("rad3_core", rad3_core, 5, fixed_order=5),
        FigureEntry("rad3_core_blowup", rad3_core_blowup, 6),
        FigureEntry("outradius1_path", outradius1_path, 3),
        FigureEntry("outradius1_fan", outradius1_fan, 4),
    ]
    for r, sets in KNOWN_CHORD_SETS.items():
        for variant in sets:
            suffix = f"_{variant}" if len(sets) > 1 else ""
            entries.append(
                FigureEntry(
                    f"chord_r{r}{suffix}",
                    lambda n, r=r, variant=variant: chord_figure(r, variant, n),
                    2 * r + 1,
                )
            )
    return {entry.name: entry for entry in entries}


FIGURES = _figure_entries()


def figure_digraph(figure_id: str, n: Optional[int] = None, r: Optional[int] = None) -> AnyGraph:
    """Build a drawn figure; n sizes the blow-up or independent part.

    out_radius_path also needs the out-radius r.
    """
    if figure_id == "out_radius_path":
        if n is None or r is None:
            raise ParameterDomainError("out_radius_path needs both n and r")
        return out_radius_path(n, r)
    entry = FIGURES.get(figure_id)
    if entry is None:
        known = ", ".join(sorted(list(FIGURES) + ["out_radius_path"]))
        raise ParameterDomainError(f"unknown figure {figure_id!r}; known: {known}")
    if n is None:
        n = entry.fixed_order or entry.min_order
    if entry.fixed_order is not None and n != entry.fixed_order:
        raise ParameterDomainError(f"{figure_id} has fixed order {entry.fixed_order}, got n={n}")
    if n < entry.min_order:
        raise ParameterDomainError(f"{figure_id} needs n >= {entry.min_order}, got n={n}")
    return entry.build(n)
