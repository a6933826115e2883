from constructions.base import ConstructionSpec
from constructions.blowup import blow_up, blow_up_digraph, blow_up_many
from constructions.figures import (
    KNOWN_CHORD_SETS,
    FIGURES,
    rad3_core,
    rad3_core_blowup,
    out_radius_path,
    outradius1_path,
    outradius1_fan,
    figure_digraph,
    out_radius_split,
)
from constructions.maximum import DP, chord_digraph, converse, converse_chords, max_rad_construction
from constructions.minimum import (
    D_2r_r_1,
    D_nrs,
    G_nrs,
    min_rad2_digraph,
    min_rad_construction,
    min_rad_core,
    min_rad_three_halves_digraph,
)
from constructions.primitives import (
    bidirected_clique,
    clique,
    cycle,
    directed_cycle,
    directed_path,
    empty,
    empty_digraph,
    hypercube,
    path,
    petersen,
    star,
)

__all__ = [
    "ConstructionSpec",
    "blow_up",
    "blow_up_digraph",
    "blow_up_many",
    "clique",
    "empty",
    "path",
    "cycle",
    "star",
    "hypercube",
    "petersen",
    "bidirected_clique",
    "empty_digraph",
    "directed_cycle",
    "directed_path",
    "G_nrs",
    "D_2r_r_1",
    "D_nrs",
    "min_rad2_digraph",
    "min_rad_three_halves_digraph",
    "min_rad_core",
    "min_rad_construction",
    "DP",
    "chord_digraph",
    "max_rad_construction",
    "converse",
    "converse_chords",
    "KNOWN_CHORD_SETS",
    "FIGURES",
    "rad3_core",
    "rad3_core_blowup",
    "out_radius_path",
    "outradius1_path",
    "outradius1_fan",
    "figure_digraph",
    "out_radius_split",
]
