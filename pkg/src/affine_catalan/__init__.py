"""Sortable elements of the affine symmetric group and their noncrossing images.

The package follows one combinatorial chain: affine permutations and their
sortability tests, translation-invariant total orders standing in for
biclosed inversion sets, cyclic arc diagrams recording cover reflections, and
noncrossing partitions below a Coxeter element in absolute order, together
with the bijections between these families.
"""

from .core import (
    AffinePermutation,
    CoxeterElement,
    Reflection,
    ShiftedCycle,
    all_coxeter_elements,
    compose,
    cover_reflections,
    coxeter_from_partition,
    cycle_decomposition,
    cycles_as_perm,
    format_cycles,
    format_window,
    identity,
    inversion_set,
    is_coxeter,
    parse_cycles,
    parse_window,
    residue,
    simple_generators,
    simple_reflection,
    weak_order_ball,
)
from .sortable import (
    SortingWord,
    c_sorting_word,
    forbidden_inversion_witness,
    is_c_sortable_def,
    is_c_sortable_pattern,
    reading_nc,
)
from .roots import (
    ParabolicDescriptor,
    Root,
    is_c_aligned,
    omega_A1_pair,
    omega_c,
    omega_matrix,
    omega_reflections,
    omega_shared_index,
    rank2_parabolic,
    reflection_of_root,
    root_of_reflection,
)
from .tito import (
    Block,
    Tito,
    affine_perm_of_tito,
    cover_reflections_tito,
    format_tito,
    inversion_contains,
    is_c_sortable_tito,
    maximal_descending_chains,
    parse_tito,
    shape,
    tito_of_affine_perm,
)
from .arcs import (
    Arc,
    ChainOrLoop,
    CSequence,
    CyclicArcDiagram,
    Numbering,
    a_numbering,
    arcs_cross,
    build_diagram,
    c_sequence,
    chains_and_loops,
    collapse_period,
    covering_arcs,
    enumerate_diagrams,
    hides,
    ncad_c,
    neighbor_arc,
    neighbor_arc_dual,
    select_order,
    tito_c,
)
from .noncrossing import (
    CurvedPolygonModel,
    NoncrossingPartition,
    absolute_length,
    absolute_leq_oracle,
    diagram_of_nc,
    elementary_divisor,
    is_c_noncrossing,
    nc_of_diagram,
    nc_tilde,
    polygons_cross,
)

__version__ = "1.0.0"
