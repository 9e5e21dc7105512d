"""Enumeration of substitution isomers via permutation-group orbits of tabloids."""

from .catalog import (
    GeneticDiagram,
    SkeletonSpec,
    builtin,
    emit_dot,
    genetic_diagram,
    kauffmann_count,
    korner_relations,
)
from .counting import (
    CountReport,
    build_report,
    combinatorially_equivalent,
    complete_homogeneous,
    count_brute,
    count_classes,
    count_ruch,
    count_scalar,
    count_types,
    cycle_index,
    monotonicity_check,
    scalar_product,
)
from .dissections import (
    Dissection,
    all_tabloids,
    is_cover_dissection,
    is_cover_tabloid,
    leq_dissection,
    lift_shape,
    parse_tabloid,
    raise_into,
    raise_set,
    raising_moves,
    standard_tabloid,
    substitution_chain,
)
from .orbits import (
    ChiralReport,
    Orbit,
    OrbitSpace,
    classify_chiral,
    is_character_orbit,
    orbit_adjacent,
    orbit_cover,
    orbit_interval,
    orbit_leq,
    orbit_space,
    reaction_pairs,
    refine,
    stabilizer,
    transporter,
)
from .partitions import (
    Partition,
    all_partitions,
    adjacent_raising_chain,
    centralizer_order,
    covers_above,
    dominance_cmp,
    dominance_leq,
    format_partition,
    is_cover_composition,
    is_cover_partition,
    parse_partition,
    raising_op,
)
from .perms import (
    LinearCharacter,
    PermGroup,
    Permutation,
    elements_of_cycle_type,
    generate,
    linear_characters,
    parse_cycles,
    relative_sign_character,
    sign_product_character,
    young_subgroup,
)

__version__ = "0.1.0"
