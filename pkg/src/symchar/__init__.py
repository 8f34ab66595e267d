"""Exact character tables of symmetric groups.

The production path is a class-ordered recursion building each table from
the one below it in exact big-integer arithmetic.  Independent oracles
(tabloid counting, a determinantal construction on formal sums, and
border-strip expansion) plus orthogonality and reciprocity checks guard
every piece.
"""

from .formal import (
    FormalSum,
    determinant_op,
    determinantal_character,
    formal_sum,
    lowering_op,
    pairing,
    raising_op,
    signed_permutations,
    straighten,
)
from .checks import (
    CHECK_NAMES,
    CheckReport,
    check_adjoint,
    check_against_mn,
    check_chi_equals_zeta,
    check_commute,
    check_irr_reciprocity,
    check_ncycle,
    check_orthogonality,
    check_perm_reciprocity,
    standard_suite,
)
from .murnaghan import RimHookRemoval, mn_character_value, mn_table, rim_hooks
from .partitions import (
    ClassInfo,
    IntSeq,
    Partition,
    canon,
    canonical_permutation,
    class_info,
    decrement_at,
    descents,
    increment_at,
    is_partition,
    multiplicity_vector,
    parse_partition_text,
    partition_text,
    partitions_of,
    revlex_cmp,
    weight,
)
from .tables import (
    BuildCounters,
    CharTable,
    TableStack,
    branching_value,
    build_table,
    character_table,
    character_value,
    fixed_point_free_value,
    iter_tables,
    unified_value,
)
from .tabloids import count_fixed_tabloids, permutation_character

__version__ = "0.1.0"

__all__ = [
    "BuildCounters",
    "CHECK_NAMES",
    "CharTable",
    "CheckReport",
    "ClassInfo",
    "FormalSum",
    "IntSeq",
    "Partition",
    "RimHookRemoval",
    "TableStack",
    "branching_value",
    "build_table",
    "canon",
    "canonical_permutation",
    "character_table",
    "character_value",
    "check_adjoint",
    "check_against_mn",
    "check_chi_equals_zeta",
    "check_commute",
    "check_irr_reciprocity",
    "check_ncycle",
    "check_orthogonality",
    "check_perm_reciprocity",
    "class_info",
    "count_fixed_tabloids",
    "decrement_at",
    "descents",
    "determinant_op",
    "determinantal_character",
    "fixed_point_free_value",
    "formal_sum",
    "increment_at",
    "is_partition",
    "iter_tables",
    "lowering_op",
    "mn_character_value",
    "mn_table",
    "multiplicity_vector",
    "pairing",
    "parse_partition_text",
    "partition_text",
    "partitions_of",
    "permutation_character",
    "raising_op",
    "revlex_cmp",
    "rim_hooks",
    "signed_permutations",
    "standard_suite",
    "straighten",
    "unified_value",
    "weight",
]
