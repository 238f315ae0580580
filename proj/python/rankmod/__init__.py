"""Constrained rank-modulation permutation codes.

Thin re-export of the compiled core. Permutations cross the boundary as
plain lists of 1-based values; exact counts come back as Python ints and
exact bounds as fractions.Fraction.
"""

from ._core import (
    BudgetExceeded,
    ball_size_inversion,
    capacity_ratio,
    capacity_single_asym,
    capacity_single_sym,
    capacity_two_asym,
    capacity_two_sym,
    casym_lower_bound,
    casym_members,
    check_sandwich,
    compose_blocks,
    constrained_permutations,
    count_constrained,
    count_constrained_parallel,
    cr_members,
    csym_cardinality,
    csym_members,
    decompose_blocks,
    greedy_code,
    gv_lower_bound,
    gv_manhattan_lower_bound,
    inverse,
    inversion_distance,
    kendall_tau,
    mahonian_row,
    manhattan,
    max_code_size,
    psi,
    satisfies,
    sphere_packing_bound,
    stirling2,
    upper_bound_A_log,
    valleys,
)

__all__ = [
    "BudgetExceeded",
    "ball_size_inversion",
    "capacity_ratio",
    "capacity_single_asym",
    "capacity_single_sym",
    "capacity_two_asym",
    "capacity_two_sym",
    "casym_lower_bound",
    "casym_members",
    "check_sandwich",
    "compose_blocks",
    "constrained_permutations",
    "count_constrained",
    "count_constrained_parallel",
    "cr_members",
    "csym_cardinality",
    "csym_members",
    "decompose_blocks",
    "greedy_code",
    "gv_lower_bound",
    "gv_manhattan_lower_bound",
    "inverse",
    "inversion_distance",
    "kendall_tau",
    "mahonian_row",
    "manhattan",
    "max_code_size",
    "psi",
    "satisfies",
    "sphere_packing_bound",
    "stirling2",
    "upper_bound_A_log",
    "valleys",
]
