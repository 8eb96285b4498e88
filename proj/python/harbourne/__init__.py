"""Exact linear Harbourne constants of line arrangements."""

from ._core import (
    Profile,
    ProfileError,
    best_known_upper,
    check,
    combinatorial_quotient,
    compute_H,
    conjectured_h,
    construct,
    emit_lp,
    exclude,
    few_points,
    full_plane,
    greedy_common_line_points,
    harbourne_of_multiset,
    is_prime_power,
    line_types,
    lower_bound_equality,
    lower_bound_holds,
    naive_upper_bound,
    q_of,
    r_of,
    solve,
    two_pencil,
)

__all__ = [
    "Profile",
    "ProfileError",
    "best_known_upper",
    "check",
    "combinatorial_quotient",
    "compute_H",
    "conjectured_h",
    "construct",
    "emit_lp",
    "exclude",
    "few_points",
    "full_plane",
    "greedy_common_line_points",
    "harbourne_of_multiset",
    "is_prime_power",
    "line_types",
    "lower_bound_equality",
    "lower_bound_holds",
    "naive_upper_bound",
    "q_of",
    "r_of",
    "solve",
    "two_pencil",
]
