"""Exact path counting in the Young-Fibonacci graph.

The graph's vertices are words over {1, 2} graded by digit sum; edges go one
rank up or down.  This package evaluates closed and recursive formulas for
three path-counting problems (descending paths, fixed rank profile, fixed
number of up-steps) in exact arithmetic, and ships an independent
brute-force oracle so every formula can be checked against direct
enumeration.
"""

from .counts import (
    count_down,
    count_down_from_top,
    count_s_paths,
    count_s_paths_from_top,
    count_trajectory,
    odd_double_factorial,
    xi,
    xi_zero,
)
from .functions import (
    InconsistencyError,
    f_base,
    f_explicit,
    f_explicit_terms,
    f_rec,
    g_product,
    g_upper,
    g_values,
    weight,
)
from .trajectories import (
    GoodSequence,
    PseudoTrajectory,
    Trajectory,
    enumerate_good_sequences,
    enumerate_pseudo_trajectories,
    enumerate_trajectories,
    is_good_sequence,
    make_trajectory,
    parse_trajectory,
    reverse,
    trajectory_from_sequence,
    up_values,
)
from .words import (
    EPSILON,
    Word,
    common_suffix_len,
    concat,
    level,
    parse_word,
    predecessors,
    rank,
    start1,
    start2,
    stats,
    successors,
    suffix_sum,
)

__all__ = [
    "EPSILON",
    "GoodSequence",
    "InconsistencyError",
    "PseudoTrajectory",
    "Trajectory",
    "Word",
    "common_suffix_len",
    "concat",
    "count_down",
    "count_down_from_top",
    "count_s_paths",
    "count_s_paths_from_top",
    "count_trajectory",
    "enumerate_good_sequences",
    "enumerate_pseudo_trajectories",
    "enumerate_trajectories",
    "f_base",
    "f_explicit",
    "f_explicit_terms",
    "f_rec",
    "g_product",
    "g_upper",
    "g_values",
    "is_good_sequence",
    "level",
    "make_trajectory",
    "odd_double_factorial",
    "parse_trajectory",
    "parse_word",
    "predecessors",
    "rank",
    "reverse",
    "start1",
    "start2",
    "stats",
    "successors",
    "suffix_sum",
    "trajectory_from_sequence",
    "up_values",
    "weight",
    "xi",
    "xi_zero",
]
