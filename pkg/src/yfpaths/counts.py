"""Exact path counts in the Young-Fibonacci graph.

Three counting problems, each solved by a polynomial-size formula instead of
walking the (exponentially many) paths:

* ``count_down(x, y)`` -- descending paths from y to x;
* ``count_trajectory(x, y, t)`` -- paths whose rank profile is a given
  trajectory;
* ``count_s_paths(x, y, S)`` -- paths with exactly S up-steps.

The trajectory dependence enters only through alternating sums over
up-values, which collapse to the closed-form ``xi`` values built from
binomials and odd double factorials.  Every result is checked to be a
nonnegative integer before it is returned.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .functions import InconsistencyError, g_values, weight
from .trajectories import Trajectory
from .words import Word

__all__ = [
    "count_down",
    "count_down_from_top",
    "count_trajectory",
    "count_s_paths",
    "count_s_paths_from_top",
    "xi",
    "xi_zero",
    "odd_double_factorial",
]


def _as_count(total: Fraction, what: str) -> int:
    if total.denominator != 1:
        raise InconsistencyError(f"{what} evaluated to non-integer {total}")
    value = total.numerator
    if value < 0:
        raise InconsistencyError(f"{what} evaluated to negative {value}")
    return value


def count_down(x: Word, y: Word) -> int:
    """Number of rank-decreasing paths from y down to x."""
    if y.rank < x.rank:
        raise ValueError(f"count_down needs rank({y}) >= rank({x})")
    total = sum((weight(x, y, i) for i in range(x.rank + 1)), Fraction(0))
    return _as_count(total, f"count_down({x}, {y})")


def count_down_from_top(x: Word) -> int:
    """Number of descending paths from x to the empty word: prod_j g(x, j)."""
    out = 1
    for g in g_values(x):
        out *= g
    return out


def count_trajectory(x: Word, y: Word, t: Trajectory) -> int:
    """Number of paths from y to x whose rank profile equals ``t``."""
    if y.rank < x.rank:
        raise ValueError(f"count_trajectory needs rank({y}) >= rank({x})")
    if t.start != y.rank or t.end != x.rank:
        raise ValueError(
            f"trajectory endpoints ({t.start}, {t.end}) do not match "
            f"ranks ({y.rank}, {x.rank})"
        )
    ups = t.up_values
    total = Fraction(0)
    for i in range(x.rank + 1):
        factor = 1
        for e in ups:
            factor *= e - i
        total += weight(x, y, i) * factor
    return _as_count(total, f"count_trajectory({x}, {y}, {t})")


def odd_double_factorial(n: int) -> int:
    """n!! for odd n, with (-1)!! = 1."""
    if n < -1 or n % 2 == 0:
        raise ValueError(f"odd double factorial undefined for {n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def xi_zero(Y: int, S: int) -> int:
    """Sum over all trajectories from Y to 0 with S up-steps of the product
    of their up-values: C(Y + 2S, Y) * (2S - 1)!!."""
    if Y < 0 or S < 0:
        raise ValueError("Y and S must be nonnegative")
    return comb(Y + 2 * S, Y) * odd_double_factorial(2 * S - 1)


def xi(X: int, Y: int, S: int, i: int = 0) -> int:
    """Sum over trajectories from Y to X with S up-steps of prod_j (e_j - i).

    Valid for Y >= X >= i >= 0.  Shifts to (X - i, Y - i, S, 0) and expands
    as an alternating sum of min(floor((X - i) / 2), S) + 1 closed terms.
    """
    if not Y >= X >= i >= 0:
        raise ValueError(f"xi needs Y >= X >= i >= 0, got ({X}, {Y}, {S}, {i})")
    if S < 0:
        raise ValueError("S must be nonnegative")
    X -= i
    Y -= i
    m = min(X // 2, S)
    total = 0
    for k in range(m + 1):
        term = comb(X, 2 * k) * odd_double_factorial(2 * k - 1) * xi_zero(Y, S - k)
        total += -term if k % 2 else term
    return total


def count_s_paths(x: Word, y: Word, S: int) -> int:
    """Number of paths from y to x with exactly S up-steps."""
    if y.rank < x.rank:
        raise ValueError(f"count_s_paths needs rank({y}) >= rank({x})")
    if S < 0:
        raise ValueError("S must be nonnegative")
    total = Fraction(0)
    for i in range(x.rank + 1):
        total += weight(x, y, i) * xi(x.rank, y.rank, S, i)
    return _as_count(total, f"count_s_paths({x}, {y}, {S})")


def count_s_paths_from_top(x: Word, S: int) -> int:
    """Closed form for paths from x to the empty word with S up-steps."""
    if S < 0:
        raise ValueError("S must be nonnegative")
    return (
        comb(x.rank + 2 * S, x.rank)
        * odd_double_factorial(2 * S - 1)
        * count_down_from_top(x)
    )
