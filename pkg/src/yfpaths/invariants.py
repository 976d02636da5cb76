"""Exact identities satisfied by the weight functions, run as bulk checks.

Each checker sweeps every word up to a digit-count bound, evaluates both
sides of one identity with exact arithmetic, and returns (number of checks,
failure descriptions).  They back the `verify` command and the acceptance
suite; an empty failure list is the expected outcome on a correct build.
"""

from __future__ import annotations

from itertools import product
from math import factorial
from typing import Callable, Iterator

from .functions import f_base, f_rec, g_product, g_values
from .words import EPSILON, Word, common_suffix_len

CheckResult = tuple[int, list[str]]


def words_up_to_digits(max_digits: int) -> Iterator[Word]:
    """Every word with at most ``max_digits`` digits, the empty word first."""
    yield EPSILON
    for n in range(1, max_digits + 1):
        for digits in product((1, 2), repeat=n):
            yield Word(digits)


def check_base_shift_identities(max_digits: int) -> CheckResult:
    """Appending or prepending a digit rescales the z = 0 values linearly."""
    checks = 0
    failures = []
    for x in words_up_to_digits(max_digits):
        x1 = Word(x.digits + (1,))
        for y in range(1, x1.rank + 1):
            checks += 1
            if -y * f_base(x1, y) != f_base(x, y - 1):
                failures.append(f"append-1 at ({x}, y={y})")
        x2 = Word(x.digits + (2,))
        x11 = Word(x.digits + (1, 1))
        for y in range(x2.rank + 1):
            checks += 1
            if (1 - y) * f_base(x11, y) != f_base(x2, y):
                failures.append(f"append-2 at ({x}, y={y})")
        for a0 in (1, 2):
            ax = Word((a0,) + x.digits)
            for y in range(x.rank + 1):
                checks += 1
                if (ax.rank - y) * f_base(ax, y) != f_base(x, y):
                    failures.append(f"prepend-{a0} at ({x}, y={y})")
    return checks, failures


def check_low_order_values(max_digits: int) -> CheckResult:
    """f(x, 0, z) does not depend on z; f(x, 1, z) = 0 for z >= 1; and
    f(x, 1, 0) = 0 when x ends in 2."""
    checks = 0
    failures = []
    for x in words_up_to_digits(max_digits):
        base = f_rec(x, 0, 0)
        for z in range(x.digit_count + 1):
            checks += 1
            if f_rec(x, 0, z) != base:
                failures.append(f"y=0 z-dependence at ({x}, z={z})")
            if x.rank >= 1 and z >= 1:
                checks += 1
                if f_rec(x, 1, z) != 0:
                    failures.append(f"y=1 nonzero at ({x}, z={z})")
        if x.digits and x.digits[-1] == 2:
            checks += 1
            if f_rec(x, 1, 0) != 0:
                failures.append(f"trailing-2 y=1 nonzero at {x}")
    return checks, failures


def check_two_vs_one_one(max_digits: int) -> CheckResult:
    """A trailing 2 at z = 0 evaluates like a trailing 11 at z = 1."""
    checks = 0
    failures = []
    for x in words_up_to_digits(max_digits):
        x2 = Word(x.digits + (2,))
        x11 = Word(x.digits + (1, 1))
        for i in range(x2.rank + 1):
            checks += 1
            if f_base(x2, i) != f_rec(x11, i, 1):
                failures.append(f"trailing 2 vs 11 at ({x}, i={i})")
    return checks, failures


def check_base_row_sum(max_digits: int) -> CheckResult:
    """The z = 0 values of a nonempty word sum to zero over y."""
    checks = 0
    failures = []
    for x in words_up_to_digits(max_digits):
        if x == EPSILON:
            continue
        checks += 1
        if sum(f_base(x, i) for i in range(x.rank + 1)) != 0:
            failures.append(f"row sum nonzero at {x}")
    return checks, failures


def check_prefix_extension(max_digits: int) -> CheckResult:
    """Prepending a digit rescales f at every z, not just z = 0."""
    checks = 0
    failures = []
    for x in words_up_to_digits(max_digits):
        for a0 in (1, 2):
            ax = Word((a0,) + x.digits)
            for y in range(x.rank + 1):
                for z in range(x.digit_count + 1):
                    checks += 1
                    if f_rec(x, y, z) != f_rec(ax, y, z) * (ax.rank - y):
                        failures.append(f"prefix-{a0} at ({x}, y={y}, z={z})")
    return checks, failures


def check_top_value_vanishes(max_digits: int) -> CheckResult:
    """For a word starting with 2, f one below the top y vanishes for every z."""
    checks = 0
    failures = []
    for x in words_up_to_digits(max_digits):
        w = Word((2,) + x.digits)
        for z in range(w.digit_count + 1):
            checks += 1
            if f_rec(w, x.rank + 1, z) != 0:
                failures.append(f"leading-2 near-top value at ({w}, z={z})")
    return checks, failures


def check_equal_rank_symmetry(max_digits: int) -> CheckResult:
    """For equal-rank x, y with z their common suffix length,
    f(x, i, z) * prod(g(y) - i) is symmetric in x and y."""
    checks = 0
    failures = []
    by_rank: dict[int, list[Word]] = {}
    for w in words_up_to_digits(max_digits):
        by_rank.setdefault(w.rank, []).append(w)
    for words in by_rank.values():
        for x in words:
            for y in words:
                z = common_suffix_len(x, y)
                for i in range(x.rank + 1):
                    checks += 1
                    lhs = f_rec(x, i, z) * g_product(y, i)
                    rhs = f_rec(y, i, z) * g_product(x, i)
                    if lhs != rhs:
                        failures.append(f"equal-rank symmetry at ({x}, {y}, i={i})")
    return checks, failures


def check_hook_factorial(max_digits: int) -> CheckResult:
    """The product of the g values times the suffix partial-sum product is rank!."""
    checks = 0
    failures = []
    for x in words_up_to_digits(max_digits):
        checks += 1
        product_g = 1
        for g in g_values(x):
            product_g *= g
        # f_base(x, 0) is the reciprocal of the right-to-left partial-sum product
        if product_g != factorial(x.rank) * f_base(x, 0):
            failures.append(f"hook-factorial at {x}")
    return checks, failures


INVARIANT_SUITES: list[tuple[str, Callable[[int], CheckResult]]] = [
    ("base-shift identities", check_base_shift_identities),
    ("low-order values", check_low_order_values),
    ("trailing 2 vs 11", check_two_vs_one_one),
    ("base row sum", check_base_row_sum),
    ("prefix extension", check_prefix_extension),
    ("top value vanishes", check_top_value_vanishes),
    ("equal-rank symmetry", check_equal_rank_symmetry),
    ("hook factorial", check_hook_factorial),
]


def run_invariant_suites(max_digits: int) -> list[tuple[str, int, list[str]]]:
    return [(name, *fn(max_digits)) for name, fn in INVARIANT_SUITES]
