"""Words over the alphabet {1, 2}: the vertices of the Young-Fibonacci graph.

A word is graded by its digit sum (its *rank*); the empty word has rank 0.
Rank-n words are in bijection with compositions of n into parts 1 and 2, so
level n contains F_{n+1} words (Fibonacci numbers with F_0 = 0, F_1 = 1).

The covering structure is encoded by :func:`predecessors` (neighbours one
rank down) and :func:`successors` (one rank up).  Suffix-oriented helpers
(:func:`common_suffix_len`, :func:`suffix_sum`, :func:`start1`,
:func:`start2`) support the exact counting formulas built on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

EMPTY_WORD_TEXTS = ("e", "eps")


@dataclass(frozen=True, slots=True)
class Word:
    """Immutable digit string over {1, 2}; ``digits[0]`` is the leftmost digit."""

    digits: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(d not in (1, 2) for d in self.digits):
            raise ValueError(f"word digits must be 1 or 2, got {self.digits!r}")

    @property
    def rank(self) -> int:
        """Digit sum; the grading of the vertex."""
        return sum(self.digits)

    @property
    def digit_count(self) -> int:
        return len(self.digits)

    @property
    def twos(self) -> int:
        return self.digits.count(2)

    @property
    def leading_twos(self) -> int:
        """Number of 2s strictly before the first 1 (all 2s if no 1 occurs)."""
        n = 0
        for d in self.digits:
            if d == 1:
                break
            n += 1
        return n

    def __str__(self) -> str:
        return "".join(map(str, self.digits)) if self.digits else EMPTY_WORD_TEXTS[0]

    def __repr__(self) -> str:
        return f"Word({self})"


EPSILON = Word()


def parse_word(text: str) -> Word:
    """Parse the CLI text form: a string of '1'/'2', or "e"/"eps" for the empty word."""
    if text in EMPTY_WORD_TEXTS:
        return EPSILON
    if not text:
        raise ValueError('empty word must be written "e"')
    if not set(text) <= {"1", "2"}:
        raise ValueError(f"invalid word {text!r}: digits must be 1 or 2")
    return Word(tuple(int(ch) for ch in text))


def rank(w: Word) -> int:
    return w.rank


def stats(w: Word) -> tuple[int, int, int]:
    """(digit count, number of 2s, number of 2s before the first 1)."""
    return w.digit_count, w.twos, w.leading_twos


def concat(x: Word, y: Word) -> Word:
    return Word(x.digits + y.digits)


def predecessors(w: Word) -> list[Word]:
    """Neighbours one rank down, ordered.

    For k = 1..leading_twos(w) the k-th 2 is replaced by a 1; finally, if the
    word contains a 1 at all, the first 1 is deleted.  The empty word has no
    predecessors.
    """
    digits = w.digits
    out = [Word(digits[:k] + (1,) + digits[k + 1:]) for k in range(w.leading_twos)]
    if 1 in digits:
        i = digits.index(1)
        out.append(Word(digits[:i] + digits[i + 1:]))
    return out


def successors(w: Word) -> list[Word]:
    """Neighbours one rank up, ordered; always one more of them than predecessors."""
    # Prepending a 2 turns the up-neighbourhood into a down-neighbourhood.
    return predecessors(Word((2,) + w.digits))


def common_suffix_len(x: Word, y: Word) -> int:
    """Number of digits (not digit sum) in the longest common suffix."""
    n = 0
    for a, b in zip(reversed(x.digits), reversed(y.digits)):
        if a != b:
            break
        n += 1
    return n


def suffix_sum(x: Word, a: int) -> int:
    """Sum of the last ``a`` digits."""
    if not 0 <= a <= x.digit_count:
        raise ValueError(f"suffix length {a} out of range for {x}")
    return sum(x.digits[x.digit_count - a:])


def _suffix_sum_splits(x: Word) -> dict[int, int]:
    """Map each suffix digit-sum to the index where that suffix starts."""
    splits = {0: len(x.digits)}
    s = 0
    for i in range(len(x.digits) - 1, -1, -1):
        s += x.digits[i]
        splits[s] = i
    return splits


def start1(x: Word, a: int) -> Word:
    """First start function: the word roughly "left of digit-sum a from the right".

    With x = x'1x'' and digit-sum(x'') = a the value is x'1; with x = x'2x''
    it is x'11; when a is not a suffix digit-sum it splits a 2 (a-1 is one,
    followed by a 2) and the value is x'1.  At a = rank(x) the value is the
    empty word.  Exactly one case applies; this is asserted.
    """
    if not 0 <= a <= x.rank:
        raise ValueError(f"start1 argument {a} out of range for {x}")
    if a == x.rank:
        return EPSILON
    digits = x.digits
    splits = _suffix_sum_splits(x)
    matches = []
    if a in splits:
        i = splits[a]
        if digits[i - 1] == 1:
            matches.append(Word(digits[:i]))
        else:
            matches.append(Word(digits[: i - 1] + (1, 1)))
    if a - 1 in splits:
        i = splits[a - 1]
        if i >= 1 and digits[i - 1] == 2:
            matches.append(Word(digits[: i - 1] + (1,)))
    if len(matches) != 1:
        raise AssertionError(f"start1 cases not mutually exclusive at ({x}, {a})")
    return matches[0]


def start2(x: Word, a: int) -> Word | None:
    """Second start function: the prefix left of a suffix of digit-sum ``a``.

    Returns None when ``a`` is not a suffix digit-sum of ``x``.
    """
    if not 0 <= a <= x.rank:
        raise ValueError(f"start2 argument {a} out of range for {x}")
    splits = _suffix_sum_splits(x)
    if a not in splits:
        return None
    return Word(x.digits[: splits[a]])


@lru_cache(maxsize=None)
def _level_digits(n: int) -> tuple[tuple[int, ...], ...]:
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    with_one = tuple((1,) + t for t in _level_digits(n - 1))
    with_two = tuple((2,) + t for t in _level_digits(n - 2))
    return with_one + with_two


def level(n: int) -> list[Word]:
    """All words of rank ``n`` in lexicographic order of their digit strings."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    return [Word(t) for t in _level_digits(n)]
