from hypothesis import given, strategies as st
import pytest

from yfpaths.words import (
    EPSILON,
    Word,
    common_suffix_len,
    concat,
    level,
    parse_word,
    predecessors,
    stats,
    start1,
    start2,
    successors,
    suffix_sum,
)

words = st.builds(Word, st.lists(st.sampled_from([1, 2]), max_size=8).map(tuple))


def w(text):
    return parse_word(text)


def test_parse_empty_word_literals():
    assert parse_word("e") == EPSILON
    assert parse_word("eps") == EPSILON
    assert str(EPSILON) == "e"


def test_parse_transcribes_digits():
    assert parse_word("21221").digits == (2, 1, 2, 2, 1)


@pytest.mark.parametrize("bad", ["", "120", "x", "2 1", "e1"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse_word(bad)


def test_word_rejects_bad_digits():
    with pytest.raises(ValueError):
        Word((1, 3))


@given(words)
def test_str_parse_round_trip(word):
    assert parse_word(str(word)) == word


def test_rank():
    assert EPSILON.rank == 0
    assert w("21221").rank == 8
    assert w("122112").rank == 9


def test_stats():
    assert stats(w("2221")) == (4, 3, 3)
    assert stats(w("1221")) == (4, 2, 0)
    assert stats(w("222")) == (3, 3, 3)


def test_predecessors_ordered():
    assert predecessors(w("2221")) == [w("1221"), w("2121"), w("2211"), w("222")]
    assert predecessors(w("2222")) == [w("1222"), w("2122"), w("2212"), w("2221")]
    assert predecessors(w("12")) == [w("2")]
    assert predecessors(EPSILON) == []


def test_successors_ordered():
    assert successors(EPSILON) == [w("1")]
    assert successors(w("222")) == [w("1222"), w("2122"), w("2212"), w("2221")]
    assert successors(w("221")) == [w("1221"), w("2121"), w("2211"), w("222")]


def test_successors_are_predecessors_of_two_prefixed():
    for n in range(7):
        for y in level(n):
            assert successors(y) == predecessors(concat(w("2"), y))


def test_one_differential_degrees():
    for n in range(8):
        for word in level(n):
            assert len(successors(word)) == len(predecessors(word)) + 1


@given(words)
def test_duality(word):
    for p in predecessors(word):
        assert word in successors(p)
    for s in successors(word):
        assert word in predecessors(s)


def test_ranks_shift_by_one():
    for n in range(6):
        for word in level(n):
            assert all(p.rank == n - 1 for p in predecessors(word))
            assert all(s.rank == n + 1 for s in successors(word))


def test_common_suffix_len():
    assert common_suffix_len(w("1"), w("2")) == 0
    assert common_suffix_len(w("21221"), w("121")) == 2
    x = w("21221")
    assert common_suffix_len(x, x) == x.digit_count


@given(words, words)
def test_common_suffix_symmetry(a, b):
    assert common_suffix_len(a, b) == common_suffix_len(b, a)


@given(words, words)
def test_common_suffix_append_one(a, b):
    a1, b1 = Word(a.digits + (1,)), Word(b.digits + (1,))
    assert common_suffix_len(a1, b1) == common_suffix_len(a, b) + 1


def test_suffix_sum():
    x = w("122112")
    assert suffix_sum(x, 0) == 0
    assert suffix_sum(x, 3) == 4
    assert suffix_sum(x, 6) == 9
    with pytest.raises(ValueError):
        suffix_sum(x, 7)


# the full start1/start2 table for 122112
START_TABLE = {
    0: ("1221111", "122112"),
    1: ("122111", None),
    2: ("12211", "12211"),
    3: ("1221", "1221"),
    4: ("1211", "122"),
    5: ("121", None),
    6: ("111", "12"),
    7: ("11", None),
    8: ("1", "1"),
    9: ("e", "e"),
}


def test_start_functions_table():
    x = w("122112")
    for a, (s_text, s2_text) in START_TABLE.items():
        assert start1(x, a) == parse_word(s_text), f"start1 at a={a}"
        expected2 = None if s2_text is None else parse_word(s2_text)
        assert start2(x, a) == expected2, f"start2 at a={a}"


def test_start_functions_range_errors():
    x = w("122112")
    for a in (-1, 10):
        with pytest.raises(ValueError):
            start1(x, a)
        with pytest.raises(ValueError):
            start2(x, a)


@given(words, st.integers(min_value=0, max_value=20))
def test_start1_total_on_range(word, a):
    if a <= word.rank:
        result = start1(word, a)
        assert result.rank == word.rank - a
    else:
        with pytest.raises(ValueError):
            start1(word, a)


def test_concat():
    assert concat(EPSILON, w("12")) == w("12")
    assert concat(w("2"), w("1221")) == w("21221")
    assert concat(w("12"), w("21")) == w("1221")


def test_level_small():
    assert level(0) == [EPSILON]
    assert [str(x) for x in level(3)] == ["111", "12", "21"]
    assert len(level(10)) == 89


def test_level_lexicographic():
    for n in range(9):
        texts = [str(x) for x in level(n)]
        assert texts == sorted(texts)


def test_level_sizes_fibonacci():
    fib = [0, 1]
    while len(fib) < 16:
        fib.append(fib[-1] + fib[-2])
    for n in range(14):
        assert len(level(n)) == fib[n + 1]
