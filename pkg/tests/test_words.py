import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kolafreq import (
    PrefixStats,
    contains_any_factor,
    kolakoski_prefix,
    prefix_stats,
    run_lengths,
    swap_letters,
)
from kolafreq.verification import words_for_depth


def test_first_twenty_letters():
    assert kolakoski_prefix(20, 2) == "22112122122112112212"


def test_empty_prefix():
    assert kolakoski_prefix(0, 2) == ""


def test_first_letter_one_variant():
    assert kolakoski_prefix(5, 1) == "12211"


@pytest.mark.parametrize("first", [1, 2])
def test_self_run_length_property(first):
    word = kolakoski_prefix(2000, first)
    rl = "".join(str(r) for r in run_lengths(word))
    # The final run may be truncated by the cut, so drop the last entry.
    assert word.startswith(rl[:-1])
    assert len(rl) > 1000


def test_run_lengths_of_prefix_50():
    word = kolakoski_prefix(50, 2)
    rl = "".join(str(r) for r in run_lengths(word))
    assert word.startswith(rl[:-1])


@given(st.integers(0, 400), st.integers(0, 400), st.sampled_from([1, 2]))
@settings(deadline=None)
def test_prefix_consistency(m, n, first):
    if m > n:
        m, n = n, m
    assert kolakoski_prefix(n, first)[:m] == kolakoski_prefix(m, first)


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        kolakoski_prefix(-1, 2)
    with pytest.raises(ValueError):
        kolakoski_prefix(10, 3)


@pytest.mark.parametrize(
    "word,expected",
    [("1122", [2, 2]), ("22112", [2, 2, 1]), ("", []), ("1", [1]), ("11121", [3, 1, 1])],
)
def test_run_lengths(word, expected):
    assert run_lengths(word) == expected


def test_ones_count_monotone_steps():
    word = kolakoski_prefix(5000, 2)
    counts = [0]
    for ch in word:
        counts.append(counts[-1] + (ch == "1"))
    assert all(counts[i + 1] - counts[i] in (0, 1) for i in range(len(word)))
    assert 0 <= counts[-1] <= len(word)


def test_empirical_ratio_near_half(kprefix_1m):
    stats = prefix_stats(kprefix_1m)
    assert abs(stats.ratio - 0.5) < 0.01


def test_prefix_stats_validation():
    assert prefix_stats("212") == PrefixStats(n=3, ones=1)
    with pytest.raises(ValueError):
        PrefixStats(n=1, ones=2)
    with pytest.raises(ValueError):
        PrefixStats(n=0, ones=0).ratio


def test_contains_any_factor_basics():
    assert contains_any_factor("121", {"121"})
    assert contains_any_factor("2122", {"111", "12"})
    assert not contains_any_factor("2121", {"111", "222"})


def test_kolakoski_avoids_triples(kprefix_1m):
    assert not contains_any_factor(kprefix_1m, {"111", "222"})


def test_kolakoski_avoids_depth5_words(kprefix_1m):
    assert not contains_any_factor(kprefix_1m, words_for_depth(5))


@given(st.text(alphabet="12", max_size=30))
def test_swap_letters_involution(word):
    assert swap_letters(swap_letters(word)) == word
    assert swap_letters(word).count("1") == word.count("2")
