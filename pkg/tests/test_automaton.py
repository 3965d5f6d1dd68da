from itertools import product

import pytest

from kolafreq import (
    EmptyLanguageError,
    NotFactorFreeError,
    TooLargeError,
    WeightPoly,
    avoided_set,
    build_automaton,
    contains_any_factor,
    degree_profile,
    enumerate_brute,
    weight_poly_dp,
    weight_series,
)


def test_s1_automaton_has_five_live_states():
    assert build_automaton(avoided_set(1)).n_states == 5


def test_single_letter_taboo():
    auto = build_automaton(["1"])
    assert auto.n_states == 1
    assert auto.accepts("2222")
    assert not auto.accepts("21")
    assert weight_poly_dp(["1"], 4) == WeightPoly({(0, 4): 1})


@pytest.mark.parametrize("d,max_n", [(2, 10), (5, 12)])
def test_automaton_agrees_with_direct_scan(d, max_n):
    words = avoided_set(d).words
    auto = build_automaton(words)
    for n in range(max_n + 1):
        for letters in product("12", repeat=n):
            w = "".join(letters)
            assert auto.accepts(w) == (not contains_any_factor(w, words)), w


def test_automaton_rejects_bad_sets():
    with pytest.raises(ValueError):
        build_automaton([])
    with pytest.raises(NotFactorFreeError):
        build_automaton(["12", "121"])


def test_live_state_count_is_trie_minus_terminals():
    words = avoided_set(5).words
    trie_nodes = {""}
    for w in words:
        for i in range(1, len(w) + 1):
            trie_nodes.add(w[:i])
    assert build_automaton(words).n_states == len(trie_nodes) - len(words)


def test_profile_basics():
    prof = degree_profile(avoided_set(1), 3)
    assert prof.min_ones[3] == 1 and prof.max_ones[3] == 2
    assert prof.min_ones[0] == 0 and prof.max_ones[0] == 0
    prof.check_invariants()


def test_profile_order_zero():
    prof = degree_profile(avoided_set(2), 0)
    assert prof.min_ones == (0,) and prof.max_ones == (0,)


def test_profile_headline_value():
    assert degree_profile(avoided_set(5), 762).min_ones[762] == 364


def test_profile_of_dead_language():
    with pytest.raises(EmptyLanguageError):
        degree_profile(["1", "2"], 1)


def test_counting_dp_examples():
    assert weight_poly_dp(avoided_set(1), 3) == WeightPoly({(2, 1): 3, (1, 2): 3})
    assert weight_poly_dp(avoided_set(1), 0) == WeightPoly.one()


def test_brute_force_examples():
    assert enumerate_brute(avoided_set(1), 2) == WeightPoly(
        {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    )
    assert enumerate_brute([], 4) == WeightPoly.letter_sum() ** 4
    with pytest.raises(TooLargeError):
        enumerate_brute(avoided_set(1), 25)


def test_cross_oracle_s2_n10():
    assert weight_poly_dp(avoided_set(2), 10) == enumerate_brute(avoided_set(2), 10)


def test_profile_consistent_with_series_extremes():
    words = avoided_set(3).words
    series = weight_series(words, 18)
    prof = degree_profile(words, 18)
    for n in range(19):
        assert series.min_ones(n) == prof.min_ones[n]
        assert series.max_ones(n) == prof.max_ones[n]


def test_survivor_counts_shrink_with_larger_sets():
    n = 12
    counts = [
        sum(weight_poly_dp(avoided_set(d), n).terms.values()) for d in (1, 2, 3)
    ]
    assert counts[0] >= counts[1] >= counts[2]
