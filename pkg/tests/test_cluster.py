from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kolafreq import (
    ComputationCancelled,
    NotFactorFreeError,
    RationalGF,
    WeightPoly,
    avoided_set,
    enumerate_brute,
    overlap_suffix_lengths,
    series_from_gf,
    weight_gf,
    weight_series,
)

words_st = st.text(alphabet="12", min_size=1, max_size=8)


def brute_overlaps(u: str, v: str) -> set[int]:
    out = set()
    for L in range(1, min(len(u), len(v))):
        if all(u[len(u) - L + i] == v[i] for i in range(L)):
            out.add(L)
    return out


@pytest.mark.parametrize(
    "u,v,expected",
    [
        ("111", "111", {1, 2}),
        ("111", "222", set()),
        ("12121", "21212", {2, 4}),
        ("112211", "111", {1, 2}),
        ("21", "112211", {1}),
    ],
)
def test_overlap_examples(u, v, expected):
    assert overlap_suffix_lengths(u, v) == expected


@given(words_st, words_st)
def test_overlaps_match_brute_force(u, v):
    assert overlap_suffix_lengths(u, v) == brute_overlaps(u, v)


def test_overlap_rejects_empty():
    with pytest.raises(ValueError):
        overlap_suffix_lengths("", "1")


def test_gf_of_empty_set():
    gf = weight_gf([])
    assert gf.numerator == WeightPoly.one()
    assert gf.denominator == WeightPoly.one() - WeightPoly.letter_sum()


def test_gf_of_single_letter_taboo():
    gf = weight_gf(["1"])
    assert gf.numerator == WeightPoly.one()
    assert gf.denominator == WeightPoly({(0, 0): 1, (0, 1): -1})


def test_gf_s1_matches_closed_form():
    gf = weight_gf(avoided_set(1))
    x1_part = WeightPoly({(0, 0): 1, (1, 0): 1, (2, 0): 1})
    x2_part = WeightPoly({(0, 0): 1, (0, 1): 1, (0, 2): 1})
    assert gf.numerator == x1_part * x2_part
    assert gf.denominator == WeightPoly(
        {(0, 0): 1, (1, 1): -1, (2, 1): -1, (1, 2): -1, (2, 2): -1}
    )


def test_gf_rejects_non_factor_free():
    with pytest.raises(NotFactorFreeError):
        weight_gf(["111", "21112"])
    with pytest.raises(ValueError):
        weight_gf([""])


def test_series_s1_first_terms():
    series = weight_series(avoided_set(1), 5)
    assert series.slices == (
        (1,),
        (1, 1),
        (1, 2, 1),
        (0, 3, 3, 0),
        (0, 2, 6, 2, 0),
        (0, 1, 7, 7, 1, 0),
    )


def test_series_order_zero():
    assert weight_series(avoided_set(3), 0).slices == ((1,),)


def test_series_of_empty_set_is_binomial():
    series = weight_series([], 6)
    assert series.poly(6) == WeightPoly.letter_sum() ** 6


@pytest.mark.parametrize("d", [1, 2])
def test_series_agrees_with_brute_force(d):
    series = weight_series(avoided_set(d), 12)
    for n in range(13):
        assert series.poly(n) == enumerate_brute(avoided_set(d), n), f"n={n}"


def test_series_validates_counting_invariants():
    weight_series(avoided_set(3), 40).validate_counting()


def test_series_swap_symmetry():
    series = weight_series(avoided_set(2), 15)
    for n in range(16):
        row = series.slices[n]
        assert row == tuple(reversed(row))


def test_series_from_gf_binomial():
    gf = RationalGF(WeightPoly.one(), WeightPoly.one() - WeightPoly.letter_sum())
    series = series_from_gf(gf, 3)
    assert series.poly(3) == WeightPoly.letter_sum() ** 3


def test_series_from_gf_cross_method_s3():
    gf = weight_gf(avoided_set(3))
    assert series_from_gf(gf, 50) == weight_series(avoided_set(3), 50)


def test_series_from_gf_signed_numerator():
    gf = RationalGF(WeightPoly({(0, 0): 1, (1, 0): -1}), WeightPoly.one())
    series = series_from_gf(gf, 2)
    assert series.slices == ((1,), (0, -1), (0, 0, 0))


def test_series_from_gf_large_coefficients():
    # 1/(1 - 3 x1 t): coefficients grow as 3^n, past the counting bound 2^n.
    den = WeightPoly({(0, 0): 1, (1, 0): -3})
    series = series_from_gf(RationalGF(WeightPoly.one(), den), 64)
    assert series.slices[64][64] == 3**64


def test_progress_and_cancellation_hooks():
    seen = []
    weight_series(avoided_set(1), 6, progress=lambda n, total: seen.append((n, total)))
    assert seen == [(n, 6) for n in range(1, 7)]
    with pytest.raises(ComputationCancelled):
        weight_series(avoided_set(1), 6, should_cancel=lambda: True)
    with pytest.raises(ComputationCancelled):
        series_from_gf(weight_gf(avoided_set(1)), 6, should_cancel=lambda: True)


def test_gf_s2_minratio_matches_s1():
    from kolafreq import bound_from_denominator

    assert bound_from_denominator(weight_gf(avoided_set(2))).epsilon == Fraction(1, 6)
