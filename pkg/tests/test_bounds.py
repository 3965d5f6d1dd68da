from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kolafreq import (
    DegenerateDenominatorError,
    MonomialList,
    RationalGF,
    WeightPoly,
    avoided_set,
    best_bound,
    bound_from_denominator,
    bound_from_term,
    degree_profile,
    maxratio,
    minratio,
    weight_gf,
)
from kolafreq.bounds import decimal
from kolafreq.verification import REF_S3_DEN

entry = st.tuples(st.integers(0, 10), st.integers(1, 10)).map(
    lambda on: (1, min(on), max(on[0], on[1]))
)
entry_lists = st.lists(entry, min_size=1, max_size=8)


def test_minratio_of_s1_denominator():
    d = weight_gf(avoided_set(1)).d_poly()
    assert minratio(d) == Fraction(1, 3)
    assert maxratio(d) == Fraction(2, 3)


def test_minratio_of_s3_reference_denominator():
    d = WeightPoly.one() - WeightPoly(REF_S3_DEN)
    assert minratio(d) == Fraction(4, 9)
    assert maxratio(d) == Fraction(5, 9)


def test_minratio_single_entry():
    m = MonomialList(((5, 2, 3),))
    assert minratio(m) == Fraction(2, 3)
    assert maxratio(m) == Fraction(2, 3)


def test_monomial_list_validation():
    with pytest.raises(ValueError):
        MonomialList(((1, 0, 0),))
    with pytest.raises(ValueError):
        MonomialList(((1, 4, 3),))
    with pytest.raises(ValueError):
        minratio(MonomialList(()))
    assert len(MonomialList.from_poly(WeightPoly({(0, 0): 7, (1, 1): 1}))) == 1


def test_bound_from_term_examples():
    assert bound_from_term(1, 2, 3).epsilon == Fraction(1, 6)
    assert bound_from_term(364, 398, 762).epsilon == Fraction(17, 762)
    assert bound_from_term(0, 9, 9).epsilon == Fraction(1, 2)
    with pytest.raises(ValueError):
        bound_from_term(2, 1, 3)
    with pytest.raises(ValueError):
        bound_from_term(0, 0, 0)


def test_bound_fields_are_exact_and_symmetric():
    b = bound_from_term(364, 398, 762)
    assert isinstance(b.epsilon, Fraction)
    assert b.lower == Fraction(1, 2) - b.epsilon
    assert b.upper == Fraction(1, 2) + b.epsilon
    assert b.rigor == "rigorous"
    assert "series-term(762)" in b.provenance
    assert "limiting frequency exists" in b.render()


def test_decimal_rendering_matches_published_style():
    assert decimal(Fraction(17, 762)) == "0.0223097"
    assert decimal(Fraction(1, 46)) == "0.0217391"


def test_bound_from_denominator():
    assert bound_from_denominator(weight_gf(avoided_set(1))).epsilon == Fraction(1, 6)
    ref = RationalGF(WeightPoly.one(), WeightPoly(REF_S3_DEN))
    assert bound_from_denominator(ref).epsilon == Fraction(1, 18)


def test_degenerate_denominator():
    gf = RationalGF(WeightPoly.one(), WeightPoly.one())
    with pytest.raises(DegenerateDenominatorError):
        bound_from_denominator(gf)


def test_best_bound_s1():
    n, b = best_bound(degree_profile(avoided_set(1), 200))
    assert (n, b.epsilon) == (3, Fraction(1, 6))
    with pytest.raises(ValueError):
        best_bound(degree_profile(avoided_set(1), 0))


def test_best_bound_matches_denominator_bound_for_small_depths():
    for d in (1, 2, 3):
        _, b = best_bound(degree_profile(avoided_set(d), 200))
        assert b.epsilon == bound_from_denominator(weight_gf(avoided_set(d))).epsilon


def test_minratio_of_denominator_powers_is_stable():
    d = weight_gf(avoided_set(1)).d_poly()
    for k in (1, 2, 3, 4):
        assert minratio(d**k) == Fraction(1, 3)


def test_minratio_with_numerator_converges_from_below():
    gf = weight_gf(avoided_set(1))
    num, d = gf.numerator, gf.d_poly()
    # The numerator's pure-x2 term drags early products below 1/3; the
    # minimum is x2^2 t^2 * (x1 x2^2 t^3)^k, giving k/(3k + 2) -> 1/3.
    values = [minratio(num * d**k) for k in range(1, 6)]
    assert values == [Fraction(k, 3 * k + 2) for k in range(1, 6)]
    assert values == sorted(values)
    assert all(v <= Fraction(1, 3) for v in values)


@given(entry_lists, entry_lists)
def test_minratio_mediant_property(left, right):
    products = tuple(
        (1, o1 + o2, n1 + n2) for _, o1, n1 in left for _, o2, n2 in right
    )
    combined = minratio(MonomialList(products))
    floor = min(minratio(MonomialList(tuple(left))), minratio(MonomialList(tuple(right))))
    assert combined >= floor
