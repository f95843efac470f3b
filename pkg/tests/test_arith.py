from math import gcd

import pytest
from hypothesis import given, strategies as st

from lensfill.arith import (
    InvalidInput,
    LensSpace,
    Rational,
    cf_value,
    lens_equivalent,
    length,
    neg_cf,
    parse_cf,
    parse_fraction,
    reversal_symmetric,
    riemenschneider_dual,
)

cfs = st.lists(st.integers(2, 8), min_size=1, max_size=8).map(tuple)


def coprime_pairs(max_p=200):
    return st.integers(2, max_p).flatmap(
        lambda p: st.integers(1, p - 1).filter(lambda q: gcd(p, q) == 1).map(lambda q: (p, q))
    )


def test_expansion_and_dual_of_84_19():
    assert neg_cf(84, 19) == (5, 2, 4, 3)
    assert riemenschneider_dual((5, 2, 4, 3)) == (2, 2, 2, 4, 2, 3, 2)


@pytest.mark.parametrize(
    "p,q,cf",
    [(4, 1, (4,)), (8, 3, (3, 3)), (7, 3, (3, 2, 2)), (9, 2, (5, 2)), (57, 22, (3, 3, 2, 5)), (155, 42, (4, 4, 2, 2, 2, 4))],
)
def test_small_expansions(p, q, cf):
    assert neg_cf(p, q) == cf
    assert cf_value(cf) == Rational(p, q)


def test_empty_expansion_is_infinity():
    assert cf_value(()).is_infinite


@given(coprime_pairs())
def test_expansion_round_trips(pq):
    p, q = pq
    cf = neg_cf(p, q)
    assert cf_value(cf) == Rational(p, q)
    assert all(a >= 2 for a in cf)


@given(cfs)
def test_dual_matches_expansion_of_complement(cf):
    v = cf_value(cf)
    # second route: expand p/(p-q) directly
    assert riemenschneider_dual(cf) == neg_cf(v.num, v.num - v.den)


@given(cfs)
def test_dual_is_an_involution_and_conserves_dots(cf):
    d = riemenschneider_dual(cf)
    assert riemenschneider_dual(d) == cf
    assert sum(a - 1 for a in cf) == sum(b - 1 for b in d)
    assert len(d) == sum(a - 2 for a in cf) + 1


def test_rational_normalisation():
    assert Rational(2, -4) == Rational(-1, 2)
    assert Rational(-3, 0) == Rational(1, 0)
    assert str(Rational(6, 3)) == "2/1"
    assert Rational(1, 3) < Rational(1, 2)


def test_lens_space_normalisation():
    assert LensSpace(7, 10).q == 3
    assert str(LensSpace(1, 5)) == "S^3"
    with pytest.raises(InvalidInput):
        LensSpace(6, 4)


@given(coprime_pairs(120))
def test_lens_equivalence_is_symmetric_under_inverse(pq):
    p, q = pq
    if p < 3:
        return
    inv = pow(q, -1, p)
    assert lens_equivalent(LensSpace(p, q), LensSpace(p, inv))
    assert neg_cf(p, inv) == tuple(reversed(neg_cf(p, q)))


def test_reversal_symmetry_examples():
    assert reversal_symmetric(21, 8)
    assert reversal_symmetric(40, 11)
    assert not reversal_symmetric(41, 15)


def test_length_counts_expansion_entries():
    assert length(84, 19) == 4


def test_parse_errors_report_position():
    with pytest.raises(InvalidInput, match="position 2"):
        parse_fraction("12x/5")
    with pytest.raises(InvalidInput):
        parse_cf("5,2")
    with pytest.raises(InvalidInput):
        parse_cf("[5,1]")
    assert parse_cf("[5, 2,4,3]") == (5, 2, 4, 3)


def test_expansion_requires_p_above_q():
    with pytest.raises(InvalidInput, match="p must exceed q"):
        neg_cf(1, 1)
    with pytest.raises(InvalidInput):
        neg_cf(6, 4)
