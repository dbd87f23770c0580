from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from iterlin import DyadicRational


def as_fraction(d: DyadicRational) -> Fraction:
    return Fraction(d.numerator, 1 << d.exponent)


def test_normalization():
    assert DyadicRational(4, 2) == DyadicRational(1, 0)
    assert DyadicRational(6, 1) == DyadicRational(3, 0)
    assert DyadicRational(11, 1).numerator == 11
    assert DyadicRational(0, 5) == DyadicRational(0, 0)


def test_rejects_negative_exponent():
    with pytest.raises(ValueError):
        DyadicRational(1, -1)


def test_string_forms():
    assert str(DyadicRational(11, 1)) == "11/2"
    assert str(DyadicRational(63, 3)) == "63/8"
    assert str(DyadicRational(3)) == "3"
    assert float(DyadicRational(11, 1)) == 5.5


def test_scaled():
    assert DyadicRational.scaled(3, 4) == DyadicRational(48)
    assert DyadicRational.scaled(15, -1) == DyadicRational(15, 1)
    assert DyadicRational.scaled(2, -2) == DyadicRational(1, 1)


def test_int_comparison():
    assert DyadicRational(6) == 6
    assert DyadicRational(11, 1) < 6
    assert DyadicRational(11, 1) > 5
    assert DyadicRational(255, 5) < 8


dyadics = st.builds(DyadicRational,
                    st.integers(min_value=-1000, max_value=1000),
                    st.integers(min_value=0, max_value=12))


@given(dyadics, dyadics)
def test_order_matches_fractions(a, b):
    assert (a < b) == (as_fraction(a) < as_fraction(b))
    assert (a == b) == (as_fraction(a) == as_fraction(b))


@given(dyadics, dyadics)
def test_add_matches_fractions(a, b):
    assert as_fraction(a + b) == as_fraction(a) + as_fraction(b)


@given(dyadics, st.integers(min_value=-8, max_value=8))
def test_times_pow2_matches_fractions(a, p):
    assert as_fraction(a.times_pow2(p)) == as_fraction(a) * Fraction(2) ** p


@given(dyadics)
def test_hash_consistent_with_eq(a):
    b = DyadicRational(a.numerator * 4, a.exponent + 2)
    assert a == b and hash(a) == hash(b)
