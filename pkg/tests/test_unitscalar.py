from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from twistcat.unitscalar import ONE, UnitScalar, mod1

exponents = st.fractions(
    min_value=-50, max_value=50, max_denominator=64
)


def test_multiplication_adds_exponents():
    half = UnitScalar(Fraction(1, 2))
    assert half * half == ONE  # (-1)(-1) = 1
    three_quarters = UnitScalar(Fraction(3, 4))
    assert (three_quarters * three_quarters).exponent == Fraction(1, 2)  # (-i)(-i) = -1


def test_inverse_law():
    x = UnitScalar(Fraction(5, 7))
    assert x * x.inverse() == ONE
    assert x / x == ONE


def test_powers():
    assert (UnitScalar(Fraction(1, 4)) ** 2).exponent == Fraction(1, 2)
    assert (UnitScalar(Fraction(3, 4)) ** -1).exponent == Fraction(1, 4)
    assert UnitScalar(Fraction(1, 3)) ** 3 == ONE


def test_to_complex_axis_points_exact():
    assert UnitScalar(Fraction(0)).to_complex() == 1
    assert UnitScalar(Fraction(1, 2)).to_complex() == -1
    assert UnitScalar(Fraction(3, 4)).to_complex() == -1j
    assert UnitScalar(Fraction(1, 4)).to_complex() == 1j


def test_parse_round_trip():
    x = UnitScalar.parse("3/4")
    assert x.exponent == Fraction(3, 4)
    assert str(x) == "3/4"
    assert UnitScalar.parse("0") == ONE


def test_canonicalization_idempotent():
    x = UnitScalar(Fraction(9, 4))
    assert x.exponent == Fraction(1, 4)
    assert UnitScalar(x.exponent) == x
    assert UnitScalar(Fraction(-1, 4)).exponent == Fraction(3, 4)


@given(exponents, exponents)
def test_to_complex_is_multiplicative(a, b):
    x, y = UnitScalar(a), UnitScalar(b)
    assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) <= 1e-12


@given(exponents)
def test_modulus_one(a):
    assert abs(abs(UnitScalar(a).to_complex()) - 1.0) <= 1e-12


def test_mod1_helper():
    assert mod1(Fraction(7, 4)) == Fraction(3, 4)
    assert mod1(-1) == 0


def test_pow_negative_exponent():
    x = UnitScalar(Fraction(2, 5))
    assert (x ** -2) * (x ** 2) == ONE
