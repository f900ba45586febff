from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfforge.errors import DivisionByZero, FieldMismatch
from hopfforge.field import FieldSpec, Scalar, is_prime, scalar_arith

from strategies import fields, scalars


@st.composite
def triples(draw):
    fs = draw(fields)
    a, b, c = (Scalar(fs, draw(scalars(fs))) for _ in range(3))
    return fs, a, b, c


@given(triples())
def test_addition_and_multiplication_are_associative(t):
    _, a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)


@given(triples())
def test_multiplication_distributes_over_addition(t):
    _, a, b, c = t
    assert a * (b + c) == a * b + a * c


@given(triples())
def test_additive_and_multiplicative_inverses(t):
    fs, a, _, _ = t
    assert a + (-a) == 0
    if a:
        assert a * a.inverse() == 1


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.sampled_from([2, 3, 101, 7919]))
def test_prime_field_matches_integer_residues(x, y, p):
    fs = FieldSpec.prime(p)
    assert fs.mul(fs.element(x), fs.element(y)) == (x * y) % p
    assert fs.add(fs.element(x), fs.element(y)) == (x + y) % p


@given(st.fractions(), st.fractions())
def test_rationals_match_fractions(x, y):
    fs = FieldSpec.rational()
    assert fs.mul(x, y) == x * y
    assert fs.sub(x, y) == x - y
    if y:
        assert fs.div(x, y) == x / y


@given(st.fractions(max_denominator=10**6))
def test_rational_literals_round_trip_in_lowest_terms(x):
    fs = FieldSpec.rational()
    text = fs.format_scalar(x)
    assert fs.parse_scalar(text) == x
    value = fs.parse_scalar(text)
    assert value.denominator > 0
    assert Fraction(value.numerator, value.denominator) == value


@given(st.integers(2, 500))
def test_primality_matches_trial_division(n):
    assert is_prime(n) == all(n % d for d in range(2, n))


def test_prime_field_rejects_composite_modulus():
    with pytest.raises(ValueError):
        FieldSpec.prime(91)


def test_field_spec_parse_and_print():
    assert FieldSpec.parse("rational") == FieldSpec.rational()
    assert FieldSpec.parse("fp:101") == FieldSpec.prime(101)
    assert str(FieldSpec.prime(101)) == "fp:101"
    with pytest.raises(ValueError):
        FieldSpec.parse("fp:x")


def test_division_by_zero_is_an_error():
    with pytest.raises(DivisionByZero):
        Scalar(FieldSpec.prime(5), 0).inverse()
    with pytest.raises(DivisionByZero):
        FieldSpec.prime(5).element(Fraction(1, 10))
    with pytest.raises(DivisionByZero):
        FieldSpec.rational().parse_scalar("1/0")


def test_mixing_fields_is_an_error():
    a = Scalar(FieldSpec.prime(5), 2)
    b = Scalar(FieldSpec.prime(7), 2)
    with pytest.raises(FieldMismatch):
        a + b
    with pytest.raises(FieldMismatch):
        scalar_arith(a, b, "+")


def test_residue_literals_are_decimal_integers():
    fs = FieldSpec.prime(7)
    assert fs.format_scalar(fs.element(-1)) == "6"
    assert fs.parse_scalar("1/2") == 4
