from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from omegalap.scalars import (
    GaussianRational,
    ScalarError,
    coerce,
    format_scalar,
    modulus,
    parse_scalar,
)

gaussians = st.builds(GaussianRational, st.fractions(), st.fractions())


@pytest.mark.parametrize("text, expected", [
    ("3", Fraction(3)),
    ("-3/6", Fraction(-1, 2)),
    ("+4/2", Fraction(2)),
    ("0", Fraction(0)),
])
def test_parse_rational(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text, re, im", [
    ("1/2+3/4i", Fraction(1, 2), Fraction(3, 4)),
    ("1-i", 1, -1),
    ("i", 0, 1),
    ("-2i", 0, -2),
    ("-1/3-1/3i", Fraction(-1, 3), Fraction(-1, 3)),
])
def test_parse_gaussian(text, re, im):
    assert parse_scalar(text, "gaussian") == GaussianRational(re, im)


@pytest.mark.parametrize("text", ["", "1.5", "1/0", "1 + i", "abc", "1/2/3", "i1"])
def test_parse_rejects(text):
    with pytest.raises(ScalarError):
        parse_scalar(text, "gaussian")


def test_complex_literal_needs_gaussian_field():
    with pytest.raises(ScalarError):
        parse_scalar("1+i")
    with pytest.raises(ScalarError):
        coerce(GaussianRational(0, 1), "rational")


@given(st.fractions())
def test_rational_round_trip(q):
    assert parse_scalar(format_scalar(q)) == q


@given(gaussians)
def test_gaussian_round_trip(z):
    assert parse_scalar(format_scalar(z), "gaussian") == z


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


def test_canonical_forms():
    assert format_scalar(Fraction(4, -6)) == "-2/3"
    assert format_scalar(GaussianRational(0, 1)) == "0+1i"
    assert format_scalar(GaussianRational(2, 0)) == "2"
    assert GaussianRational(2) == Fraction(2)
    assert hash(GaussianRational(2)) == hash(Fraction(2))


def test_modulus_is_l1_on_gaussians():
    assert modulus(GaussianRational(-1, Fraction(1, 2))) == Fraction(3, 2)
    assert modulus(Fraction(-3)) == 3
