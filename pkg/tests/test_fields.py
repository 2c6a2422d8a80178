from fractions import Fraction

import pytest

from kantorlab.fields import QQ, ModP, PrimeField, field_from_json


def test_rational_format_is_reduced():
    assert QQ.format(QQ.parse("6/4")) == "3/2"
    assert QQ.format(QQ.parse("8/4")) == "2"
    assert QQ.format(QQ(-3)) == "-3"


def test_rational_integral_values_are_ints():
    assert type(QQ(Fraction(4, 2))) is int


def test_rational_parse_rejects_garbage():
    with pytest.raises(ValueError):
        QQ.parse("1/0")
    with pytest.raises(ValueError):
        QQ.parse("3 mod 5")


def test_prime_field_arithmetic():
    F = PrimeField(5)
    a = F(3)
    assert a * F.inv(a) == F.one
    assert F(7) == F(2)
    assert F.format(F(-1)) == "4 mod 5"
    assert F.parse("3 mod 5") == F(3)
    with pytest.raises(ValueError):
        F.parse("3 mod 7")


def test_prime_field_needs_prime():
    with pytest.raises(ValueError):
        PrimeField(6)


def test_field_json_round_trip():
    for F in (QQ, PrimeField(7)):
        assert field_from_json(F.to_json()) == F


def test_modp_mixes_with_ints():
    x = ModP(3, 7)
    assert x + 5 == ModP(1, 7)
    assert 1 - x == ModP(5, 7)
    assert x ** 6 == ModP(1, 7)
