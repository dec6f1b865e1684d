from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopsum.cyclo import CycloNum, OMEGA, ONE, Q, Q_INV, ZERO, ZETA, sixth_root

fractions = st.fractions(min_value=-6, max_value=6, max_denominator=8)
cyclos = st.builds(CycloNum, fractions, fractions)


def test_omega_minimal_polynomial():
    assert OMEGA * OMEGA == CycloNum(-1, -1)
    assert ONE + OMEGA + OMEGA * OMEGA == ZERO
    assert OMEGA**3 == ONE


def test_square_of_one_plus_omega():
    z = CycloNum(1, 1)
    assert z * z == OMEGA


def test_multiplicative_identity():
    x = CycloNum(Fraction(3, 7), Fraction(-2, 5))
    assert x * ONE == x


def test_inverse_of_omega():
    assert OMEGA.inverse() == CycloNum(-1, -1) == Q_INV
    assert Q * Q_INV == ONE


def test_inverse_of_rational():
    assert CycloNum(2, 0).inverse() == CycloNum(Fraction(1, 2), 0)


def test_inverse_of_one_plus_omega():
    assert CycloNum(1, 1).inverse() == CycloNum(0, -1)
    assert CycloNum(1, 1) * CycloNum(0, -1) == ONE


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_sixth_root():
    z = sixth_root()
    assert z == ZETA == CycloNum(1, 1)
    assert z * z == OMEGA
    assert z**3 == CycloNum(-1, 0)
    assert z**6 == ONE


def test_conjugate_and_norm():
    x = CycloNum(Fraction(2, 3), Fraction(-1, 4))
    assert (x * x.conjugate()).is_rational()
    assert x.norm() == x.a**2 - x.a * x.b + x.b**2


def test_serialization_roundtrip():
    x = CycloNum(Fraction(-7, 3), Fraction(5, 11))
    assert CycloNum.from_strings(x.to_strings()) == x
    assert x.to_strings() == ["-7/3", "5/11"]


def test_power_negative_exponent():
    x = CycloNum(2, 3)
    assert x**-2 == (x * x).inverse()


def test_complex_embedding():
    z = complex(OMEGA)
    assert abs(z - complex(-0.5, 0.75**0.5)) < 1e-15


def test_hashable_and_equal_across_forms():
    assert CycloNum(Fraction(4, 2), Fraction(0)) == CycloNum(2, 0) == 2
    assert hash(CycloNum(2, 0)) == hash(CycloNum(Fraction(2), Fraction(0)))


@settings(max_examples=60)
@given(cyclos)
def test_field_inverse(x):
    if not x.is_zero():
        assert x * x.inverse() == ONE


@settings(max_examples=60)
@given(cyclos, cyclos, cyclos)
def test_ring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x + y == y + x
    assert x * (y + z) == x * y + x * z
