from fractions import Fraction

import pytest
from hypothesis import given

from ndglie.scalars import (
    I, SQRT2, SQRT3, SQRT6, DomainError, FieldElement, conjugate, exp_i, format_literal,
    from_angle, parse_literal, sign, simplify,
)
from strategies import field_elements, rationals, real_field_elements


def test_generators_square_to_integers():
    assert I * I == -1
    assert SQRT2 * SQRT2 == 2
    assert SQRT3 * SQRT3 == 3
    assert SQRT2 * SQRT3 == SQRT6


@given(field_elements(), field_elements(), field_elements())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(field_elements())
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.invert()
    else:
        assert a * a.invert() == 1


@given(field_elements())
def test_literal_round_trip(a):
    text = format_literal(a)
    assert len(text.split()) == 8
    assert parse_literal(text) == a


@given(rationals)
def test_rationals_stay_rational(q):
    assert simplify(FieldElement.coerce(q)) == q
    assert isinstance(parse_literal(format_literal(q)), Fraction)


@given(field_elements())
def test_conjugation_is_an_involution(a):
    assert conjugate(conjugate(a)) == a
    assert (a * conjugate(a)).is_real()


@given(real_field_elements(), real_field_elements())
def test_sign_is_multiplicative(a, b):
    assert sign(a * b) == sign(a) * sign(b)
    assert sign(-a) == -sign(a)


def test_sign_of_close_irrationals():
    # (sqrt2 + sqrt3) / sqrt6 = 1.28445...
    assert sign(SQRT2 + SQRT3 - SQRT6 * Fraction(1284, 1000)) == 1
    assert sign(SQRT2 + SQRT3 - SQRT6 * Fraction(1285, 1000)) == -1
    assert sign(SQRT6 - SQRT2 * SQRT3) == 0
    assert sign(SQRT2 * 99 - 140) == 1
    with pytest.raises(DomainError):
        sign(I)


@pytest.mark.parametrize("k", range(24))
def test_angles_lie_on_the_unit_circle(k):
    c, s = from_angle(k)
    assert c * c + s * s == 1
    assert exp_i(k) * exp_i(24 - k) == 1


def test_angle_values():
    assert from_angle(4) == (Fraction(1, 2), SQRT3 / 2)
    assert from_angle(6) == (0, 1)
    assert exp_i(12) == -1
