from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from isingccp import EXACT_I, ExactScalar, ExactnessError, parse_exact

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
polys = st.lists(rationals, min_size=0, max_size=4)


def scalar(re=(), im=()):
    return ExactScalar(tuple(re), tuple(im))


def test_zero_iff_all_coefficients_vanish():
    assert not scalar()
    assert scalar((Fraction(1, 3),))
    assert scalar((0, Fraction(1, 3)))
    # pi is transcendental: a + b*pi + c*pi^2 == 0 only coefficient-wise
    assert scalar((1, -1)) != ExactScalar(0)


def test_product_rule_linear_terms():
    a, b, c, d = Fraction(2, 3), Fraction(-1, 7), Fraction(5), Fraction(1, 2)
    lhs = scalar((a, b)) * scalar((c, d))
    assert lhs == scalar((a * c, a * d + b * c, b * d))


@given(polys, polys, polys)
def test_multiplication_distributes(p, q, r):
    x, y, z = scalar(p), scalar(q), scalar(r)
    assert x * (y + z) == x * y + x * z


@given(polys, polys)
def test_multiplication_commutes(p, q):
    assert scalar(p) * scalar(q) == scalar(q) * scalar(p)


def test_parse_tokens():
    assert parse_exact("1/4+pi/20") == scalar((Fraction(1, 4), Fraction(1, 20)))
    assert parse_exact("1/16-1/400*pi^2") == scalar((Fraction(1, 16), 0, Fraction(-1, 400)))
    assert parse_exact("pi/2") == scalar((0, Fraction(1, 2)))
    assert parse_exact("-3/5") == ExactScalar(Fraction(-3, 5))
    assert parse_exact("2*pi") == scalar((0, 2))


def test_parse_round_trip():
    for token in ("1/4+1/20*pi", "1/16-1/400*pi^2", "0", "-1/2", "pi^2"):
        assert str(parse_exact(token)) == token


def test_parse_rejects_decimals():
    with pytest.raises(ExactnessError):
        parse_exact("0.25")
    with pytest.raises(ExactnessError):
        parse_exact("1e-3")


def test_correlating_weights_product():
    a = parse_exact("1/4+pi/20")
    b = parse_exact("1/4-pi/20")
    assert ExactScalar(Fraction(1, 16)) - a * b == parse_exact("1/400*pi^2")


def test_division_exact_and_inexact():
    quarter = ExactScalar(Fraction(1, 4))
    assert parse_exact("1/400*pi^2") / quarter == parse_exact("1/100*pi^2")
    pi = parse_exact("pi")
    assert (pi * pi) / pi == pi
    with pytest.raises(ExactnessError):
        ExactScalar(1) / pi
    with pytest.raises(ZeroDivisionError):
        pi / ExactScalar(0)


def test_complex_parts_and_conjugation():
    z = ExactScalar(Fraction(1, 2)) + EXACT_I * parse_exact("pi/4")
    assert z.conjugate() + z == ExactScalar(1)
    assert EXACT_I * EXACT_I == ExactScalar(-1)
    assert complex(EXACT_I) == 1j


def test_float_mixing_rejected():
    with pytest.raises(ExactnessError):
        ExactScalar(1) + 0.5
    with pytest.raises(ExactnessError):
        ExactScalar(1) * 1j


def test_ordering_of_real_values():
    assert parse_exact("1/4") < parse_exact("1/4+pi/20")
    assert parse_exact("1/4-pi/20") > 0
    with pytest.raises(ExactnessError):
        _ = EXACT_I < ExactScalar(1)


def test_float_evaluation():
    import math

    value = float(parse_exact("1/400*pi^2"))
    assert abs(value - math.pi ** 2 / 400) < 1e-15
