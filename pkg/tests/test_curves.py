from fractions import Fraction as F

import pytest

from ghz.curves import (A1, P1, ClosedPoint, PointError, QDivisor,
                        h0_generators, insep_profile, point_validate,
                        principal_divisor)
from ghz.fields import PrimeField, Rationals
from ghz.polynomials import Poly, lambda_field, parse_factored, parse_poly

Q = Rationals()
F2 = PrimeField(2)


def test_rational_point():
    y = ClosedPoint.rational(Q, Q.from_int(3))
    assert y.is_rational and y.degree == 1
    assert Q.eq(y.rational_value(), Q.from_int(3))
    assert y.to_str() == "t - 3"


def test_infinity_point():
    inf = ClosedPoint.infinity()
    assert inf.is_infinity
    with pytest.raises(PointError):
        inf.rational_value()
    with pytest.raises(PointError):
        insep_profile(inf)


def test_point_validate_strict():
    q = parse_poly("t^2 + t + 1", F2)
    y = point_validate(q, "strict")
    assert y.degree == 2 and not y.trusted
    with pytest.raises(PointError):
        point_validate(parse_poly("t^2 + 1", F2), "strict")  # (t+1)^2


def test_point_validate_reducible_over_q():
    with pytest.raises(PointError):
        point_validate(parse_poly("t^2 - 1", Q), "strict")
    assert point_validate(parse_poly("t^2 + 1", Q), "strict").degree == 2


def test_point_validate_trusted_marker():
    K = lambda_field(2)
    q = parse_poly("t^2 + l", K)
    with pytest.raises(PointError):
        point_validate(q, "strict")
    y = point_validate(q, "trusted")
    assert y.trusted and y.degree == 2


def test_insep_profile():
    K = lambda_field(2)
    y = point_validate(parse_poly("t^2 + l", K), "trusted")
    prof = insep_profile(y)
    assert (prof.level, prof.epsilon, prof.s) == (1, 2, 1)
    assert prof.q_tilde == parse_poly("t + l", K)
    y2 = point_validate(parse_poly("t + 1", F2), "strict")
    prof2 = insep_profile(y2)
    assert (prof2.level, prof2.epsilon) == (0, 1)


def test_qdivisor_arithmetic():
    y0 = ClosedPoint.rational(Q, Q.zero())
    y1 = ClosedPoint.rational(Q, Q.one())
    e = QDivisor({y0: F(7, 5), y1: F(-1, 2)})
    assert e.floor() == QDivisor({y0: F(1), y1: F(-1)})
    assert e.fractional() == QDivisor({y0: F(2, 5), y1: F(1, 2)})
    assert e.degree() == F(9, 10)
    assert not e.is_integral()
    assert (e - e).is_zero()
    assert e.scale(F(10)).is_integral()


def test_principal_divisor():
    f = parse_factored("t*(t+1)^-2", Q)
    d = principal_divisor(f, A1)
    y0 = ClosedPoint.rational(Q, Q.zero())
    y1 = ClosedPoint.rational(Q, Q.neg(Q.one()))
    assert d.coeff(y0) == 1 and d.coeff(y1) == -2
    dp = principal_divisor(f, P1)
    assert dp.coeff(ClosedPoint.infinity()) == 1
    assert dp.degree() == 0


def test_h0_affine():
    y0 = ClosedPoint.rational(Q, Q.zero())
    mod = h0_generators(QDivisor({y0: F(-7, 5)}), A1, Q)
    # floor is -2[0], so the generator is t^2
    assert mod.generator.expand().num == Poly(Q, {2: Q.one()})


def test_h0_projective():
    y0 = ClosedPoint.rational(Q, Q.zero())
    inf = ClosedPoint.infinity()
    mod = h0_generators(QDivisor({y0: F(1), inf: F(2)}), P1, Q)
    assert mod.dimension == 4
    assert len(mod.basis()) == 4
    empty = h0_generators(QDivisor({y0: F(-1)}), P1, Q)
    assert empty.is_empty and empty.dimension == 0


def test_h0_infinity_rejected_on_a1():
    with pytest.raises(PointError):
        h0_generators(QDivisor({ClosedPoint.infinity(): F(1)}), A1, Q)
