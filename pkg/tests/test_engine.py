from fractions import Fraction as F

import pytest

from ghz.classifier import CoherentFamily, Coloring
from ghz.curves import A1, ClosedPoint, point_validate
from ghz.engine import (EngineError, GradedElement, build_operator,
                        default_horizontal_order, kernel_in_box,
                        toric_root_operator, verify_axioms, verify_horizontal,
                        verify_stability)
from ghz.fields import PrimeField, Rationals
from ghz.geometry import Cone, Polyhedron
from ghz.polynomials import RatFunc, lambda_field, parse_factored, parse_poly
from ghz.tvariety import PolyhedralDivisor, algebra_generators

Q = Rationals()


def w25_operator():
    K = lambda_field(2)
    sigma = Cone.zero(1)
    y0 = ClosedPoint.rational(K, K.zero())
    y = point_validate(parse_poly("t^2+l", K), "trusted")
    D = PolyhedralDivisor(K, A1, sigma, {
        y0: Polyhedron.from_points([(F(1, 5),)], sigma),
        y: Polyhedron.from_points([(F(0),), (F(1, 5),)], sigma),
    })
    col = Coloring(D, {y0: (F(1, 5),), y: (F(0),)}, y0)
    theta = CoherentFamily(col, (1,), (2,), (K.one(),))
    return K, D, build_operator(theta)


def ramified_operator(field, s, override=False):
    sigma = Cone.orthant(2)
    w0 = ClosedPoint.rational(field, field.zero())
    w1 = ClosedPoint.rational(field, field.one())
    D = PolyhedralDivisor(field, A1, sigma, {
        w0: Polyhedron.from_points([(F(1, 2), F(0))], sigma),
        w1: Polyhedron.from_points([(F(1, 2), F(0)), (F(0), F(1))], sigma),
    })
    col = Coloring(D, {w0: (F(1, 2), F(0)), w1: (F(0), F(1))}, w0)
    theta = CoherentFamily(col, (1, 0), s, (field.one(),))
    return D, build_operator(theta, override=override)


def test_graded_element_algebra():
    K = PrimeField(3)
    a = GradedElement.term(K, (1,), RatFunc.x(K, 1))
    b = GradedElement.term(K, (2,), RatFunc.one(K))
    prod = a * b
    assert prod.weights() == [(3,)]
    assert (a + a + a).weights() == []  # 3 = 0 in F_3
    assert (a - a).weights() == []


def test_w25_operator_shape():
    K, D, op = w25_operator()
    assert op.d == 5 and op.p == 2 and op.u == 0
    assert op.nilpotency_exponent() == 4
    assert default_horizontal_order(op) == 20


def test_w25_apply_t():
    K, D, op = w25_operator()
    res = op.apply(GradedElement.term(K, (0,), RatFunc.x(K, 1)))
    got = {i: v.to_str() for i, v in res.orders.items()}
    assert got == {
        0: "(t)*chi^(0,)",
        4: "(1)*chi^(4,)",
        16: "((1)/(t^3))*chi^(16,)",
        20: "((1)/(t^4))*chi^(20,)",
    }


def test_w25_apply_generator():
    K, D, op = w25_operator()
    x = GradedElement.term(K, (-5,), parse_factored("t*(t^2+l)", K))
    res = op.apply(x)
    got = {i: v.to_str() for i, v in res.orders.items()}
    assert got[8] == "(t)*chi^(3,)"
    assert got[40] == "((1)/(t^7))*chi^(35,)"
    assert 1 not in got and 2 not in got


def test_w25_axioms_and_stability():
    K, D, op = w25_operator()
    gens, cert = algebra_generators(D, 6)
    assert cert.complete
    elems = [GradedElement.term(K, g.weight, g.coeff) for g in gens]
    assert verify_axioms(op, elems, 12).ok
    assert verify_stability(op, D, gens).ok
    assert verify_horizontal(op)


def test_w25_kernel():
    K, D, op = w25_operator()
    ker = kernel_in_box(op, D, 10, window=4)
    assert ker.report.ok
    assert ker.weights == [(0,), (5,), (10,)]
    assert ker.lattice == [[5]]
    assert ker.spans[(5,)].to_str() == "(1)/(t)"


def test_build_rejects_incoherent():
    F2 = PrimeField(2)
    sigma = Cone.zero(1)
    y0 = ClosedPoint.rational(F2, F2.zero())
    y = ClosedPoint.rational(F2, F2.one())
    D = PolyhedralDivisor(F2, A1, sigma, {
        y0: Polyhedron.from_points([(F(1, 5),)], sigma),
        y: Polyhedron.from_points([(F(0),), (F(1, 5),)], sigma),
    })
    col = Coloring(D, {y0: (F(1, 5),), y: (F(0),)}, y0)
    theta = CoherentFamily(col, (1,), (2,), (F2.one(),))
    with pytest.raises(EngineError):
        build_operator(theta)
    op = build_operator(theta, override=True)
    assert op.d == 5


def test_ramified_char2():
    F2 = PrimeField(2)
    D, op = ramified_operator(F2, (0,))
    assert op.d == 2 and op.u == 1
    res = op.apply(GradedElement.term(F2, (0, 1), RatFunc.one(F2)))
    got = {i: v.to_str() for i, v in res.orders.items()}
    assert got == {0: "(1)*chi^(0, 1)", 2: "((1)/(t^2 + t))*chi^(2, 1)"}
    res2 = op.apply(GradedElement.term(F2, (1, 1), RatFunc.one(F2)))
    assert res2.orders[1].to_str() == "((1)/(t))*chi^(2, 1)"
    rest = op.apply(GradedElement.term(F2, (0, 0), RatFunc.x(F2, 1)))
    assert rest.orders[2].to_str() == "((1)/(t))*chi^(2, 0)"
    assert verify_horizontal(op)


def test_ramified_char2_stability():
    F2 = PrimeField(2)
    D, op = ramified_operator(F2, (0,))
    omega2 = Cone.from_generators([(0, 1), (2, 1)], 2)
    gens, _ = algebra_generators(D, 4, weight_cone=omega2)
    assert verify_stability(op, D, gens).ok


def test_ramified_char0_instability():
    D, op = ramified_operator(Q, (1,), override=True)
    x = GradedElement.term(Q, (0, 1), RatFunc.one(Q))
    res = op.apply(x, 4)
    assert res.orders[1].to_str() == "((2)/(t - 1))*chi^(1, 1)"
    rep = verify_stability(op, D, [x], 4)
    assert not rep.ok


def test_toric_root_operator():
    orth = Cone.orthant(2)
    top = toric_root_operator(orth, (-1, 2), Q)
    assert top.mu == (1, 0)
    c, w = top.apply((1, 0), 1)
    assert c == F(1) and w == (0, 2)
    c2, w2 = top.apply((1, 0), 2)
    assert Q.is_zero(c2)
    F2 = PrimeField(2)
    top2 = toric_root_operator(orth, (-1, 2), F2)
    c3, w3 = top2.apply((3, 0), 2)  # C(3,2) = 3 = 1 mod 2
    assert F2.is_one(c3) and w3 == (1, 4)


def test_toric_root_operator_rejects_non_root():
    orth = Cone.orthant(2)
    with pytest.raises(EngineError):
        toric_root_operator(orth, (1, 1), Q)
