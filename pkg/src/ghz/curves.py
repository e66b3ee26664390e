"""Closed points of the affine line and projective line, and Q-divisors.

A finite closed point is a monic irreducible polynomial q(t); its residue
degree is deg q.  Over GF(p) irreducibility is proved; over GF(p)(l) only
partial checks run and the point carries a trust marker.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .fields import PrimeField, Rationals, FieldError
from .polynomials import (FactoredRatFunc, FractionField, Poly, RatFunc,
                          poly_gcd)

A1 = "A1"
P1 = "P1"


class PointError(ValueError):
    pass


class ClosedPoint:
    """Finite point (monic poly) or the point at infinity on P1."""

    __slots__ = ("poly", "trusted")

    def __init__(self, poly, trusted=False):
        self.poly = poly  # None encodes infinity
        self.trusted = trusted

    @classmethod
    def infinity(cls):
        return cls(None)

    @classmethod
    def rational(cls, field, value):
        """The point t = value for a raw field element."""
        q = Poly(field, {1: field.one(), 0: field.neg(value)})
        return cls(q)

    @property
    def is_infinity(self):
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def rational_value(self):
        """The raw field value c with q = t - c (rational finite points)."""
        if self.poly is None or self.poly.degree != 1:
            raise PointError("not a finite rational point")
        return self.poly.field.neg(self.poly.constant())

    def __eq__(self, other):
        return isinstance(other, ClosedPoint) and self.poly == other.poly

    def __hash__(self):
        return hash(("pt", self.poly))

    def to_str(self):
        return "infinity" if self.poly is None else self.poly.to_str("t")

    def __repr__(self):
        return f"ClosedPoint({self.to_str()})"


def _gfp_irreducible(q: Poly) -> bool:
    """Rabin's test over GF(p)."""
    p = q.field.p
    n = q.degree
    x = Poly.x(q.field)
    if x.powmod(p ** n, q) != x % q:
        return False
    primes = set()
    m = n
    f = 2
    while f * f <= m:
        while m % f == 0:
            primes.add(f)
            m //= f
        f += 1
    if m > 1:
        primes.add(m)
    for r in primes:
        h = x.powmod(p ** (n // r), q) - (x % q)
        if poly_gcd(h, q).degree > 0:
            return False
    return True


def _rational_root(q: Poly):
    """A rational root of an integer-scaled polynomial over Q, or None."""
    from math import lcm

    mult = lcm(*[c.denominator for c in q.coeffs.values()])
    ints = {e: int(c * mult) for e, c in q.coeffs.items()}
    a0 = ints.get(0, 0)
    an = ints[q.degree]
    if a0 == 0:
        return Fraction(0)

    def divisors(m):
        m = abs(m)
        out = []
        d = 1
        while d * d <= m:
            if m % d == 0:
                out.extend([d, m // d])
            d += 1
        return sorted(set(out))

    for num in divisors(a0):
        for den in divisors(an):
            for sign in (1, -1):
                r = Fraction(sign * num, den)
                if q.evaluate(r) == 0:
                    return r
    return None


def point_validate(q: Poly, policy: str = "strict") -> ClosedPoint:
    """Validate a monic polynomial as a closed point of the affine line.

    strict proves irreducibility (GF(p) always; Q up to degree 3) or raises;
    trusted runs partial checks and marks the point as trusted.
    """
    if q.degree < 1:
        raise PointError("a closed point needs degree >= 1")
    if not q.is_monic():
        raise PointError("point polynomial must be monic")
    field = q.field
    if q.degree == 1:
        return ClosedPoint(q)
    if policy == "strict":
        if isinstance(field, PrimeField):
            if not _gfp_irreducible(q):
                raise PointError(f"{q.to_str()} is reducible over {field!r}")
            return ClosedPoint(q)
        if isinstance(field, Rationals):
            if q.degree > 3:
                raise PointError(
                    "strict irreducibility over Q is undecidable here beyond degree 3")
            root = _rational_root(q)
            if root is not None:
                raise PointError(
                    f"{q.to_str()} has the rational root {root}")
            return ClosedPoint(q)
        raise PointError(
            f"strict irreducibility is undecidable over {field!r}; use trusted")
    if policy != "trusted":
        raise PointError(f"unknown validation policy {policy!r}")
    # partial checks: separable part squarefree, no small roots
    prof = _insep_split(q)
    qt = prof[3]
    if qt.degree > 0 and poly_gcd(qt, qt.derivative()).degree > 0 \
            and not qt.derivative().is_zero():
        raise PointError(f"{q.to_str()} has a repeated factor")
    for cand in _small_candidates(field):
        if field.is_zero(q.evaluate(cand)):
            raise PointError(f"{q.to_str()} has a small root")
    return ClosedPoint(q, trusted=True)


def _small_candidates(field):
    if isinstance(field, Rationals):
        return [Fraction(c) for c in range(-3, 4)]
    if isinstance(field, PrimeField):
        return list(range(field.p))
    if isinstance(field, FractionField):
        inner = field.inner
        consts = getattr(inner, "p", None)
        vals = []
        rng = range(consts) if consts else range(-2, 3)
        for c in rng:
            vals.append(field.from_int(c))
        if consts:
            gen = field.generator()
            for c in rng:
                vals.append(field.add(gen, field.from_int(c)))
        return vals
    return []


@dataclass(frozen=True)
class InsepProfile:
    """q(t) = q_tilde(t^(p^level)); epsilon = p^level, s = deg q_tilde."""

    level: int
    epsilon: int
    s: int
    q_tilde: Poly


def _insep_split(q: Poly):
    p = q.field.char_exponent
    level = 0
    qt = q
    if p > 1:
        while True:
            if all(e % p == 0 for e in qt.coeffs):
                qt = qt.regroup(p)
                level += 1
            else:
                break
    return level, p ** level, qt.degree, qt


def insep_profile(y: ClosedPoint) -> InsepProfile:
    """Maximal extraction of p-power exponents from the point polynomial."""
    if y.is_infinity:
        raise PointError("inseparable profile is for finite points")
    level, eps, s, qt = _insep_split(y.poly)
    if qt.derivative().is_zero() and qt.degree > 0:
        raise PointError("separable part still has zero derivative")
    return InsepProfile(level, eps, s, qt)


class QDivisor:
    """Finite formal sum of closed points with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for y, c in coeffs.items():
                c = Fraction(c)
                if c != 0:
                    self.coeffs[y] = c

    def coeff(self, y) -> Fraction:
        return self.coeffs.get(y, Fraction(0))

    def support(self):
        return list(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for y, c in other.coeffs.items():
            out[y] = out.get(y, Fraction(0)) + c
        return QDivisor(out)

    def __neg__(self):
        return QDivisor({y: -c for y, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return QDivisor({y: c * a for y, a in self.coeffs.items()})

    def floor(self) -> "QDivisor":
        return QDivisor({y: Fraction(floor(c)) for y, c in self.coeffs.items()})

    def fractional(self) -> "QDivisor":
        return self - self.floor()

    def degree(self) -> Fraction:
        return sum((c * y.degree for y, c in self.coeffs.items()), Fraction(0))

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def __eq__(self, other):
        return isinstance(other, QDivisor) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(((y, c) for y, c in self.coeffs.items()),
                                 key=lambda yc: yc[0].to_str())))

    def to_str(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for y in sorted(self.coeffs, key=lambda y: (y.is_infinity, y.to_str())):
            c = self.coeffs[y]
            parts.append(f"{c}*[{y.to_str()}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"QDivisor({self.to_str()})"


def divisor_floor_deg(e: QDivisor):
    """Pointwise floor together with the weighted degree of the floor."""
    fl = e.floor()
    return fl, fl.degree()


def principal_divisor(f: FactoredRatFunc, curve: str,
                      policy: str = "trusted") -> QDivisor:
    """div(f) on A1 or P1 for a factored rational function.

    On P1 the point at infinity balances the degree to zero.
    """
    if f.is_zero():
        raise FieldError("the zero function has no divisor")
    out = {}
    total = 0
    for poly, exp in f.factors:
        y = point_validate(poly, policy)
        out[y] = out.get(y, Fraction(0)) + exp
        total += exp * poly.degree
    if curve == P1 and total != 0:
        inf = ClosedPoint.infinity()
        out[inf] = out.get(inf, Fraction(0)) - total
    return QDivisor(out)


@dataclass(frozen=True)
class ModuleDescription:
    """H^0 of a rounded divisor: a free k[t]-module generator on A1, or a
    finite k-basis {generator * t^j : 0 <= j <= degree_bound} on P1."""

    curve: str
    generator: FactoredRatFunc
    degree_bound: int | None = None  # P1 only; None means A1 (free module)

    @property
    def is_empty(self) -> bool:
        return self.curve == P1 and self.degree_bound < 0

    def basis(self):
        if self.curve != P1:
            raise FieldError("finite basis only exists on P1")
        field = self.generator.field
        out = []
        for j in range(self.degree_bound + 1):
            tj = FactoredRatFunc(field, field.one(), [(Poly.x(field), j)])
            out.append(self.generator * tj)
        return out

    @property
    def dimension(self) -> int:
        if self.curve != P1:
            raise FieldError("dimension only defined on P1")
        return max(0, self.degree_bound + 1)


def h0_generators(e: QDivisor, curve: str, field) -> ModuleDescription:
    """Generators of {f : div(f) + floor(e) >= 0}.

    On A1: the free k[t]-module generator prod q_y^(-floor a_y).  On P1 a
    finite basis as described on :class:`ModuleDescription`.
    """
    fl = e.floor()
    factors = []
    for y, c in fl.coeffs.items():
        if y.is_infinity:
            if curve == A1:
                raise PointError("infinity is not a point of the affine line")
            continue
        factors.append((y.poly, -int(c)))
    gen = FactoredRatFunc(field, field.one(), factors)
    if curve == A1:
        return ModuleDescription(A1, gen)
    return ModuleDescription(P1, gen, degree_bound=int(fl.degree()))
