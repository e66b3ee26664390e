"""The additive-group operator built from a coherent family: truncated
series substitution in a cyclic-cover variable, descent back to k(t), and
verification of the operator axioms, stability, horizontality and kernel
structure on finite windows."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .binomials import binom_in_field
from .classifier import (Coloring, CoherentFamily, associated_cones,
                         coherent_validate, demazure_root_check)
from .curves import A1, P1, ClosedPoint
from .fields import FieldError
from .geometry import (Cone, dot, in_lattice, lattice_basis, lattice_box, vec,
                       vadd, vscale)
from .polynomials import (FactoredRatFunc, FractionField, Poly, RatFunc,
                          TruncatedSeries, descend_power, substitute_poly)
from .reports import Report
from .tvariety import PolyhedralDivisor


class EngineError(ValueError):
    pass


# -- graded elements --------------------------------------------------------

class GradedElement:
    """Finite sum of terms f(t) * chi^m with f in k(t)."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms: dict):
        self.field = field
        self.terms = {}
        for w, f in terms.items():
            if isinstance(f, FactoredRatFunc):
                f = f.expand()
            elif isinstance(f, Poly):
                f = RatFunc.from_poly(f)
            if not f.is_zero():
                self.terms[tuple(w)] = f

    @classmethod
    def term(cls, field, weight, coeff):
        return cls(field, {tuple(weight): coeff})

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    def is_zero(self) -> bool:
        return not self.terms

    def weights(self):
        return sorted(self.terms)

    def coeff(self, w):
        return self.terms.get(tuple(w), RatFunc.zero(self.field))

    def __add__(self, other):
        out = dict(self.terms)
        for w, f in other.terms.items():
            out[w] = out[w] + f if w in out else f
        return GradedElement(self.field, out)

    def __neg__(self):
        return GradedElement(self.field, {w: -f for w, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for w1, f1 in self.terms.items():
            for w2, f2 in other.terms.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                v = f1 * f2
                out[w] = out[w] + v if w in out else v
        return GradedElement(self.field, out)

    def scale(self, c):
        return GradedElement(self.field,
                             {w: f.scale(c) for w, f in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, GradedElement) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(),
                                 key=lambda wf: wf[0])))

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            parts.append(f"({self.terms[w].to_str()})*chi^{w}")
        return " + ".join(parts)

    def __repr__(self):
        return f"GradedElement({self.to_str()})"


@dataclass
class ApplicationResult:
    orders: dict          # order i -> GradedElement, zero orders omitted
    max_order: int        # orders were computed for 0..max_order
    exact: bool           # True when max_order covers the nilpotency bound

    def value(self, i: int) -> GradedElement:
        return self.orders.get(i)

    def nonzero_orders(self):
        return sorted(self.orders)


# -- the operator -----------------------------------------------------------

class DthetaOperator:
    """Sequence of divided-power operators attached to a coherent family."""

    def __init__(self, theta: CoherentFamily, cones, report: Report):
        c = theta.coloring
        div = c.divisor
        self.theta = theta
        self.coloring = c
        self.divisor = div
        self.field = div.field
        self.report = report
        self.p = self.field.char_exponent
        self.cones = cones
        self.d = cones.d
        self.u = cones.u
        self.ell = cones.ell
        self.v0 = c.vertex(c.y0)
        self.y0_value = c.y0.rational_value()
        self.e = vec(theta.e)
        self.exponents = tuple(self.p ** s for s in theta.s)
        # points contributing to the xi factor: colored, finite, not y0
        self.xi_points = [
            (y, c.vertex(y)) for y in c.colored_points()
            if y != c.y0 and not y.is_infinity
            and any(x != 0 for x in c.vertex(y))]

    def nilpotency_exponent(self) -> int:
        return self.exponents[-1]

    def xi(self, m) -> FactoredRatFunc:
        """xi_m = prod q_y^{-<m, v_y>} over colored points away from y0."""
        m = vec(m)
        factors = []
        for y, vy in self.xi_points:
            a = dot(m, vy)
            if a.denominator != 1:
                raise EngineError(
                    f"pairing of {tuple(m)} with {tuple(vy)} is not integral")
            if a != 0:
                factors.append((y.poly, -int(a)))
        return FactoredRatFunc(self.field, self.field.one(), factors)

    def _term_data(self, f: RatFunc, m):
        """H(z) = (f/xi_m)(z^d + y0) * z^{d<m,v0>} and its nilpotency bound."""
        k = self.field
        m = vec(m)
        g = f / self.xi(m).expand()
        sub = Poly(k, {self.d: k.one(), 0: self.y0_value})
        h = g.compose_poly(sub)
        a = self.d * dot(m, self.v0)
        if a.denominator != 1:
            raise EngineError("non-integral twist exponent")
        h = h * RatFunc.x(k, int(a))
        bound = h.num.degree * self.nilpotency_exponent() if h.is_poly() \
            else None
        return h, bound

    def _substituted(self, h: RatFunc, order: int) -> TruncatedSeries:
        """h(z + sum lambda_j T^{p^{s_j}}) as a series in T over k(z)."""
        k = self.field
        K = FractionField(k, "z")
        coeffs = {0: RatFunc.x(k, 1)}
        for q, lam in zip(self.exponents, self.theta.lam):
            if q < order:
                coeffs[q] = RatFunc.from_poly(Poly.const(k, lam))
        base = TruncatedSeries(K, order, coeffs)

        def lift(p: Poly) -> Poly:
            return Poly(K, {e: RatFunc.from_poly(Poly.const(k, c))
                            for e, c in p.coeffs.items()})

        num = substitute_poly(lift(h.num), base)
        if h.is_poly():
            return num
        return num * substitute_poly(lift(h.den), base).inverse()

    def apply_term(self, f: RatFunc, m, max_order=None):
        """Images of one homogeneous term, as {order: (weight, coeff)}."""
        m = vec(m)
        h, bound = self._term_data(f, m)
        if max_order is None:
            if bound is None:
                raise EngineError(
                    "no nilpotency bound for a non-polynomial lift; "
                    "pass an explicit truncation order")
            max_order = bound
        series = self._substituted(h, max_order + 1)
        out = {}
        for i in range(max_order + 1):
            c_i = series.coeff(i)
            if c_i.is_zero():
                continue
            w = vadd(m, vscale(i, self.e))
            b = self.d * dot(w, self.v0)
            val = c_i * RatFunc.x(self.field, -int(b))
            try:
                descended = descend_power(val, self.d, self.y0_value)
            except FieldError as exc:
                raise EngineError(
                    f"descent failure at order {i}, weight {tuple(w)}: {exc}")
            coeff = descended * self.xi(w).expand()
            if not coeff.is_zero():
                out[i] = (tuple(int(x) for x in w), coeff)
        return out, max_order, bound is not None and max_order >= bound

    def apply(self, x: GradedElement, max_order=None) -> ApplicationResult:
        orders = {}
        exact = True
        top = 0
        for w, f in x.terms.items():
            images, reached, complete = self.apply_term(f, w, max_order)
            exact = exact and complete
            top = max(top, reached)
            for i, (w2, coeff) in images.items():
                term = GradedElement.term(self.field, w2, coeff)
                orders[i] = orders[i] + term if i in orders else term
        orders = {i: v for i, v in orders.items() if not v.is_zero()}
        return ApplicationResult(orders, top, exact)


def build_operator(theta: CoherentFamily, override: bool = False
                   ) -> DthetaOperator:
    rep = coherent_validate(theta)
    if not rep.ok and not override:
        raise EngineError("family is not coherent: "
                          + "; ".join(rep.violations))
    c = theta.coloring
    if c.divisor.curve == P1 and not c.y_infinity.is_infinity:
        raise EngineError("the operator engine expects the marked point at "
                          "infinity to be the infinite point itself")
    if c.y0.is_infinity or not c.y0.is_rational:
        raise EngineError("y0 must be a finite rational point")
    cones = associated_cones(c)
    return DthetaOperator(theta, cones, rep)


# -- verification -----------------------------------------------------------

def _result_order(res: ApplicationResult, i: int, field) -> GradedElement:
    return res.orders.get(i, GradedElement.zero(field))


def verify_axioms(op: DthetaOperator, test_set, max_order: int) -> Report:
    """Identity, homogeneity, Leibniz, iterativity and bounded vanishing on a
    finite test set and all its pairwise products."""
    rep = Report("operator axioms")
    k = op.field
    results = []
    for x in test_set:
        try:
            res = op.apply(x, max_order)
        except EngineError as exc:
            rep.fail(f"application failed on {x.to_str()}: {exc}")
            continue
        results.append((x, res))
        zero_th = _result_order(res, 0, k)
        if zero_th != x:
            rep.fail(f"order 0 is not the identity on {x.to_str()}")
        for i, val in res.orders.items():
            for w in val.weights():
                for xw in x.weights():
                    expect = vadd(vec(xw), vscale(i, op.e))
                    if len(x.terms) == 1 and vec(w) != expect:
                        rep.fail(f"order {i} weight {w} is not the input "
                                 f"weight shifted by {i}*e")
    # Leibniz on all pairs
    for ix, (x, rx) in enumerate(results):
        for y, ry in results[ix:]:
            try:
                rxy = op.apply(x * y, max_order)
            except EngineError as exc:
                rep.fail(f"application failed on a product: {exc}")
                continue
            for i in range(max_order + 1):
                acc = GradedElement.zero(k)
                for i1 in range(i + 1):
                    acc = acc + _result_order(rx, i1, k) \
                        * _result_order(ry, i - i1, k)
                if acc != _result_order(rxy, i, k):
                    rep.fail(f"product rule fails at order {i} on "
                             f"({x.to_str()})*({y.to_str()})")
                    break
    # iterativity on a small grid of orders
    pairs = [(a, b) for a in range(1, max_order + 1)
             for b in range(1, max_order + 1 - a)]
    for x, rx in results:
        for a, b in pairs:
            inner = _result_order(rx, b, k)
            if inner.is_zero():
                lhs = GradedElement.zero(k)
            else:
                try:
                    lhs = _result_order(op.apply(inner, a), a, k)
                except EngineError as exc:
                    rep.fail(f"iterate failed on {x.to_str()}: {exc}")
                    continue
            c = binom_in_field(a + b, a, k)
            rhs = _result_order(rx, a + b, k).scale(c)
            if lhs != rhs:
                rep.fail(f"iteration rule fails at ({a},{b}) on {x.to_str()}")
                break
    # vanishing beyond the per-element bound
    for x, rx in results:
        if rx.exact and rx.orders and max(rx.orders) > rx.max_order:
            rep.fail(f"nonzero image beyond the vanishing bound on "
                     f"{x.to_str()}")
    return rep


def verify_stability(op: DthetaOperator, div: PolyhedralDivisor, generators,
                     max_order=None) -> Report:
    """Every image of every generator must lie in the graded algebra."""
    rep = Report("stability")
    for g in generators:
        if not isinstance(g, GradedElement):
            g = GradedElement.term(div.field, g.weight, g.coeff)
        try:
            res = op.apply(g, max_order)
        except EngineError as exc:
            rep.fail(f"{g.to_str()}: {exc}")
            continue
        for i, val in sorted(res.orders.items()):
            if i == 0:
                continue
            for w in val.weights():
                if not div.membership(val.terms[w], w):
                    rep.fail(f"order {i} of {g.to_str()} leaves the algebra: "
                             f"({val.terms[w].to_str()})*chi^{w}")
    return rep


def default_horizontal_order(op: DthetaOperator) -> int:
    return op.nilpotency_exponent() * (op.p ** op.u) * op.d


def verify_horizontal(op: DthetaOperator, max_order=None) -> bool:
    """Does some positive-order image move the curve coordinate t?"""
    if max_order is None:
        max_order = default_horizontal_order(op)
    t = GradedElement.term(op.field,
                           tuple(0 for _ in range(op.divisor.rank)),
                           RatFunc.x(op.field, 1))
    res = op.apply(t, max_order)
    return any(i >= 1 for i in res.orders)


# -- kernel computation -----------------------------------------------------

def _field_nullspace(rows, ncols, field):
    """Right nullspace basis of a matrix with raw field entries."""
    mat = [list(r) for r in rows]
    pivots = []
    cur = 0
    for col in range(ncols):
        piv = next((i for i in range(cur, len(mat))
                    if not field.is_zero(mat[i][col])), None)
        if piv is None:
            continue
        mat[cur], mat[piv] = mat[piv], mat[cur]
        inv = field.inv(mat[cur][col])
        mat[cur] = [field.mul(inv, x) for x in mat[cur]]
        for i in range(len(mat)):
            if i != cur and not field.is_zero(mat[i][col]):
                f = mat[i][col]
                mat[i] = [field.sub(a, field.mul(f, b))
                          for a, b in zip(mat[i], mat[cur])]
        pivots.append(col)
        cur += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero()] * ncols
        v[fc] = field.one()
        for r, pc in zip(mat, pivots):
            v[pc] = field.neg(r[fc])
        basis.append(v)
    return basis


def _poly_lcm(polys, field):
    acc = Poly.one(field)
    from .polynomials import poly_gcd
    for p in polys:
        if p.is_constant():
            continue
        g = poly_gcd(acc, p)
        acc = acc.exact_div(g) * p
    return acc


@dataclass
class KernelReport:
    report: Report
    weights: list          # kernel weights in the box
    spans: dict            # weight -> RatFunc spanning the kernel piece
    lattice: list          # triangular basis of the weight lattice
    cone: Cone             # cone spanned by the kernel weights


def kernel_in_box(op: DthetaOperator, div: PolyhedralDivisor, box_bound: int,
                  window: int = 6) -> KernelReport:
    """Kernel pieces of all positive-order operators on a weight box.

    Each nonzero piece must be one-dimensional, spanned by the module
    generator with an integral evaluation, and the kernel weights must be a
    sublattice trace intersected with a cone.
    """
    if div.curve != A1:
        raise EngineError("kernel extraction works over the affine line")
    rep = Report("kernel structure")
    k = div.field
    dual = div.tail.dual()
    weights, spans = [], {}
    for m in lattice_box(div.rank, box_bound):
        if not dual.contains(m):
            continue
        fm = div.generator(m).expand()
        cands = [RatFunc.x(k, j) * fm for j in range(window + 1)]
        images = []  # per candidate: {(order, weight): RatFunc}
        for g in cands:
            out, _, _ = op.apply_term(g, m)
            images.append({(i, w): coeff for i, (w, coeff) in out.items()
                           if i >= 1})
        keys = sorted(set().union(*[im.keys() for im in images]))
        rows = []
        for key in keys:
            vals = [im.get(key, RatFunc.zero(k)) for im in images]
            den = _poly_lcm([v.den for v in vals], k)
            exps = set()
            polys = []
            for v in vals:
                pv = v.num * den.exact_div(v.den)
                polys.append(pv)
                exps.update(pv.coeffs)
            for e in sorted(exps):
                rows.append([pv.coeff(e) for pv in polys])
        null = _field_nullspace(rows, len(cands), k)
        if not null:
            continue
        if len(null) > 1:
            rep.fail(f"kernel piece at {m} has dimension {len(null)}")
            continue
        coeffs = null[0]
        phi = RatFunc.zero(k)
        for j, c in enumerate(coeffs):
            if not k.is_zero(c):
                phi = phi + cands[j].scale(c)
        weights.append(m)
        spans[m] = phi
        if any(not k.is_zero(c) for c in coeffs[1:]):
            rep.fail(f"kernel span at {m} is not the module generator: "
                     f"{phi.to_str()}")
        elif not div.eval(m).is_integral():
            rep.fail(f"kernel weight {m} has a non-integral evaluation")
    basis = lattice_basis(weights, div.rank) if weights else []
    cone = Cone.from_generators(weights, div.rank) if weights \
        else Cone.zero(div.rank)
    # semigroup shape: every box point of the lattice inside the cone must
    # be a kernel weight
    for m in lattice_box(div.rank, box_bound):
        if not dual.contains(m) or not cone.contains(m):
            continue
        if in_lattice(m, basis) and m not in weights:
            rep.fail(f"lattice point {m} in the cone is not a kernel weight")
    return KernelReport(rep, weights, spans, basis, cone)


# -- toric monomial operator ------------------------------------------------

class ToricRootOperator:
    """Monomial operator attached to a root of a cone."""

    def __init__(self, field, e, mu):
        self.field = field
        self.e = tuple(e)
        self.mu = tuple(mu)

    def apply(self, m, i: int):
        """(coefficient, weight) of the order-i image of chi^m."""
        height = dot(vec(m), self.mu)
        if height.denominator != 1:
            raise EngineError("non-integral pairing")
        coeff = binom_in_field(int(height), i, self.field)
        w = tuple(a + i * b for a, b in zip(m, self.e))
        return coeff, w


def toric_root_operator(sigma0: Cone, e, field) -> ToricRootOperator:
    e = tuple(e)
    mu = None
    for r in sigma0.rays:
        if dot(vec(e), r) == -1 and demazure_root_check(sigma0, r, e):
            mu = r
            break
    if mu is None:
        raise EngineError(f"{e} is not a root of the cone")
    return ToricRootOperator(field, e, mu)
