"""Scenario files: a JSON description of a field, a polyhedral divisor and
optional coloring/family/bounds data, plus the builtin worked examples."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dfield
from fractions import Fraction

from .classifier import Coloring, CoherentFamily
from .curves import A1, P1, ClosedPoint, point_validate
from .engine import GradedElement
from .fields import PrimeField, Rationals
from .geometry import Cone, Polyhedron
from .polynomials import (FactoredRatFunc, ParseError, lambda_field,
                          parse_factored, parse_poly, parse_scalar)
from .tvariety import PolyhedralDivisor


class ScenarioError(ValueError):
    pass


DEFAULT_BOUNDS = {
    "weight_box": 6,
    "max_order": 12,
    "e_box": 1,
    "s_max": 2,
    "lambda_sample": ["1"],
    "window": 4,
}


def parse_field(spec) -> object:
    """Field descriptor: {"kind": "Q"} | {"kind": "Fp", "p": 2} |
    {"kind": "Fp(l)", "p": 2}; also accepts the short strings used by the
    --field flag, e.g. "Q", "F2", "F3(l)"."""
    if isinstance(spec, str):
        s = spec.strip()
        if s in ("Q", "QQ"):
            return Rationals()
        if s.startswith("F"):
            if s.endswith("(l)"):
                return lambda_field(int(s[1:-3]))
            return PrimeField(int(s[1:]))
        raise ScenarioError(f"unknown field {spec!r}")
    kind = spec.get("kind")
    if kind == "Q":
        return Rationals()
    if kind == "Fp":
        return PrimeField(int(spec["p"]))
    if kind == "Fp(l)":
        return lambda_field(int(spec["p"]))
    raise ScenarioError(f"unknown field kind {kind!r}")


def field_descriptor(field) -> dict:
    if isinstance(field, Rationals):
        return {"kind": "Q"}
    if isinstance(field, PrimeField):
        return {"kind": "Fp", "p": field.p}
    return {"kind": "Fp(l)", "p": field.char_exponent}


def _frac(x) -> Fraction:
    try:
        return Fraction(str(x))
    except (ValueError, ZeroDivisionError) as exc:
        raise ScenarioError(f"bad rational {x!r}: {exc}")


def _vec(xs):
    return tuple(_frac(x) for x in xs)


def _point(text, field, policy):
    if text == "infinity":
        return ClosedPoint.infinity()
    try:
        poly = parse_poly(text, field)
    except ParseError as exc:
        raise ScenarioError(f"bad point {text!r}: {exc}")
    return point_validate(poly, policy)


@dataclass
class Scenario:
    name: str
    field: object
    divisor: PolyhedralDivisor
    coloring: Coloring | None
    family: CoherentFamily | None
    bounds: dict
    elements: list
    raw: dict = dfield(repr=False, default_factory=dict)


def parse_scenario(source, name: str = "scenario",
                   field_override=None, policy: str = "strict") -> Scenario:
    if isinstance(source, str):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ScenarioError(
                f"syntax error at line {exc.lineno}, column {exc.colno}: "
                f"{exc.msg}")
    else:
        data = source
    if not isinstance(data, dict):
        raise ScenarioError("a scenario must be a JSON object")
    field = field_override if field_override is not None \
        else parse_field(data.get("field", {"kind": "Q"}))
    rank = int(data.get("rank", 1))
    curve = data.get("curve", A1)
    if curve not in (A1, P1):
        raise ScenarioError(f"unknown curve {curve!r}")
    tail = Cone.from_generators([_vec(r) for r in data.get("tail_rays", [])],
                                rank)
    support = {}
    for entry in data.get("support", []):
        y = _point(entry["point"], field, policy)
        verts = [_vec(v) for v in entry.get("vertices", [])]
        if not verts:
            raise ScenarioError(
                f"support entry at {entry['point']!r} has no vertices")
        if "rays" in entry:
            extra = Cone.from_generators([_vec(r) for r in entry["rays"]],
                                         rank)
            if extra != tail:
                raise ScenarioError(
                    f"support entry at {entry['point']!r} declares rays "
                    "that do not generate the tail cone")
        support[y] = Polyhedron.from_points(verts, tail)
    divisor = PolyhedralDivisor(field, curve, tail, support)

    coloring = None
    cdata = data.get("coloring")
    if cdata is not None:
        y0 = _point(cdata["y0"], field, policy)
        y_inf = None
        if cdata.get("y_infinity") is not None:
            y_inf = _point(cdata["y_infinity"], field, policy)
        vertices = {}
        for ptext, v in cdata.get("vertices", {}).items():
            vertices[_point(ptext, field, policy)] = _vec(v)
        coloring = Coloring(divisor, vertices, y0, y_inf)

    family = None
    fdata = data.get("family")
    if fdata is not None:
        if coloring is None:
            raise ScenarioError("a family needs a coloring")
        try:
            lam = tuple(parse_scalar(str(x), field)
                        for x in fdata.get("lambda", []))
        except ParseError as exc:
            raise ScenarioError(f"bad coefficient: {exc}")
        family = CoherentFamily(coloring,
                                tuple(int(x) for x in fdata["e"]),
                                tuple(int(x) for x in fdata["s"]),
                                lam)

    bounds = dict(DEFAULT_BOUNDS)
    bounds.update(data.get("bounds", {}))

    elements = []
    for entry in data.get("elements", []):
        try:
            coeff = parse_factored(entry["coeff"], field)
        except ParseError as exc:
            raise ScenarioError(f"bad coefficient {entry['coeff']!r}: {exc}")
        elements.append(GradedElement.term(
            field, tuple(int(x) for x in entry["weight"]), coeff))

    return Scenario(name, field, divisor, coloring, family, bounds,
                    elements, data)


def serialize_scenario(sc: Scenario) -> dict:
    out = {
        "field": field_descriptor(sc.field),
        "rank": sc.divisor.rank,
        "curve": sc.divisor.curve,
        "tail_rays": [[str(x) for x in r] for r in sc.divisor.tail.rays],
        "support": [
            {"point": y.to_str(),
             "vertices": [[str(x) for x in v]
                          for v in sc.divisor.support[y].vertices]}
            for y in sc.divisor.support_points()],
    }
    if sc.coloring is not None:
        cdata = {
            "y0": sc.coloring.y0.to_str(),
            "vertices": {y.to_str(): [str(x) for x in v]
                         for y, v in sorted(sc.coloring.vertices.items(),
                                            key=lambda yv: yv[0].to_str())},
        }
        if sc.coloring.y_infinity is not None:
            cdata["y_infinity"] = sc.coloring.y_infinity.to_str()
        out["coloring"] = cdata
    if sc.family is not None:
        field = sc.field
        out["family"] = {
            "e": list(sc.family.e),
            "s": list(sc.family.s),
            "lambda": [field.to_str(x) for x in sc.family.lam],
        }
    out["bounds"] = dict(sc.bounds)
    if sc.elements:
        entries = []
        for x in sc.elements:
            for w in x.weights():
                rf = x.terms[w]
                coeff = rf.num.to_str() if rf.den.is_one() \
                    else f"({rf.num.to_str()})/({rf.den.to_str()})"
                entries.append({"weight": list(w), "coeff": coeff})
        out["elements"] = entries
    return out


# -- builtin examples -------------------------------------------------------

_W25_BASE = {
    "rank": 1,
    "curve": "A1",
    "tail_rays": [],
    "coloring": {"y0": "t", "vertices": {"t": ["1/5"]}},
    "family": {"e": [1], "s": [2], "lambda": ["1"]},
    "bounds": {"weight_box": 10, "max_order": 12, "e_box": 1, "s_max": 2,
               "lambda_sample": ["1"], "window": 4},
}


def _w25(field, second_point):
    data = json.loads(json.dumps(_W25_BASE))
    data["field"] = field
    data["support"] = [
        {"point": "t", "vertices": [["1/5"]]},
        {"point": second_point, "vertices": [["0"], ["1/5"]]},
    ]
    data["coloring"]["vertices"][second_point] = ["0"]
    data["elements"] = [{"weight": [-5], "coeff": f"t*({second_point})"}]
    return data


BUILTIN_EXAMPLES = {
    # hyperbolic surface with an action that exists only over an imperfect
    # field: second support point t^2 + l has inseparable degree 2
    "w25-imperfect": _w25({"kind": "Fp(l)", "p": 2}, "t^2+l"),
    # the same divisor shape with a rational second point: no action
    "w25-prime": _w25({"kind": "Fp", "p": 2}, "t+1"),
    # rank-2 example where the action exists only in characteristic 2
    # because of ramification (d = p = 2)
    "char2-ramified": {
        "field": {"kind": "Fp", "p": 2},
        "rank": 2,
        "curve": "A1",
        "tail_rays": [[1, 0], [0, 1]],
        "support": [
            {"point": "t", "vertices": [["1/2", "0"]]},
            {"point": "t+1", "vertices": [["1/2", "0"], ["0", "1"]]},
        ],
        "coloring": {"y0": "t",
                     "vertices": {"t": ["1/2", "0"], "t+1": ["0", "1"]}},
        "family": {"e": [1, 0], "s": [0], "lambda": ["1"]},
        "bounds": {"weight_box": 4, "max_order": 8, "e_box": 1, "s_max": 1,
                   "lambda_sample": ["1"], "window": 3},
        "elements": [{"weight": [0, 1], "coeff": "1"},
                     {"weight": [1, 1], "coeff": "1"}],
    },
    # plain toric data: the root operator on the quarter plane
    "toric-demo": {
        "field": {"kind": "Q"},
        "rank": 2,
        "curve": "A1",
        "tail_rays": [[1, 0], [0, 1]],
        "support": [],
        "family_root": [-1, 2],
        "bounds": {"weight_box": 5, "max_order": 8},
    },
}


def builtin_examples():
    return dict(BUILTIN_EXAMPLES)


def load_builtin(name: str, field_override=None) -> Scenario:
    if name not in BUILTIN_EXAMPLES:
        raise ScenarioError(
            f"unknown example {name!r}; available: "
            + ", ".join(sorted(BUILTIN_EXAMPLES)))
    data = BUILTIN_EXAMPLES[name]
    policy = "trusted" if name == "w25-imperfect" else "strict"
    return parse_scenario(data, name=name, field_override=field_override,
                          policy=policy)
