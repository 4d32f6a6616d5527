"""JSON formats for fixed point data and Pontryagin numbers.

Fixed point data::

    {"dim": 4, "points": [{"sign": 1, "weights": [1, 2]}, ...]}

Pontryagin numbers, rationals as strings so no reader rounds them::

    {"dim": 8, "numbers": {"1,1": "25", "2": "10"}}
"""
import json
import sys
from fractions import Fraction

from .equivariant import FixedPointData, FixedPointDatum
from .genus import PontryaginData


class MalformedInput(ValueError):
    pass


def load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInput("cannot read %s: %s" % (path, exc)) from exc


def data_to_json(d: FixedPointData) -> dict:
    return {"dim": d.dim, "points": [{"sign": p.sign, "weights": list(p.weights)} for p in d.points]}


def _int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise MalformedInput("%s must be an integer, got %r" % (what, x))
    return x


def data_from_json(obj) -> FixedPointData:
    if not isinstance(obj, dict) or set(obj) != {"dim", "points"}:
        raise MalformedInput("fixed point data needs exactly the keys 'dim' and 'points'")
    dim = _int(obj["dim"], "dim")
    if not isinstance(obj["points"], list):
        raise MalformedInput("'points' must be a list")
    points = []
    for p in obj["points"]:
        if not isinstance(p, dict) or set(p) != {"sign", "weights"} or not isinstance(p["weights"], list):
            raise MalformedInput("each point needs 'sign' and a 'weights' list: %r" % (p,))
        weights = tuple(_int(m, "weight") for m in p["weights"])
        try:
            points.append(FixedPointDatum(_int(p["sign"], "sign"), weights))
        except ValueError as exc:
            raise MalformedInput(str(exc)) from exc
    try:
        return FixedPointData(dim, tuple(points))
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc


def pontryagin_to_json(data: PontryaginData) -> dict:
    return {"dim": data.dim,
            "numbers": {",".join(map(str, p)): str(v) for p, v in sorted(data.numbers.items())}}


def pontryagin_from_json(obj) -> PontryaginData:
    if not isinstance(obj, dict) or set(obj) != {"dim", "numbers"} or not isinstance(obj["numbers"], dict):
        raise MalformedInput("Pontryagin data needs 'dim' and a 'numbers' object")
    dim = _int(obj["dim"], "dim")
    numbers = {}
    for key, value in obj["numbers"].items():
        if isinstance(value, bool) or not isinstance(value, (str, int)):
            raise MalformedInput("Pontryagin number for %r must be a 'p/q' string" % key)
        try:
            numbers[key] = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInput("bad rational %r" % (value,)) from exc
    try:
        return PontryaginData(dim, numbers)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc
