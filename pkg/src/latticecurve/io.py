"""Reading polygons, fans and trigonal models from text.

Accepted polygon forms:

* JSON: ``[[0, 0], [4, 2], [2, 4]]`` or ``{"vertices": [[0, 0], ...]}``
* plain text: pairs separated by whitespace, commas or semicolons,
  e.g. ``"0,0 4,2 2,4"`` or one ``"z w"`` pair per line; ``#`` starts a comment

A fan is ``{"rays": [[x, y], ...], "coeffs": [n, ...]}`` with ``coeffs``
optional.  A trigonal model is ``{"case": "i", "m": 1, ...}``.
"""

from __future__ import annotations

import json
import os
import re
import sys
from operator import index

from .errors import ParseError
from .polygon import LatticePolygon, make_polygon

__all__ = [
    "read_text",
    "parse_points",
    "parse_polygon",
    "parse_fan",
    "parse_model",
    "polygon_to_json",
    "looks_like_fan",
]


def read_text(src: str) -> str:
    """Contents of a file path, stdin for ``"-"``, otherwise ``src`` itself as inline data."""
    if src == "-":
        return sys.stdin.read()
    if os.path.isfile(src):
        try:
            with open(src) as fh:
                return fh.read()
        except OSError as e:
            raise ParseError(f"cannot read {src!r}: {e.strerror}") from e
    if src.strip()[:1] in tuple("[{(-0123456789"):
        return src
    raise ParseError(f"{src!r} is neither a readable file nor inline data")


def _int(v, what):
    if isinstance(v, bool):
        raise ParseError(f"{what}: expected an integer, got {v!r}")
    try:
        return index(v)
    except TypeError:
        if isinstance(v, float) and v.is_integer():
            return int(v)
        raise ParseError(f"{what}: expected an integer, got {v!r}") from None


def _pairs(obj, what) -> list:
    if not isinstance(obj, (list, tuple)) or not obj:
        raise ParseError(f"{what}: expected a non-empty list of [x, y] pairs")
    out = []
    for i, p in enumerate(obj):
        if not isinstance(p, (list, tuple)) or len(p) != 2:
            raise ParseError(f"{what}[{i}]: expected a pair, got {p!r}")
        out.append((_int(p[0], f"{what}[{i}][0]"), _int(p[1], f"{what}[{i}][1]")))
    return out


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return None


def parse_points(text: str) -> list:
    obj = _load_json(text)
    if obj is not None:
        if isinstance(obj, dict):
            if "vertices" not in obj:
                raise ParseError("JSON object has no 'vertices' field")
            obj = obj["vertices"]
        return _pairs(obj, "vertices")
    text = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    nums = re.split(r"[\s,;()\[\]]+", text.strip())
    nums = [t for t in nums if t]
    if not nums or len(nums) % 2:
        raise ParseError("expected an even number of integers (z w pairs)")
    try:
        vals = [int(t) for t in nums]
    except ValueError as e:
        raise ParseError(f"not an integer: {e}") from None
    return list(zip(vals[0::2], vals[1::2]))


def parse_polygon(text: str) -> LatticePolygon:
    return make_polygon(parse_points(text))


def looks_like_fan(text: str) -> bool:
    obj = _load_json(text)
    return isinstance(obj, dict) and "rays" in obj


def parse_fan(text: str):
    """Return ``(rays, coeffs or None)`` from fan JSON."""
    obj = _load_json(text)
    if not isinstance(obj, dict) or "rays" not in obj:
        raise ParseError("fan input must be a JSON object with a 'rays' field")
    rays = _pairs(obj["rays"], "rays")
    coeffs = obj.get("coeffs")
    if coeffs is not None:
        if not isinstance(coeffs, list):
            raise ParseError("'coeffs' must be a list of integers")
        coeffs = [_int(c, f"coeffs[{i}]") for i, c in enumerate(coeffs)]
        if len(coeffs) != len(rays):
            raise ParseError(f"{len(coeffs)} coeffs for {len(rays)} rays")
    return rays, coeffs


def parse_model(text: str) -> dict:
    obj = _load_json(text)
    if not isinstance(obj, dict):
        raise ParseError("model input must be a JSON object")
    if "case" not in obj or "m" not in obj:
        raise ParseError("model needs 'case' and 'm'")
    return obj


def polygon_to_json(P: LatticePolygon) -> list:
    return [list(v) for v in P.vertices]
