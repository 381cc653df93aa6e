"""JSON descriptions of chains, curves and 4x4 matrices.

Ternions are written as ``[c0, c1, c2]`` (numbers or ``"p/q"`` strings) or in
text form ``"c0 + c1 e + c2 e2"``. A chain is either::

    {"matrix": [[a, b], [c, d]]}
    {"kind": "parabola", "a02": ..., "a12": ..., "a03": ..., "a13": ..., "a33": ...}

a polynomial curve in L is ``{"curve": [k0, k1, ...]}``, and a collineation
is a 4x4 array of rationals, optionally wrapped as ``{"matrix": [...]}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .bridge import PolyCurve
from .cubics import Collineation4
from .errors import LaguerreError
from .projline import Chain, Matrix2L, NormalForm, chain_from_normal_form
from .ternion import Ternion


class MalformedInput(LaguerreError):
    pass


def load(path) -> object:
    with open(Path(path), encoding="utf-8") as fh:
        return json.load(fh)


def chain_from_json(data) -> Chain:
    if not isinstance(data, dict):
        raise MalformedInput("a chain description must be a JSON object")
    try:
        if "matrix" in data:
            rows = data["matrix"]
            return Chain(Matrix2L.from_rows([[Ternion.from_json(x) for x in row] for row in rows]))
        if "kind" in data:
            return chain_from_normal_form(NormalForm.from_json(data))
    except (TypeError, ValueError, KeyError) as err:
        if isinstance(err, LaguerreError):
            raise
        raise MalformedInput(f"bad chain description: {err}") from err
    raise MalformedInput('a chain needs a "matrix" or a "kind" entry')


def chain_to_json(chain: Chain) -> dict:
    return {"matrix": chain.matrix.to_json(), "normal_form": chain.normal_form.to_json()}


def curve_from_json(data) -> PolyCurve:
    """A polynomial curve; chain descriptions are accepted and give their proper part."""
    if isinstance(data, dict) and "curve" in data:
        try:
            return PolyCurve(tuple(Ternion.from_json(k) for k in data["curve"]))
        except (TypeError, ValueError) as err:
            raise MalformedInput(f"bad curve: {err}") from err
    return PolyCurve.from_normal_form(chain_from_json(data).normal_form)


def matrix_from_json(data) -> Collineation4:
    if isinstance(data, dict):
        if "matrix" not in data:
            raise MalformedInput('expected a 4x4 array or {"matrix": ...}')
        data = data["matrix"]
    try:
        return Collineation4(data)
    except (TypeError, ValueError) as err:
        if isinstance(err, LaguerreError):
            raise
        raise MalformedInput(f"bad 4x4 matrix: {err}") from err
