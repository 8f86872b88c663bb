"""Exact tools for the centroid Banach-Mazur distance.

Polygons are sequences of (x, y) pairs whose coordinates may be ints,
fractions.Fraction or "num/den" strings. Exact results come back as
Fraction; reports come back as dicts.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import _core

__version__ = _core.__version__

Number = Union[int, Fraction, str]
Polygon = Sequence[Sequence[Number]]


def _q(v: Number) -> str:
    if isinstance(v, bool) or not isinstance(v, (int, Fraction, str)):
        raise TypeError(f"exact coordinate expected (int, Fraction or str), got {type(v).__name__}")
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}"


def _vertices(poly: Polygon) -> str:
    return json.dumps([[_q(x), _q(y)] for x, y in poly])


def _point(p: Iterable[Number]) -> str:
    x, y = p
    return json.dumps([_q(x), _q(y)])


def fraction(s: str) -> Fraction:
    """Parse a "num/den" string."""
    return Fraction(s)


def certify(grid: int = 64, tamper_case1: bool = False) -> dict:
    """Proof ledger for delta = 5/2 as a dict."""
    return json.loads(_core.certify(grid, tamper_case1))


def replay(document: Union[dict, str, os.PathLike]) -> dict:
    """Replay a ledger or certificate given as a dict or a file path."""
    if isinstance(document, dict):
        text = json.dumps(document)
    else:
        with open(document, encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(_core.replay(text))


def gauge_factor(body: Polygon, against: Polygon, center: Iterable[Number] = (0, 0)) -> Fraction:
    return Fraction(_core.gauge_factor(_vertices(body), _vertices(against), _point(center)))


def polygon_centroid(poly: Polygon) -> tuple[Fraction, Fraction]:
    x, y = json.loads(_core.polygon_centroid(_vertices(poly)))
    return Fraction(x), Fraction(y)


def estimate_distance(c: Polygon, d: Polygon, **search) -> dict:
    """Upper-bound estimate; keyword args: steps, rounds, tolerance, starts."""
    return json.loads(_core.estimate_distance(_vertices(c), _vertices(d), **search))


def grid_oracle(steps: int) -> dict:
    return json.loads(_core.grid_oracle(steps))


def claim_check(triangle: Polygon) -> dict:
    return json.loads(_core.claim_check(_vertices(triangle)))


def claim_scan(body: Polygon, per_edge: int = 4) -> dict:
    return json.loads(_core.claim_scan(_vertices(body), per_edge))


def conjecture_scan(body: Polygon, per_edge: int = 4) -> dict:
    return json.loads(_core.conjecture_scan(_vertices(body), per_edge))


def cube_simplex_check() -> dict:
    return json.loads(_core.cube_simplex_check())


def emit_figures(outdir: Union[str, os.PathLike]) -> list[str]:
    return _core.emit_figures(os.fspath(outdir))


__all__ = [
    "certify",
    "replay",
    "gauge_factor",
    "polygon_centroid",
    "estimate_distance",
    "grid_oracle",
    "claim_check",
    "claim_scan",
    "conjecture_scan",
    "cube_simplex_check",
    "emit_figures",
    "fraction",
]
