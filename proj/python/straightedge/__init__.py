"""Exact straightedge test for ten points on a plane cubic.

Points are triples of rationals given as int, Fraction or str ("3/4"). Results come back
as Fractions or canonical integer triples.
"""

from fractions import Fraction
import json

from . import _core
from ._core import BracketError, ConstructionDegenerateError, GeometryError, InputError, TowerError

__all__ = [
    "BracketError",
    "ConstructionDegenerateError",
    "GeometryError",
    "InputError",
    "TowerError",
    "bracket",
    "check_ten_on_cubic",
    "cross_ratio",
    "cubic_det",
    "example_points",
    "generate_instance",
    "join",
    "meet",
    "render_svg",
    "verify_certificate",
]


def _coords(p):
    if isinstance(p, str):
        return _core.parse_point(p)
    if len(p) == 2:
        p = (*p, 1)
    return [str(Fraction(v)) if not isinstance(v, str) else v for v in p]


def _triple(c):
    return tuple(Fraction(v) for v in c)


def _points(points):
    return [_coords(p) for p in points]


def canonical(p):
    return _triple(_core.canonical_point(_coords(p)))


def join(p, q):
    return _triple(_core.join(_coords(p), _coords(q)))


def meet(l, m):
    return _triple(_core.meet(_coords(l), _coords(m)))


def bracket(a, b, c):
    return Fraction(_core.bracket(_coords(a), _coords(b), _coords(c)))


def cross_ratio(a, b, c, d, centre):
    return Fraction(_core.cross_ratio(*(_coords(p) for p in (a, b, c, d, centre))))


def cubic_det(points):
    return Fraction(_core.cubic_det(_points(points)))


def example_points():
    return [_triple(c) for c in _core.example_points()]


def generate_instance(on_cubic, seed):
    return [_triple(c) for c in _core.generate_instance(on_cubic, seed)]


def check_ten_on_cubic(points, max_schemes=64, seed=0):
    """Verdict dict: verdict, reason, schemes_tried, used_fallback, log, trace (parsed JSON or None)."""
    result = _core.check_ten_on_cubic(_points(points), max_schemes, seed)
    if result["trace"] is not None:
        result["trace"] = json.loads(result["trace"])
    return result


def verify_certificate(trace):
    return _core.verify_certificate(json.dumps(trace))


def render_svg(trace):
    return _core.render_svg(json.dumps(trace))
