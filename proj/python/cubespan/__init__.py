"""Lattice points of rational lattices in the unit cube, plus the character
and Dirichlet-character checks that go with them.

Lattices are given as ``n`` and a list of generators whose entries are
rationals written as ``"p/q"`` strings or integers; simplices as a list of
integer vertices.
"""

import json
from fractions import Fraction

from . import _core
from ._core import ResourceLimitError, basis_count, b1, gauss_sums, indicator_independence, odd_span

__all__ = [
    "ResourceLimitError",
    "analyze",
    "b1",
    "basis_count",
    "cube_points",
    "gauss_sums",
    "h_star",
    "indicator_independence",
    "invariant_factors",
    "odd_span",
    "sebo",
    "verify",
]


def _lattice(n, generators):
    gens = [[x if isinstance(x, int) else str(x) for x in g] for g in generators]
    return json.dumps({"n": n, "generators": gens})


def analyze(n, generators, max_points=_core.DEFAULT_POINT_CAP):
    """Span report as a dict (same schema as ``cubespan analyze --json``)."""
    return json.loads(_core.analyze(_lattice(n, generators), max_points))


def cube_points(n, generators, max_points=_core.DEFAULT_POINT_CAP):
    """Lattice points in [0,1)^n as tuples of Fractions."""
    pts = _core.cube_points(_lattice(n, generators), max_points)
    return [tuple(Fraction(x) for x in p) for p in pts]


def invariant_factors(n, generators):
    return _core.invariant_factors(_lattice(n, generators))


def sebo(n, generators):
    """(holds, summary), e.g. (True, "holds; sigma = (1 2)(3 4)")."""
    return _core.sebo(_lattice(n, generators))


def h_star(vertices):
    return _core.h_star(json.dumps({"vertices": vertices}))


def verify(suite, **bounds):
    """Run a verification suite and return its report as a dict."""
    runners = {
        "chars": _core.verify_chars,
        "dirichlet": _core.verify_dirichlet,
        "lattice": _core.verify_lattice,
    }
    if suite not in runners:
        raise ValueError(f"unknown suite {suite!r}")
    return json.loads(runners[suite](**bounds))
