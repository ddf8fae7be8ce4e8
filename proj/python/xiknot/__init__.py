"""Exact linking in dihedral branched covers and the xi ribbon obstruction.

Thin wrappers over the C++ core: inputs are paths to scene/problem JSON
files, exact rationals come back as ``fractions.Fraction``.
"""

import json
from fractions import Fraction

try:
    from . import _xiknot as _core  # installed layout: extension inside the package
except ImportError:  # in-tree layout: extension next to the build directory
    import _xiknot as _core

SceneError = _core.SceneError
ProblemError = _core.ProblemError

__all__ = [
    "SceneError",
    "ProblemError",
    "compute_xi",
    "xi",
    "lists_text",
    "linking_block",
    "cover_h1",
    "coloring_classes",
    "cover_signature",
    "ribbon_verdict",
]


def compute_xi(problem_path, provider=""):
    """Full report as a dict; exact values are decimal/fraction strings.

    ``provider`` may be ``""`` (whatever the problem file supplies),
    ``"computed"``, or ``"table:<path>"``.
    """
    return json.loads(_core.xi_report_json(str(problem_path), provider))


def xi(problem_path, provider=""):
    """Just the invariant, as a Fraction."""
    return Fraction(compute_xi(problem_path, provider)["xi"])


def lists_text(scene_path, component="alpha"):
    """Underpass lists of one component, one parenthesized list per line."""
    return _core.lists_text(str(scene_path), component)


def linking_block(scene_path, curve, pushoff):
    """3x3 matrix of linking numbers between labelled lifts, as Fractions."""
    rows = _core.linking_block(str(scene_path), curve, pushoff)
    return [[Fraction(x) for x in row] for row in rows]


def cover_h1(scene_path):
    """Invariant factors of the cover's first homology (empty = trivial)."""
    return [int(f) for f in _core.cover_h1(str(scene_path))]


def coloring_classes(scene_path):
    """One representative coloring per affine-relabelling class."""
    return _core.coloring_classes(str(scene_path))


def cover_signature(p, sigma_x, e_b, xi):
    """p*sigma(X) - (p-1)/4 * e(B) - xi, exactly, as a Fraction."""
    return Fraction(_core.cover_signature(p, sigma_x, e_b, str(Fraction(xi))))


def ribbon_verdict(xi, p=3):
    """"obstructed" when |xi| exceeds (p-1)/2, else "not obstructed by xi"."""
    return _core.ribbon_verdict(str(Fraction(xi)), p)
