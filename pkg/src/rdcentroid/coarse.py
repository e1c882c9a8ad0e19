"""Coarse-geometry checkers built on subsurface projections.

The distance formula evaluator, the Behrstock inequality, and the bounded
geodesic image statements.  Checkers return the raw quantities; deciding
whether they are "small" is left to the caller and the frozen constants.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .backend import WHOLE, TORUS, Marking, Subsurface, annulus, curve_distance
from .farey import FareyGeodesic, Slope, distance_to_set, twist_coordinate


class NotTransverse(ValueError):
    pass


class FootprintNonempty(ValueError):
    pass


@dataclass
class ThresholdSum:
    threshold: int
    terms: dict[Subsurface, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(v for v in self.terms.values() if v >= self.threshold)

    def counted(self) -> dict[Subsurface, int]:
        return {w: v for w, v in self.terms.items() if v >= self.threshold}


def quasidistance(mu: Marking, nu: Marking, A: int, backend=TORUS) -> ThresholdSum:
    """Sum over subsurfaces of d_W(mu, nu), each term cut off below A.

    Terms are collected over every W with d_W > A/2 (rounded down, at least
    1) plus S itself; anything smaller cannot reach the cutoff.
    """
    if A < 1:
        raise ValueError("threshold must be positive")
    out = ThresholdSum(A)
    for w in backend.subsurfaces_between(mu, nu, max(1, A // 2)):
        out.terms[w] = backend.d(w, mu, nu)
    return out


def boundary_projection(w: Subsurface, v: Subsurface):
    """pi_W of the core curve of the annulus v."""
    if not w.is_annulus:
        return v.core
    return twist_coordinate(w.core, v.core)


def check_behrstock(mu: Marking, v: Subsurface, w: Subsurface, backend=TORUS) -> tuple[int, int]:
    """(d_W(mu, dV), d_V(mu, dW)) for transverse annuli V, W."""
    if not backend.transverse(v, w):
        raise NotTransverse(f"{v} and {w} are not transverse")
    dw = abs(backend.project(w, mu) - twist_coordinate(w.core, v.core))
    dv = abs(backend.project(v, mu) - twist_coordinate(v.core, w.core))
    return dw, dv


def diam_in_annulus(g, y: Subsurface) -> int:
    ts = [twist_coordinate(y.core, v) for v in g]
    return max(ts) - min(ts) if ts else 0


def check_bounded_geodesic_image(g: FareyGeodesic, y: Subsurface) -> int:
    """diam_Y of a Farey geodesic that avoids the core of the annulus Y."""
    if not y.is_annulus:
        raise ValueError("bounded geodesic image is checked for annuli")
    if y.core in g.vertices:
        raise FootprintNonempty(f"geodesic passes through the core {y.core}")
    return diam_in_annulus(g, y)


def check_gen_geodesic_image(g: FareyGeodesic, w: Subsurface, v: Subsurface) -> tuple[int, int]:
    """(d_W(g, dV), diam_V(g)) for a geodesic g in C(W).

    On S_1_1 the only W carrying a geodesic with a transverse boundary curve
    is S itself with V an annulus; diam_V is taken over the vertices of g
    other than the core of V, where the projection is defined.
    """
    if w != WHOLE or not v.is_annulus:
        raise NotTransverse(f"{w} does not cut the boundary of {v}")
    dist = distance_to_set(v.core, g.vertices)
    rest = [x for x in g.vertices if x != v.core]
    return dist, diam_in_annulus(rest, v)
