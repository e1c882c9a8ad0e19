"""Exact geometry of the Farey graph.

The Farey graph is the curve graph of a complexity-one piece (once-punctured
torus or four-holed sphere).  Vertices are slopes p/q, i.e. primitive integer
vectors up to sign, and p/q, r/s are adjacent when |ps - qr| = 1.  The curve
graph of an annulus is modelled by integer twist coordinates.

Everything here is exact integer arithmetic; nothing is cached across calls
except the pure ``to_infinity`` normalizer.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable, NamedTuple, Sequence

Matrix = tuple[int, int, int, int]  # (a, b, c, d) for [[a, b], [c, d]]

#: an element of C(annulus) = Z
TwistCoordinate = int


class Slope(NamedTuple):
    """A vertex of the Farey graph, always stored in canonical form.

    Canonical means gcd(|p|, |q|) = 1 and either q > 0 or p/q = 1/0.  The
    tuple order (lexicographic on (p, q)) is the canonical slope order used
    for every tie-break in the package.
    """

    p: int
    q: int

    @classmethod
    def of(cls, p: int, q: int) -> "Slope":
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a slope")
        g = gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return cls(p, q)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        try:
            p, q = text.strip().split("/")
            return cls.of(int(p), int(q))
        except ValueError as exc:
            raise ValueError(f"malformed slope {text!r}") from exc

    def is_canonical(self) -> bool:
        return gcd(self.p, self.q) == 1 and (self.q > 0 or (self.q == 0 and self.p == 1))

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def __repr__(self) -> str:
        return f"Slope({self.p}/{self.q})"


INFINITY = Slope(1, 0)
ZERO = Slope(0, 1)


class FareyGeodesic(NamedTuple):
    vertices: tuple[Slope, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def reversed(self) -> "FareyGeodesic":
        return FareyGeodesic(self.vertices[::-1])


# -- 2x2 integer matrices ----------------------------------------------------

def mat_mul(m: Matrix, n: Matrix) -> Matrix:
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat_inv(m: Matrix) -> Matrix:
    """Inverse of a determinant-one matrix."""
    a, b, c, d = m
    return (d, -b, -c, a)


def mat_apply(m: Matrix, s: Slope) -> Slope:
    a, b, c, d = m
    return Slope.of(a * s.p + b * s.q, c * s.p + d * s.q)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    return a, x0, y0


@lru_cache(maxsize=1 << 16)
def to_infinity(gamma: Slope, normalization: str = "euclid") -> Matrix:
    """The canonical M in SL(2, Z) with M(gamma) = 1/0.

    For gamma = p/q with q > 0 we solve u p + v q = 1 by extended Euclid and
    take M = [[u, v], [-q, p]].  The solution is unique up to
    (u, v) -> (u + k q, v - k p), i.e. up to post-composition with a power of
    the twist about 1/0.  ``"euclid"`` picks 0 <= u < q, ``"balanced"`` picks
    -q/2 < u <= q/2.  For gamma = 1/0 both give the identity.
    """
    p, q = gamma
    if q == 0:
        return (1, 0, 0, 1)
    g, u, v = _ext_gcd(p, q)
    if g < 0:
        u, v = -u, -v
    if normalization == "euclid":
        k = u // q
    elif normalization == "balanced":
        k = -((q // 2 - u) // q)
    else:
        raise ValueError(f"unknown normalization {normalization!r}")
    u, v = u - k * q, v + k * p
    return (u, v, -q, p)


def _image(m: Matrix, s: Slope) -> tuple[int, int]:
    """M(s) as a vector with nonnegative second entry (not reduced)."""
    a, b, c, d = m
    p, q = a * s.p + b * s.q, c * s.p + d * s.q
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return p, q


# -- adjacency, distance, geodesics -----------------------------------------

def det(a: Slope, b: Slope) -> int:
    return a.p * b.q - a.q * b.p


def adjacent(a: Slope, b: Slope) -> bool:
    return abs(a.p * b.q - a.q * b.p) == 1


def _distance_from_infinity(p: int, q: int) -> int:
    """Farey distance from 1/0 to p/q (q > 0, gcd 1).

    Walk the Stern-Brocot descent from the edge (n, n+1), n = floor(p/q),
    keeping the distances of both endpoints of the current separating edge.
    Each run of the continued fraction is a fan about a fixed pivot, so a run
    of length k updates the moving endpoint once: min(dl, dr) + 1 for k = 1,
    pivot + 1 for k >= 2.
    """
    if q == 1:
        return 1
    num, den = q, p % q
    quotients = []
    while den:
        k = num // den
        quotients.append(k)
        num, den = den, num - k * den
    if len(quotients) == 1:
        runs = [quotients[0] - 2]
    else:
        runs = [quotients[0] - 1, *quotients[1:-1], quotients[-1] - 1]
    dl = dr = 1
    for i, k in enumerate(runs):
        if k == 0:
            continue
        if i % 2 == 0:  # target left of every mediant: right endpoint moves
            dr = min(dl, dr) + 1 if k == 1 else dl + 1
        else:
            dl = min(dl, dr) + 1 if k == 1 else dr + 1
    return min(dl, dr) + 1


def farey_distance(a: Slope, b: Slope) -> int:
    if a == b:
        return 0
    p, q = _image(to_infinity(a), b)
    return _distance_from_infinity(p, q)


def farey_distances_from(a: Slope, others: Iterable[Slope]) -> list[int]:
    """Batch form of :func:`farey_distance` sharing the normalizer of ``a``."""
    m = to_infinity(a)
    out = []
    for b in others:
        if b == a:
            out.append(0)
        else:
            out.append(_distance_from_infinity(*_image(m, b)))
    return out


def distance_to_set(v: Slope, vertices: Iterable[Slope]) -> int:
    best = None
    for w in vertices:
        d = farey_distance(v, w)
        if d == 0:
            return 0
        if best is None or d < best:
            best = d
    if best is None:
        raise ValueError("distance to an empty set")
    return best


def _first_step_candidates(cur: Slope, target: Slope) -> tuple[Slope, Slope]:
    """Endpoints of the first Farey edge separating ``cur`` from ``target``."""
    m = to_infinity(cur)
    p, q = _image(m, target)
    n = p // q
    minv = mat_inv(m)
    return mat_apply(minv, Slope(n, 1)), mat_apply(minv, Slope(n + 1, 1))


def farey_geodesic(a: Slope, b: Slope) -> FareyGeodesic:
    """A deterministic geodesic from a to b.

    Any geodesic leaving ``cur`` must step onto the first separating edge, so
    we step greedily to whichever endpoint stays on a geodesic, preferring the
    smaller slope.  The path is computed from the smaller endpoint and reversed
    if needed, so ``farey_geodesic(b, a)`` is the reverse of
    ``farey_geodesic(a, b)``.
    """
    if b < a:
        return farey_geodesic(b, a).reversed()
    path = [a]
    d = farey_distance(a, b)
    cur = a
    while d > 1:
        options = [c for c in _first_step_candidates(cur, b) if farey_distance(c, b) == d - 1]
        cur = min(options)
        path.append(cur)
        d -= 1
    if d == 1:
        path.append(b)
    return FareyGeodesic(tuple(path))


def farey_strip(a: Slope, b: Slope) -> list[Slope]:
    """Vertices of all Farey triangles crossed by the hyperbolic geodesic a-b.

    Every Farey geodesic from a to b lies in the strip, and an annulus whose
    core is outside the strip sees a and b at twist distance at most 1.  The
    strip only depends on {a, b}.  Its size grows with the sum of the partial
    quotients, so it is meant for the moderate slopes coming from markings.
    """
    if a == b:
        return [a]
    if adjacent(a, b):
        return [a, b]
    m = to_infinity(a)
    p, q = _image(m, b)
    n = p // q
    lo, hi = (n, 1), (n + 1, 1)
    verts = [(1, 0), lo, hi]
    while True:
        med = (lo[0] + hi[0], lo[1] + hi[1])
        verts.append(med)
        if med == (p, q):
            break
        if p * med[1] < med[0] * q:
            hi = med
        else:
            lo = med
    minv = mat_inv(m)
    return [mat_apply(minv, Slope(*v)) for v in verts]


def farey_centroids(a: Slope, b: Slope, c: Slope, rho: int) -> set[Slope]:
    """rho-centroids of the triangle a, b, c among the vertices of its sides.

    The full set of rho-centroids is infinite for rho >= 1 because the Farey
    graph is locally infinite, so candidates are restricted to the union of
    the three chosen geodesics.  An empty answer means rho is too small.
    """
    sides = [farey_geodesic(a, b), farey_geodesic(b, c), farey_geodesic(a, c)]
    pool = set()
    for side in sides:
        pool.update(side)
    return {v for v in pool if all(distance_to_set(v, side) <= rho for side in sides)}


def set_diameter(vertices: Sequence[Slope]) -> int:
    vs = sorted(vertices)
    best = 0
    for i, v in enumerate(vs):
        for d in farey_distances_from(v, vs[i + 1:]):
            best = max(best, d)
    return best


# -- annuli -----------------------------------------------------------------

def twist_coordinate(gamma: Slope, beta: Slope, normalization: str = "euclid") -> TwistCoordinate:
    """Coordinate of ``beta`` in C(annulus about gamma) = Z.

    Move gamma to 1/0 with the canonical matrix M and round M(beta) = p'/q'
    half up.  Changing the normalization of M translates every coordinate by
    the same integer.
    """
    if beta == gamma:
        raise ValueError("curve does not cross annulus")
    p, q = _image(to_infinity(gamma, normalization), beta)
    return (2 * p + q) // (2 * q)


def dehn_twist(gamma: Slope, v: Slope, n: int = 1) -> Slope:
    """Image of ``v`` under the n-th power of the Dehn twist about gamma.

    T_gamma(v) = v + det(gamma, v) gamma; conjugation-equivariant, and for
    gamma = 1/0 it is p/q -> (p + q)/q, so twist coordinates about gamma go
    up by exactly n.
    """
    k = n * (gamma.p * v.q - gamma.q * v.p)
    return Slope.of(v.p + k * gamma.p, v.q + k * gamma.q)


def twist_matrix(gamma: Slope, n: int = 1) -> Matrix:
    """Matrix of the n-th power of the Dehn twist about gamma."""
    p, q = gamma
    return (1 - n * p * q, n * p * p, -n * q * q, 1 + n * p * q)


def neighbor_with_twist(gamma: Slope, t: int) -> Slope:
    """The Farey neighbour of gamma whose twist coordinate about gamma is t."""
    return mat_apply(mat_inv(to_infinity(gamma)), Slope(t, 1))


def round_half_up(num: int, den: int) -> int:
    if den < 0:
        num, den = -num, -den
    return (2 * num + den) // (2 * den)
