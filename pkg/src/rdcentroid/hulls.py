"""F_k sets, the time orders, Sigma-hulls, footprints and the hull cover.

All statements are relative to an ordered pair (x, y) of markings and a
base constant c.  Proper subsurfaces of S_1_1 are annuli, so F_k(x, y) is a
finite set of annuli, hulls in annuli are integer intervals, and the hull in
C(S) is a union of Farey geodesics.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil
from typing import NamedTuple, Optional, Sequence

from .backend import TORUS, WHOLE, Marking, Subsurface, annulus, sort_subsurfaces
from .centroid import ProjectionTuple, realize
from .coarse import NotTransverse
from .config import get_config
from .farey import Slope, distance_to_set, farey_distance, farey_geodesic, neighbor_with_twist, twist_coordinate
from .markings import ball, distance, distance_table, relative


@dataclass
class OrderedPairContext:
    x: Marking
    y: Marking
    c: int
    _proj: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.c <= get_config().c0:
            raise ValueError(f"base constant c={self.c} must exceed c0={get_config().c0}")

    def proj(self, which: str, w: Subsurface):
        key = (which, w)
        if key not in self._proj:
            self._proj[key] = TORUS.project(w, self.x if which == "x" else self.y)
        return self._proj[key]

    def d_to_boundary(self, which: str, w: Subsurface, v: Subsurface) -> int:
        """d_W(x or y, boundary of V) for annuli W != V."""
        return abs(self.proj(which, w) - twist_coordinate(w.core, v.core))


def f_set(ctx: OrderedPairContext, k: int) -> list[Subsurface]:
    if k < 2:
        raise ValueError("k must be at least 2")
    return [w for w in TORUS.subsurfaces_between(ctx.x, ctx.y, k * ctx.c) if w != WHOLE]


def precedes(ctx: OrderedPairContext, v: Subsurface, w: Subsurface, k: int) -> bool:
    """V before W: transverse, and x is more than kc from the core of W in V."""
    if v == w:
        raise ValueError("precedes needs two different subsurfaces")
    if not TORUS.transverse(v, w):
        return False
    return ctx.d_to_boundary("x", v, w) > k * ctx.c


class FourConditions(NamedTuple):
    w_precedes_v: bool
    w_x_far: bool
    w_y_near: bool
    v_x_near: bool
    v_y_far: bool

    def agree(self) -> bool:
        return len(set(self)) == 1


def check_four_inequalities(ctx: OrderedPairContext, v: Subsurface, w: Subsurface, k: int) -> FourConditions:
    fk = f_set(ctx, k)
    if v not in fk or w not in fk:
        raise ValueError("both subsurfaces must lie in F_k(x, y)")
    if not TORUS.transverse(v, w):
        raise NotTransverse(f"{v} and {w} are not transverse")
    c = ctx.c
    return FourConditions(
        precedes(ctx, w, v, k - 1),
        ctx.d_to_boundary("x", w, v) > (k - 1) * c,
        ctx.d_to_boundary("y", w, v) <= c,
        ctx.d_to_boundary("x", v, w) <= c,
        ctx.d_to_boundary("y", v, w) > (k - 1) * c,
    )


# -- hulls ----------------------------------------------------------------------

def hull_W(A: Sequence[Marking], w: Subsurface) -> set:
    ps = [TORUS.project(w, a) for a in A]
    if w.is_annulus:
        return set(range(min(ps), max(ps) + 1))
    out = set(ps)
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            out.update(farey_geodesic(ps[i], ps[j]))
    return out


class _Hull:
    """hull_W(A) with distances; annular hulls stay as intervals."""

    def __init__(self, A: Sequence[Marking]):
        self.A = tuple(A)
        self._whole: Optional[set] = None

    def distance(self, w: Subsurface, point) -> int:
        if w.is_annulus:
            ps = [TORUS.project(w, a) for a in self.A]
            lo, hi = min(ps), max(ps)
            return max(lo - point, 0, point - hi)
        if self._whole is None:
            self._whole = sorted(hull_W(self.A, WHOLE))
        return distance_to_set(point, self._whole)


class Membership(NamedTuple):
    ok: bool
    witness: Optional[Subsurface]
    value: int
    checked: int

    def __bool__(self):
        return self.ok


def sigma_active(mu: Marking, A: Sequence[Marking], threshold: int) -> list[Subsurface]:
    """Subsurfaces between pairs of A + {mu}; threshold 0 keeps every candidate."""
    pts = sorted(set(A) | {mu})
    ws = {WHOLE}
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if threshold == 0:
                ws.update(annulus(g) for g in TORUS.candidate_annuli(pts[i], pts[j]))
                ws.update(annulus(g) for m in (pts[i], pts[j]) for g in m)
            else:
                ws.update(TORUS.subsurfaces_between(pts[i], pts[j], threshold))
    return sort_subsurfaces(ws)


def sigma_membership(mu: Marking, A: Sequence[Marking], eps: int, threshold: Optional[int] = None,
                     hull: Optional[_Hull] = None) -> Membership:
    """Is mu within eps of hull_W(A) for every W?

    Any W with d_W(mu, hull) > eps has d_W(mu, a) > eps for every a in A, so
    checking the subsurfaces between pairs of A + {mu} at threshold eps is
    enough.  ``threshold`` may force a smaller (larger-set) activity cutoff.
    """
    if eps < 1:
        raise ValueError("eps must be at least 1")
    if not 1 <= len(set(A)) <= 3:
        raise ValueError("generating set must have 1 to 3 markings")
    thr = eps if threshold is None else threshold
    hull = hull or _Hull(A)
    active = sigma_active(mu, A, thr)
    worst = 0
    for w in active:
        dv = hull.distance(w, TORUS.project(w, mu))
        if dv > eps:
            return Membership(False, w, dv, len(active))
        worst = max(worst, dv)
    return Membership(True, None, worst, len(active))


@dataclass
class SigmaHull:
    generators: tuple[Marking, ...]
    eps: int
    members: list[Marking]
    radius: int
    truncated: bool

    def __len__(self):
        return len(self.members)


def enumerate_sigma(A: Sequence[Marking], eps: int, radius: Optional[int] = None) -> SigmaHull:
    """Members of Sigma_eps(A) inside ball(first generator, radius).

    The default radius is the diameter of A plus the frozen slack.  The hull
    is flagged as possibly truncated when a member sits on the boundary
    sphere of the search ball.
    """
    A = tuple(sorted(set(A)))
    x = A[0]
    if radius is None:
        radius = max(distance(a, b) for a in A for b in A) + get_config().sigma_slack
    hull = _Hull(A)
    bl = ball(x, radius, max_radius=get_config().ball_max_radius)
    members = sorted(m for m in bl.members if sigma_membership(m, A, eps, hull=hull))
    truncated = any(bl.members[m] == radius for m in members)
    return SigmaHull(A, eps, members, radius, truncated)


def _dist(table, m, n) -> int:
    d = table.get(relative(m, n))
    return distance(m, n) if d is None else d


def set_diameter(ms: Sequence[Marking]) -> int:
    best = 0
    table = distance_table()
    ms = list(ms)
    for i, m in enumerate(ms):
        for n in ms[i + 1:]:
            best = max(best, _dist(table, m, n))
    return best


# -- footprints -------------------------------------------------------------------

def footprint(g, u: Subsurface) -> list[int]:
    """Indices of vertices of g disjoint from U (equal or adjacent to its core)."""
    if not u.is_annulus:
        return list(range(len(g)))
    return [i for i, v in enumerate(g) if farey_distance(v, u.core) <= 1]


# -- the q of the counting reduction ------------------------------------------------

def _far_point(start: int, end: int, points: Sequence[int], eps: int) -> int:
    """Point of [start, end] farthest from ``start`` within eps of ``points``."""
    lo, hi = min(start, end), max(start, end)
    best = start
    for p in points:
        a, b = max(lo, p - eps), min(hi, p + eps)
        if a > b:
            continue
        cand = b if end >= start else a
        if abs(cand - start) > abs(best - start):
            best = cand
    return best


class QResult(NamedTuple):
    q: Marking
    A: list[Marking]
    targets: dict
    deviation: int


def construct_q(x: Marking, y: Marking, r: int, eps: int, bound: Optional[int] = None) -> QResult:
    if r <= 1:
        raise ValueError("r must exceed 1")
    cfg = get_config()
    hull = _Hull((x, y))
    bl = ball(x, r, max_radius=cfg.ball_max_radius)
    A = sorted(m for m in bl.members if sigma_membership(m, (x, y), eps, hull=hull))
    active = set(TORUS.subsurfaces_between(x, y, eps))
    for a in A:
        active.update(TORUS.subsurfaces_between(x, a, eps))
    targets = {}
    for w in sort_subsurfaces(active):
        if w.is_annulus:
            pa = [TORUS.project(w, a) for a in A]
            targets[w] = _far_point(TORUS.project(w, x), TORUS.project(w, y), pa, eps)
        else:
            g = farey_geodesic(x.base, y.base)
            bases = sorted({a.base for a in A})
            idx = max(i for i, v in enumerate(g) if distance_to_set(v, bases) <= eps)
            targets[w] = g[idx]
    t = ProjectionTuple(targets, 0, (x,))
    seeds = sorted(set(A) | {x, y})
    res = realize(t, seeds, budget=cfg.beta * (len(seeds) + r), bound=bound if bound is not None else cfg.D_real)
    return QResult(res.marking, A, targets, res.deviation)


# -- the cover ----------------------------------------------------------------------

class CoverPiece(NamedTuple):
    kind: str  # "GU" or "Gp"
    key: tuple  # (core,) for GU, (p,) for Gp
    members: tuple[Marking, ...]
    flagged: bool = False


def _minimal(ctx: OrderedPairContext, fs: list[Subsurface]) -> tuple[list[Subsurface], bool]:
    mins = [u for u in fs if not any(v != u and precedes(ctx, v, u, 2) for v in fs)]
    anomaly = len(mins) != 1
    if not mins:
        mins = [min(fs, key=lambda w: w.key)]
    return mins, anomaly


def gamma_map(mu: Marking, x: Marking, y: Marking, eps: int, a: int, c: int) -> tuple[CoverPiece, str]:
    """gamma(mu) and the branch taken ("near-U", "far-U" or "no-F")."""
    ctx = OrderedPairContext(mu, y, c)
    fs = f_set(ctx, 3)
    if fs:
        mins, anomaly = _minimal(ctx, fs)
        u = min(mins, key=lambda w: w.key).core
        if farey_distance(mu.base, u) <= a:
            tx, ty = TORUS.project(annulus(u), x), TORUS.project(annulus(u), y)
            lo, hi = min(tx, ty) - eps, max(tx, ty) + eps
            members = tuple(Marking(u, neighbor_with_twist(u, t)) for t in range(lo, hi + 1))
            return CoverPiece("GU", (u,), members, anomaly), "near-U"
    g = farey_geodesic(x.base, y.base)
    dists = [farey_distance(mu.base, v) for v in g]
    iq = dists.index(min(dists))
    ip = min(iq + ceil(a / 2), len(g) - 1)
    p = g[ip]
    yp = Marking(p, neighbor_with_twist(p, TORUS.project(annulus(p), y)))
    yp2 = TORUS.neighbors(yp)[0]
    return CoverPiece("Gp", (p,), (yp, yp2)), ("far-U" if fs else "no-F")


@dataclass
class CoverReport:
    b1: float
    b2: int
    b3: float
    sigma_size: int
    sigma_diameter: int
    pieces: int
    histogram: dict
    truncated: bool
    flagged: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def verify_cover(x: Marking, y: Marking, eps: Optional[int] = None, radius: Optional[int] = None) -> CoverReport:
    cfg = get_config()
    eps = cfg.eps if eps is None else eps
    sig = enumerate_sigma((x, y), eps, radius)
    pieces: dict[CoverPiece, None] = {}
    hist: dict[str, int] = {}
    b2 = 0
    table = distance_table()
    for mu in sig.members:
        piece, branch = gamma_map(mu, x, y, eps, cfg.a, cfg.c)
        pieces.setdefault(piece)
        hist[branch] = hist.get(branch, 0) + 1
        near = min(_dist(table, mu, n) for n in piece.members)
        b2 = max(b2, near)
    xi = TORUS.surface.xi
    b1, diam_sum = 0.0, 0
    for piece in pieces:
        dia = set_diameter(piece.members)
        diam_sum += dia
        b1 = max(b1, len(piece.members) / max(dia, 1) ** xi)
    sd = set_diameter(sig.members)
    return CoverReport(
        b1=b1, b2=b2, b3=diam_sum / max(sd, 1), sigma_size=len(sig.members), sigma_diameter=sd,
        pieces=len(pieces), histogram=hist, truncated=sig.truncated,
        flagged=sum(1 for p in pieces if p.flagged),
    )
