"""Experiments: centroid census, growth fits, the Drutu-Sapir and
Chatterji-Ruane conditions, and a finite convolution-norm demo.

Group elements of MCG(S_1_1) are handled through the orbit map
g -> g(MU0), which on S_1_1 is a bijection from PSL(2, Z) onto markings.
"""
from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .backend import MU0, Marking
from .centroid import kappa
from .config import get_config
from .farey import mat_inv, mat_mul
from .hulls import enumerate_sigma, sigma_membership
from .markings import ball, distance, from_matrix, to_matrix, translate, word_length


@dataclass
class CensusRecord:
    x: Marking
    y: Marking
    r: int
    centroids: frozenset
    ball_size: int
    wall_time: float

    @property
    def count(self) -> int:
        return len(self.centroids)

    def csv_row(self) -> list:
        return [str(self.x), str(self.y), self.r, self.count, self.ball_size, f"{self.wall_time:.4f}"]


CSV_HEADER = ["x", "y", "r", "centroids", "ball_size", "wall_time"]


def _kappa_chunk(args):
    x, y, zs = args
    return [kappa(x, y, z) for z in zs]


def census(x: Marking, y: Marking, radii: Sequence[int], workers: int = 1,
           kappa_fn=None) -> list[CensusRecord]:
    """K(x, y, r) = {kappa(x, y, z) : d(x, z) <= r} for each r, exactly."""
    radii = sorted(set(radii))
    cfg = get_config()
    t0 = time.perf_counter()
    bl = ball(x, max(radii), max_radius=cfg.ball_max_radius)
    zs = bl.sorted_members()
    if kappa_fn is None and workers > 1:
        chunks = [zs[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_kappa_chunk, [(x, y, ch) for ch in chunks]))
        ks = {}
        for ch, part in zip(chunks, parts):
            ks.update(zip(ch, part))
    else:
        fn = kappa_fn or kappa
        ks = {z: fn(x, y, z) for z in zs}
    elapsed = time.perf_counter() - t0
    out = []
    for r in radii:
        members = [z for z in zs if bl.members[z] <= r]
        out.append(CensusRecord(x, y, r, frozenset(ks[z] for z in members), len(members), elapsed))
    return out


@dataclass
class GrowthFit:
    radii: list
    counts: list
    exponent: float
    b: float
    residual: float
    degenerate: bool = False

    def to_json(self) -> dict:
        return dict(self.__dict__)


def growth_fit(records, min_radius: int = 3) -> GrowthFit:
    """Least-squares slope of log(count) against log(r) over r >= min_radius.

    ``records`` may be CensusRecords or (r, count) pairs.
    """
    pts = sorted((rec.r, rec.count) if isinstance(rec, CensusRecord) else tuple(rec) for rec in records)
    if len(pts) < 4:
        raise ValueError("need at least four radii")
    if any(c < 1 for _, c in pts):
        raise ValueError("counts must be positive")
    radii = [r for r, _ in pts]
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be strictly increasing")
    use = [(r, c) for r, c in pts if r >= min_radius]
    counts = [c for _, c in pts]
    if len(use) < 2 or len({c for _, c in use}) == 1:
        return GrowthFit(radii, counts, 0.0, float(use[0][1]) if use else 0.0, 0.0, degenerate=True)
    lx = np.log([r for r, _ in use])
    ly = np.log([c for _, c in use])
    (slope, icpt), res, *_ = np.polyfit(lx, ly, 1, full=True)
    resid = float(res[0]) if len(res) else 0.0
    return GrowthFit(radii, counts, float(slope), float(math.exp(icpt)), resid)


def random_walk(mu: Marking, n: int, rng: random.Random) -> Marking:
    from .markings import neighbors
    for _ in range(n):
        mu = rng.choice(neighbors(mu))
    return mu


def random_at_distance(x: Marking, d: int, rng: random.Random) -> Marking:
    """Uniform marking on the sphere of radius d about x."""
    bl = ball(x, d)
    return rng.choice(bl.sphere(d))


# -- Drutu-Sapir ---------------------------------------------------------------------

@dataclass
class DSReport:
    symmetric_failures: int
    equivariance_max: int
    sphere_counts: dict
    Q_b: float
    samples: int
    E0: int

    @property
    def passed(self) -> dict:
        return {
            "symmetry": self.symmetric_failures == 0,
            "equivariance": self.equivariance_max <= self.E0,
            "count": all(n < self.Q_b * max(r, 1) for r, n in self.sphere_counts.items()),
        }

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["sphere_counts"] = {str(k): v for k, v in self.sphere_counts.items()}
        d["passed"] = self.passed
        return d


def T(g, h) -> Marking:
    """T(g, h) = kappa(1, g, h) read through the orbit map."""
    return kappa(MU0, from_matrix(g), from_matrix(h))


def check_ds_conditions(g_marking: Marking, max_length: int = 8, hs: Optional[Sequence[Marking]] = None) -> DSReport:
    cfg = get_config()
    g = to_matrix(g_marking)
    bl = ball(MU0, max_length)
    hs = bl.sorted_members() if hs is None else list(hs)
    sym = 0
    eqmax = 0
    spheres: dict[int, set] = {}
    for hm in hs:
        h = to_matrix(hm)
        t_gh = T(g, h)
        t_hg = T(h, g)
        if t_gh != t_hg:
            sym += 1
        hinv = mat_inv(h)
        lhs = T(hinv, mat_mul(hinv, g))
        rhs = translate(hinv, t_hg)
        eqmax = max(eqmax, distance(lhs, rhs))
        spheres.setdefault(bl.members.get(hm, word_length(hm)), set()).add(t_gh)
    counts = {r: len(s) for r, s in sorted(spheres.items())}
    return DSReport(sym, eqmax, counts, cfg.ds_b, len(hs), cfg.E0)


# -- Chatterji-Ruane -------------------------------------------------------------------

@dataclass
class CRReport:
    witness: Marking
    in_hulls: tuple
    hull_size: int
    hull_distance: int
    bound: float

    @property
    def passed(self) -> bool:
        return all(self.in_hulls) and self.hull_size <= self.bound

    def to_json(self) -> dict:
        return {
            "witness": self.witness.to_json(),
            "in_hulls": list(self.in_hulls),
            "hull_size": self.hull_size,
            "hull_distance": self.hull_distance,
            "bound": self.bound,
            "passed": self.passed,
        }


def check_cr_family(x: Marking, y: Marking, z: Marking, eps: Optional[int] = None) -> CRReport:
    cfg = get_config()
    eps_p = cfg.eps_prime if eps is None else eps
    k = kappa(x, y, z)
    inside = tuple(bool(sigma_membership(k, pair, eps_p)) for pair in ((x, y), (y, z), (x, z)))
    sig = enumerate_sigma((x, y), cfg.eps)
    dxy = distance(x, y)
    xi = 1
    return CRReport(k, inside, len(sig), dxy, cfg.cr_c * max(dxy, 1) ** xi)


def thin_triangle(x: Marking, d: int, rng: random.Random) -> tuple[Marking, Marking, Marking]:
    """(x, y, z) with all pairwise distances equal to d."""
    bx = ball(x, d)
    sphere = bx.sphere(d)
    while True:
        y = rng.choice(sphere)
        by = ball(y, d)
        common = [z for z in sphere if by.members.get(z) == d]
        if common:
            return x, y, rng.choice(common)


# -- convolution -----------------------------------------------------------------------

@dataclass
class ConvolutionReport:
    s: int
    trials: int
    max_ratio: float
    bound: float
    support_f: int
    support_g: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def convolution_demo(s: int, trials: int, seed: int = 0, f=None, g=None) -> ConvolutionReport:
    """||f * g||_2 / (||f||_2 ||g||_2) for f on ball(s), g on ball(2s).

    (f * g)(xy) collects f(x) g(y); the product index of every pair is
    computed once and reused for all trials.  ``f`` and ``g`` may be given
    explicitly as dicts marking -> value (then ``trials`` is ignored).
    """
    if s > 8:
        raise ValueError("s is capped at 8")
    bf = ball(MU0, s).sorted_members()
    bg = ball(MU0, 2 * s).sorted_members()
    mf = [to_matrix(m) for m in bf]
    mg = [to_matrix(m) for m in bg]
    index: dict[Marking, int] = {}
    prod = np.empty((len(bf), len(bg)), dtype=np.int64)
    for i, a in enumerate(mf):
        for j, b in enumerate(mg):
            key = from_matrix(mat_mul(a, b))
            prod[i, j] = index.setdefault(key, len(index))
    flat = prod.ravel()
    n_out = len(index)

    def ratio(fv, gv):
        vals = np.outer(fv, gv).ravel()
        conv = np.bincount(flat, weights=vals, minlength=n_out)
        return float(np.linalg.norm(conv) / (np.linalg.norm(fv) * np.linalg.norm(gv)))

    cfg = get_config()
    bound = cfg.conv_C * s ** 1.5
    if f is not None or g is not None:
        fv = np.array([(f or {MU0: 1.0}).get(m, 0.0) for m in bf])
        gv = np.array([(g or {MU0: 1.0}).get(m, 0.0) for m in bg])
        return ConvolutionReport(s, 1, ratio(fv, gv), bound, len(bf), len(bg))
    rng = np.random.default_rng(seed)
    best = 0.0
    for _ in range(trials):
        # nonnegative functions dominate: |f * g| <= |f| * |g| pointwise
        fv = rng.random(len(bf))
        gv = rng.random(len(bg))
        best = max(best, ratio(fv, gv))
    return ConvolutionReport(s, trials, best, bound, len(bf), len(bg))
