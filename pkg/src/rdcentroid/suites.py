"""Seeded sweeps shared by ``verify`` and ``calibrate``.

Each suite samples instances, measures the quantities a frozen constant is
supposed to bound, and reports both the observed extremes and the verdict
against the current config.  ``calibrate`` proposes constants from the same
observations; the two never feed each other within a run.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from math import gcd

from .backend import MU0, TORUS, WHOLE, Marking, annulus
from .centroid import centroid_tuple, check_consistency, kappa, kappa_result
from .coarse import check_behrstock, check_bounded_geodesic_image, check_gen_geodesic_image, quasidistance
from .config import get_config
from .farey import (
    Slope,
    ZERO,
    INFINITY,
    distance_to_set,
    farey_centroids,
    farey_geodesic,
    farey_strip,
    set_diameter as farey_set_diameter,
)
from .hulls import (
    OrderedPairContext,
    check_four_inequalities,
    construct_q,
    enumerate_sigma,
    f_set,
    footprint,
    precedes,
    set_diameter,
    sigma_membership,
    verify_cover,
)
from .markings import ball, distance, neighbors, to_matrix, translate
from .rdlab import census, check_cr_family, check_ds_conditions, convolution_demo, growth_fit, random_at_distance, random_walk, thin_triangle


@dataclass
class SuiteReport:
    suite: str
    samples: int
    observed: dict
    ceilings: dict
    violations: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "config_version": get_config().version,
            "samples": self.samples,
            "observed": self.observed,
            "ceilings": self.ceilings,
            "violations": self.violations[:20],
            "violation_count": len(self.violations),
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
        }


def random_slope(rng: random.Random, n: int) -> Slope:
    while True:
        p, q = rng.randint(-n, n), rng.randint(0, n)
        if gcd(p, q) == 1 and (q > 0 or p == 1):
            return Slope(p, q)


def random_marking(rng: random.Random, length: int = 16) -> Marking:
    return random_walk(MU0, rng.randint(0, length), rng)


def _ceil(report: SuiteReport, name: str, value, limit, strict=False):
    bad = value >= limit if strict else value > limit
    if bad:
        report.violations.append({"quantity": name, "value": value, "limit": limit})


# -- Farey centroids ---------------------------------------------------------------------

def suite_farey(n: int = 1000, seed: int = 0) -> SuiteReport:
    cfg = get_config()
    rng = random.Random(seed)
    t0 = time.perf_counter()
    rep = SuiteReport("farey", n, {}, {"rho_min": cfg.rho_min, "D_rho": cfg.D_rho})
    worst, empty_below = 0, 0
    for _ in range(n):
        a, b, c = (random_slope(rng, 10 ** 4) for _ in range(3))
        cents = farey_centroids(a, b, c, cfg.rho_min)
        if not cents:
            rep.violations.append({"quantity": "empty", "triple": [str(a), str(b), str(c)]})
            continue
        dia = farey_set_diameter(sorted(cents))
        worst = max(worst, dia)
        _ceil(rep, "diameter", dia, cfg.D_rho)
        if cfg.rho_min > 0 and not farey_centroids(a, b, c, cfg.rho_min - 1):
            empty_below += 1
    rep.observed = {"max_diameter": worst, "empty_at_rho_min_minus_1": empty_below}
    rep.seconds = time.perf_counter() - t0
    return rep


# -- Behrstock -----------------------------------------------------------------------

def sample_behrstock(rng: random.Random):
    mu = random_marking(rng, 20)
    other = random_slope(rng, 30)
    pool = sorted(set(farey_strip(mu.base, other)) | {mu.base, mu.transversal, other})
    if len(pool) < 2:
        pool = [ZERO, INFINITY]
    v, w = rng.sample(pool, 2)
    return mu, annulus(v), annulus(w)


def suite_behrstock(n: int = 10_000, seed: int = 0) -> SuiteReport:
    cfg = get_config()
    rng = random.Random(seed)
    t0 = time.perf_counter()
    rep = SuiteReport("behrstock", n, {}, {"m0": cfg.m0})
    worst = 0
    for _ in range(n):
        mu, v, w = sample_behrstock(rng)
        side = min(check_behrstock(mu, v, w))
        worst = max(worst, side)
        _ceil(rep, "min_side", side, cfg.m0)
    rep.observed = {"max_min_side": worst}
    rep.seconds = time.perf_counter() - t0
    return rep


# -- geodesic image ---------------------------------------------------------------------

def sample_geodesic_annulus(rng: random.Random):
    """A geodesic and an annulus whose core is off it but close to it."""
    while True:
        a, b = random_slope(rng, 10 ** 4), random_slope(rng, 10 ** 4)
        g = farey_geodesic(a, b)
        pool = [s for s in farey_strip(a, b) if s not in g.vertices]
        if rng.random() < 0.3 or not pool:
            pool = pool + [random_slope(rng, 50)]
        core = rng.choice(pool)
        if core not in g.vertices:
            return g, annulus(core)


def suite_geodesic_image(n: int = 1000, seed: int = 0) -> SuiteReport:
    cfg = get_config()
    rng = random.Random(seed)
    t0 = time.perf_counter()
    rep = SuiteReport("geodesic-image", n, {}, {"B": cfg.B, "m1": cfg.m1, "m2": cfg.m2})
    worst, worst_gen = 0, 0
    for _ in range(n):
        g, y = sample_geodesic_annulus(rng)
        dia = check_bounded_geodesic_image(g, y)
        worst = max(worst, dia)
        _ceil(rep, "diam_Y", dia, cfg.B)
        dist, dv = check_gen_geodesic_image(g, WHOLE, y)
        if dist > cfg.m1:
            worst_gen = max(worst_gen, dv)
            _ceil(rep, "diam_V_far", dv, cfg.m2)
        # footprints of the same geodesic: short intervals
        fp = footprint(g, y)
        if fp and (fp[-1] - fp[0] + 1 != len(fp) or len(fp) > 3):
            rep.violations.append({"quantity": "footprint", "indices": fp})
    rep.observed = {"max_diam": worst, "max_diam_far": worst_gen}
    rep.seconds = time.perf_counter() - t0
    return rep


# -- partial orders ------------------------------------------------------------------------

def ordered_instance(rng: random.Random, c: int, segments=None):
    """(x, y) built from long twists about successive bases separated by flips.

    Each long twist about the current base puts that annulus in F_3, and the
    flips make successive annuli transverse.
    """
    x = random_marking(rng, 8)
    mu = x
    segs = segments or rng.randint(2, 4)
    lo = 3 * c + 2
    for i in range(segs):
        n = rng.randint(lo, lo + 12) * rng.choice((1, -1))
        step = 0 if n > 0 else 1
        for _ in range(abs(n)):
            mu = neighbors(mu)[step]
        mu = neighbors(mu)[2]
        for _ in range(rng.randint(0, 2)):
            mu = rng.choice(neighbors(mu))
    return x, mu


def suite_order(n: int = 500, seed: int = 0) -> SuiteReport:
    cfg = get_config()
    rng = random.Random(seed)
    t0 = time.perf_counter()
    c = cfg.c
    rep = SuiteReport("order", n, {}, {"c": c, "c0": cfg.c0})
    pairs = 0
    built = 0
    tries = 0
    while built < n:
        tries += 1
        if tries % 4 == 0:
            # unstructured pairs, kept only when F_3 has two or more members
            x = random_marking(rng, 8)
            y = random_at_distance(x, rng.randint(8, 12), rng)
        else:
            x, y = ordered_instance(rng, c)
        ctx = OrderedPairContext(x, y, c)
        fs = f_set(ctx, 3)
        if len(fs) < 2:
            continue
        built += 1
        rel = {(v, w): precedes(ctx, v, w, 2) for v in fs for w in fs if v != w}
        for v, w in itertools.permutations(fs, 2):
            if rel[(v, w)] and rel[(w, v)]:
                rep.violations.append({"quantity": "antisymmetry", "V": str(v), "W": str(w)})
            if TORUS.transverse(v, w) and not (rel[(v, w)] or rel[(w, v)]):
                rep.violations.append({"quantity": "comparable", "V": str(v), "W": str(w)})
            four = check_four_inequalities(ctx, v, w, 3)
            pairs += 1
            if not four.agree():
                rep.violations.append({"quantity": "four", "V": str(v), "W": str(w), "pattern": list(four)})
            # swapping the roles of x and y reverses the order
            rctx = OrderedPairContext(y, x, c)
            if precedes(rctx, w, v, 2) != rel[(v, w)]:
                rep.violations.append({"quantity": "reversal", "V": str(v), "W": str(w)})
        for u, v, w in itertools.permutations(fs, 3):
            if rel[(u, v)] and rel[(v, w)] and not rel[(u, w)]:
                rep.violations.append({"quantity": "transitivity", "U": str(u), "V": str(v), "W": str(w)})
    rep.observed = {"instances": built, "ordered_pairs": pairs}
    rep.seconds = time.perf_counter() - t0
    return rep


# -- Sigma hulls ---------------------------------------------------------------------------

def suite_sigma(n: int = 30, seed: int = 0, max_d: int = 7) -> SuiteReport:
    cfg = get_config()
    rng = random.Random(seed)
    t0 = time.perf_counter()
    rep = SuiteReport("sigma", n, {}, {"b": cfg.b, "eps": cfg.eps})
    worst_ratio = 0.0
    trunc = 0
    for _ in range(n):
        x = random_marking(rng, 10)
        d = rng.randint(0, max_d)
        y = random_at_distance(x, d, rng) if d else x
        sig = enumerate_sigma((x, y), cfg.eps)
        trunc += sig.truncated
        dia = set_diameter(sig.members)
        worst_ratio = max(worst_ratio, dia / (d + 1))
        _ceil(rep, "diameter", dia, cfg.b * (d + 1))
        if x not in sig.members or y not in sig.members:
            rep.violations.append({"quantity": "generators"})
        # soundness: a larger active set never flips a verdict
        bl = ball(x, sig.radius)
        for mu in rng.sample(bl.sorted_members(), min(40, len(bl))):
            v1 = bool(sigma_membership(mu, (x, y), cfg.eps))
            v2 = bool(sigma_membership(mu, (x, y), cfg.eps, threshold=cfg.eps // 2))
            if v1 != v2:
                rep.violations.append({"quantity": "soundness", "marking": str(mu)})
    rep.observed = {"max_diameter_ratio": worst_ratio, "truncated": trunc}
    rep.seconds = time.perf_counter() - t0
    return rep


# -- cover ------------------------------------------------------------------------------------

def cover_instances(rng: random.Random, n: int):
    """Mixed instances: random pairs, and twist-dominated pairs."""
    out = []
    for i in range(n):
        x = random_marking(rng, 8)
        if i % 2:
            y = x
            for _ in range(rng.randint(8, 10)):
                y = neighbors(y)[0]
            y = rng.choice(neighbors(y))
        else:
            y = random_at_distance(x, rng.randint(0, 8), rng)
        out.append((x, y))
    return out


def suite_cover(n: int = 20, seed: int = 0) -> SuiteReport:
    cfg = get_config()
    rng = random.Random(seed)
    t0 = time.perf_counter()
    rep = SuiteReport("cover", n, {}, {"b1": cfg.b1, "b2": cfg.b2, "b3": cfg.b3})
    obs = {"b1": 0.0, "b2": 0, "b3": 0.0, "truncated": 0, "flagged": 0, "near-U": 0, "far-U": 0, "no-F": 0}
    for x, y in cover_instances(rng, n):
        r = verify_cover(x, y)
        for k in ("b1", "b2", "b3"):
            obs[k] = max(obs[k], getattr(r, k))
            _ceil(rep, k, getattr(r, k), getattr(cfg, k))
        obs["truncated"] += r.truncated
        obs["flagged"] += r.flagged
        for k, v in r.histogram.items():
            obs[k] += v
    rep.observed = obs
    rep.seconds = time.perf_counter() - t0
    return rep


def suite_construct_q(n: int = 6, seed: int = 0, radii=(2, 4, 6, 8)) -> SuiteReport:
    cfg = get_config()
    rng = random.Random(seed)
    t0 = time.perf_counter()
    rep = SuiteReport("construct-q", n * len(radii), {}, {"eps_prime": cfg.eps_prime, "q_factor": cfg.q_factor})
    worst_ratio, worst_eps = 0.0, 0
    for _ in range(n):
        x = random_marking(rng, 8)
        y = random_at_distance(x, 12, rng)
        for r in radii:
            res = construct_q(x, y, r, cfg.eps)
            dq = distance(x, res.q)
            worst_ratio = max(worst_ratio, dq / r)
            _ceil(rep, "d(x,q)/r", dq / r, cfg.q_factor)
            for a in res.A:
                for e in range(1, 20):
                    if sigma_membership(a, (x, res.q), e):
                        break
                worst_eps = max(worst_eps, e)
                if e > cfg.eps_prime:
                    rep.violations.append({"quantity": "containment", "r": r, "eps_needed": e})
            for e in range(1, 20):
                if sigma_membership(res.q, (x, y), e):
                    break
            worst_eps = max(worst_eps, e)
            _ceil(rep, "q_in_hull", e, cfg.eps_prime)
    rep.observed = {"max_ratio": worst_ratio, "max_eps_needed": worst_eps}
    rep.seconds = time.perf_counter() - t0
    return rep


# -- centroid properties ---------------------------------------------------------------------

def centroid_triple(rng: random.Random):
    a = random_marking(rng, 10)
    b = random_walk(a, rng.randint(0, 10), rng)
    c = random_walk(rng.choice((a, b)), rng.randint(0, 10), rng)
    return a, b, c


def _eps_needed(mu, pair, limit=12):
    for e in range(1, limit + 1):
        if sigma_membership(mu, pair, e):
            return e
    return limit + 1


def _rho_needed(mu, t, triple):
    """Largest distance from pi_W(mu) to a side of the projected triangle."""
    worst = 0
    for w in t.active:
        ps = [TORUS.project(w, m) for m in triple]
        val = TORUS.project(w, mu)
        for i, j in ((0, 1), (1, 2), (0, 2)):
            if w.is_annulus:
                lo, hi = sorted((ps[i], ps[j]))
                d = max(lo - val, 0, val - hi)
            else:
                d = distance_to_set(val, farey_geodesic(ps[i], ps[j]).vertices)
            worst = max(worst, d)
    return worst


def suite_centroid(n: int = 200, seed: int = 0) -> SuiteReport:
    cfg = get_config()
    rng = random.Random(seed)
    t0 = time.perf_counter()
    rep = SuiteReport("centroid", n, {}, {k: getattr(cfg, k) for k in ("E0", "L", "K", "rho_prime", "eps_prime", "D_real", "c1", "c2")})
    obs = {"perm_failures": 0, "E": 0, "lip_excess": 0, "rho": 0, "eps": 0, "deviation": 0, "budget_changes": 0, "inconsistent": 0}
    for _ in range(n):
        a, b, c = centroid_triple(rng)
        res = kappa_result(a, b, c)
        k = res.marking
        obs["deviation"] = max(obs["deviation"], res.deviation)
        outs = {kappa(*p) for p in itertools.permutations((a, b, c))}
        if len(outs) != 1:
            obs["perm_failures"] += 1
            rep.violations.append({"quantity": "permutation", "triple": [str(a), str(b), str(c)]})
        g = to_matrix(random_walk(MU0, rng.randint(0, 8), rng))
        moved = kappa(translate(g, a), translate(g, b), translate(g, c))
        e = distance(moved, translate(g, k))
        obs["E"] = max(obs["E"], e)
        _ceil(rep, "equivariance", e, cfg.E0)
        c2 = random_walk(c, rng.randint(1, 4), rng)
        dc = distance(c, c2)
        k2 = kappa(a, b, c2)
        dk = distance(k, k2)
        obs["lip_excess"] = max(obs["lip_excess"], dk - cfg.L * dc)
        _ceil(rep, "lipschitz", dk, cfg.L * dc + cfg.K)
        t = centroid_tuple(a, b, c)
        bad = check_consistency(t, cfg.c1, cfg.c2)
        obs["inconsistent"] += len(bad)
        for v in bad:
            rep.violations.append({"quantity": "consistency", "condition": v.condition, "values": list(v.values)})
        rho = _rho_needed(k, t, (a, b, c))
        obs["rho"] = max(obs["rho"], rho)
        _ceil(rep, "rho_prime", rho, cfg.rho_prime)
        for pair in ((a, b), (b, c), (a, c)):
            e = _eps_needed(k, pair)
            obs["eps"] = max(obs["eps"], e)
            _ceil(rep, "hull", e, cfg.eps_prime)
        if kappa_result(a, b, c, budget_scale=2).marking != k:
            obs["budget_changes"] += 1
    rep.observed = obs
    rep.seconds = time.perf_counter() - t0
    return rep


# -- census -------------------------------------------------------------------------------

def census_pairs(rng: random.Random, n: int = 5, d: int = 12):
    out = []
    for _ in range(n):
        x = random_marking(rng, 8)
        out.append((x, random_at_distance(x, d, rng)))
    return out


def suite_census(n: int = 5, seed: int = 0, radii=range(3, 11)) -> SuiteReport:
    cfg = get_config()
    rng = random.Random(seed)
    t0 = time.perf_counter()
    lo, hi = 0.4, 1.6  # xi = 1 plus or minus 0.6
    rep = SuiteReport("census", n, {}, {"census_b": cfg.census_b, "exponent": [lo, hi]})
    fits, worst_b, pooled = [], 0.0, {}
    for x, y in census_pairs(rng, n):
        recs = census(x, y, list(radii))
        for rec in recs:
            pooled[rec.r] = pooled.get(rec.r, 0) + rec.count
        fit = growth_fit(recs)
        fits.append(round(fit.exponent, 4))
        for rec in recs:
            worst_b = max(worst_b, rec.count / rec.r)
            _ceil(rep, "count", rec.count, cfg.census_b * rec.r)
        counts = [rec.count for rec in recs]
        if any(b < a for a, b in zip(counts, counts[1:])):
            rep.violations.append({"quantity": "monotone", "counts": counts})
    # one exponent for the experiment: the fit of the counts summed over pairs;
    # single-pair fits are reported but small-r offsets make them noisy
    pooled_fit = growth_fit(sorted(pooled.items()))
    if pooled_fit.degenerate or not lo <= pooled_fit.exponent <= hi:
        rep.violations.append({"quantity": "exponent", "value": pooled_fit.exponent})
    rep.observed = {
        "exponents": fits,
        "pair_outliers": sum(not lo <= e <= hi for e in fits),
        "pooled_exponent": round(pooled_fit.exponent, 4),
        "max_count_over_r": worst_b,
    }
    rep.seconds = time.perf_counter() - t0
    return rep


# -- Drutu-Sapir / Chatterji-Ruane ------------------------------------------------------------

def suite_ds(n: int = 1, seed: int = 0, g_length: int = 12, max_length: int = 8) -> SuiteReport:
    cfg = get_config()
    rng = random.Random(seed)
    t0 = time.perf_counter()
    rep = SuiteReport("ds", n, {}, {"E0": cfg.E0, "ds_b": cfg.ds_b})
    obs = {"symmetric_failures": 0, "equivariance_max": 0, "max_count_over_r": 0.0}
    for _ in range(n):
        g = random_at_distance(MU0, g_length, rng)
        r = check_ds_conditions(g, max_length)
        obs["symmetric_failures"] += r.symmetric_failures
        obs["equivariance_max"] = max(obs["equivariance_max"], r.equivariance_max)
        for rad, cnt in r.sphere_counts.items():
            obs["max_count_over_r"] = max(obs["max_count_over_r"], cnt / max(rad, 1))
        for cond, ok in r.passed.items():
            if not ok:
                rep.violations.append({"quantity": cond})
    rep.observed = obs
    rep.seconds = time.perf_counter() - t0
    return rep


def suite_cr(n: int = 50, seed: int = 0, d: int = 6) -> SuiteReport:
    cfg = get_config()
    rng = random.Random(seed)
    t0 = time.perf_counter()
    rep = SuiteReport("cr", n, {}, {"eps_prime": cfg.eps_prime, "cr_c": cfg.cr_c})
    worst = 0.0
    for _ in range(n):
        x = random_marking(rng, 8)
        tri = thin_triangle(x, d, rng)
        r = check_cr_family(*tri)
        worst = max(worst, r.hull_size / max(r.hull_distance, 1))
        if not r.passed:
            rep.violations.append({"quantity": "cr", "report": r.to_json()})
    rep.observed = {"max_hull_size_over_d": worst}
    rep.seconds = time.perf_counter() - t0
    return rep


# -- quasidistance ------------------------------------------------------------------------

def quasi_fit(pairs, A):
    """Affine constants (a <= 6, b) with d/a - b <= Q <= a d + b on all pairs.

    For each integer a the least b is exact; we return the pair minimizing
    max(a, b), smaller a first.
    """
    data = [(distance(x, y), quasidistance(x, y, A).total) for x, y in pairs]
    best = None
    for a in range(1, 7):
        b = max(0, max(max(q - a * d, d / a - q) for d, q in data))
        if best is None or (max(a, b), a) < (max(best), best[0]):
            best = (a, b)
    return best


def suite_quasi(n: int = 200, seed: int = 0) -> SuiteReport:
    cfg = get_config()
    rng = random.Random(seed)
    t0 = time.perf_counter()
    rep = SuiteReport("quasi", n, {}, {"A0": cfg.A0, "quasi_a": cfg.quasi_a, "quasi_b": cfg.quasi_b, "t0": cfg.t0})
    pairs = []
    for _ in range(n):
        x = random_marking(rng, 10)
        pairs.append((x, random_at_distance(x, rng.randint(0, 12), rng)))
    fits = {}
    for A in (cfg.A0, cfg.A0 + 1, cfg.A0 + 3):
        a, b = quasi_fit(pairs, A)
        fits[A] = (a, b)
        if a > cfg.quasi_a or b > cfg.quasi_b:
            rep.violations.append({"quantity": "quasi", "A": A, "a": a, "b": b})
    # bounded projections bound the distance (exhaustive, by invariance)
    worst_t = 0
    for nu, d in ball(MU0, 12).members.items():
        if all(TORUS.d(w, MU0, nu) <= 2 for w in TORUS.subsurfaces_between(MU0, nu, 1)):
            worst_t = max(worst_t, d)
    _ceil(rep, "t0", worst_t, cfg.t0)
    # coarse Lipschitz of projections along single moves
    worst_l = 0
    for _ in range(n):
        mu = random_marking(rng, 12)
        for nu in neighbors(mu):
            for w in TORUS.subsurfaces_between(mu, nu, 1):
                worst_l = max(worst_l, TORUS.d(w, mu, nu))
            worst_l = max(worst_l, 1 if mu.base != nu.base else 0)
    _ceil(rep, "L0", worst_l, cfg.L0)
    rep.observed = {"fits": {str(k): v for k, v in fits.items()}, "t0": worst_t, "L0": worst_l}
    rep.seconds = time.perf_counter() - t0
    return rep


def suite_convolution(n: int = 100, seed: int = 0, s: int = 5) -> SuiteReport:
    cfg = get_config()
    t0 = time.perf_counter()
    rep = SuiteReport("convolution", n, {}, {"conv_C": cfg.conv_C})
    r = convolution_demo(s, n, seed)
    _ceil(rep, "ratio", r.max_ratio, r.bound)
    rep.observed = {"max_ratio": r.max_ratio, "bound": r.bound}
    rep.seconds = time.perf_counter() - t0
    return rep


SUITES = {
    "farey": suite_farey,
    "behrstock": suite_behrstock,
    "geodesic-image": suite_geodesic_image,
    "order": suite_order,
    "sigma": suite_sigma,
    "cover": suite_cover,
    "construct-q": suite_construct_q,
    "centroid": suite_centroid,
    "census": suite_census,
    "ds": suite_ds,
    "cr": suite_cr,
    "quasi": suite_quasi,
    "convolution": suite_convolution,
}


def propose(rep: SuiteReport) -> dict:
    """Constants suggested by a run: observed extremes plus a small margin."""
    o = rep.observed
    s = rep.suite
    if s == "farey":
        return {"D_rho": max(1, o["max_diameter"])}
    if s == "behrstock":
        return {"m0": o["max_min_side"] + 1}
    if s == "geodesic-image":
        return {"B": max(o["max_diam"], 1) + 1, "m2": max(o["max_diam_far"], 1) + 1}
    if s == "sigma":
        return {"b": int(o["max_diameter_ratio"]) + 1}
    if s == "cover":
        return {"b1": int(o["b1"]) + 1, "b2": o["b2"] + 1, "b3": int(o["b3"]) + 1}
    if s == "construct-q":
        return {"q_factor": int(o["max_ratio"]) + 1, "eps_prime": o["max_eps_needed"]}
    if s == "centroid":
        return {"E0": o["E"] + 1, "rho_prime": o["rho"] + 1, "eps_prime": o["eps"]}
    if s == "census":
        return {"census_b": int(o["max_count_over_r"] * 1.5) + 1}
    if s == "ds":
        return {"ds_b": int(o["max_count_over_r"] * 1.5) + 1}
    if s == "cr":
        return {"cr_c": int(o["max_hull_size_over_d"] * 1.5) + 1}
    if s == "quasi":
        return {"t0": o["t0"] + 1, "L0": max(o["L0"], 1)}
    if s == "convolution":
        return {}
    return {}
