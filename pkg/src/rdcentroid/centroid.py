"""Centroids of marking triples assembled from per-subsurface centroids.

For each subsurface W that sees the triple spread out we pick a centroid of
the projected triangle in C(W): the canonical-least Farey centroid for S,
the median for an annulus.  A marking realizing that tuple is then found by
a best-first search on the marking graph.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .backend import TORUS, WHOLE, Marking, Subsurface, annulus, sort_subsurfaces
from .config import get_config
from .farey import Slope, farey_centroids, farey_distance, farey_strip, neighbor_with_twist, twist_coordinate


class EmptyCentroidSet(ValueError):
    pass


class RealizationFailure(RuntimeError):
    def __init__(self, result: "CentroidResult"):
        super().__init__(f"no marking within {result.bound} of the tuple; best {result.marking} at {result.deviation}")
        self.result = result


def median3(values: Sequence[int]) -> int:
    return sorted(values)[len(values) // 2]


@dataclass
class ProjectionTuple:
    """Targets x_W on a finite active set of subsurfaces.

    Annuli outside the active set see the fallback markings within the
    activity threshold of each other; their target is the median of those
    projections.
    """

    entries: dict[Subsurface, object]
    rho: int = 1
    fallback: tuple[Marking, ...] = ()
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def active(self) -> list[Subsurface]:
        return sort_subsurfaces(self.entries)

    @property
    def whole(self) -> Slope:
        return self.entries[WHOLE]

    def target(self, w: Subsurface):
        if w in self.entries:
            return self.entries[w]
        if w in self._cache:
            return self._cache[w]
        if not self.fallback:
            raise KeyError(w)
        t = median3([TORUS.project(w, m) for m in self.fallback])
        self._cache[w] = t
        return t


def _active_union(points: Sequence[Marking], threshold: int) -> list[Subsurface]:
    ws = {WHOLE}
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            ws.update(TORUS.subsurfaces_between(points[i], points[j], threshold))
    return sort_subsurfaces(ws)


def centroid_tuple(a: Marking, b: Marking, c: Marking, rho: Optional[int] = None, eps: Optional[int] = None) -> ProjectionTuple:
    cfg = get_config()
    rho = cfg.rho_min if rho is None else rho
    eps = cfg.tuple_threshold if eps is None else eps
    triple = (a, b, c)
    entries = {}
    for w in _active_union(triple, eps):
        ps = [TORUS.project(w, m) for m in triple]
        if w.is_annulus:
            entries[w] = median3(ps)
        else:
            cents = farey_centroids(ps[0], ps[1], ps[2], rho)
            if not cents:
                raise EmptyCentroidSet(f"no {rho}-centroid for {ps}; rho is below the calibrated minimum")
            entries[w] = min(cents)
    return ProjectionTuple(entries, rho, tuple(sorted(triple)))


# -- consistency --------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    condition: str
    u: Subsurface
    v: Subsurface
    values: tuple


def check_consistency(t: ProjectionTuple, c1: int, c2: int) -> list[Violation]:
    """Nested (annulus in S) and transverse (two annuli) consistency checks."""
    out = []
    ann = [w for w in t.active if w.is_annulus]
    if WHOLE in t.entries:
        xs = t.entries[WHOLE]
        for u in ann:
            dv = farey_distance(u.core, xs)
            if dv >= c1:
                du = abs(t.entries[u] - twist_coordinate(u.core, xs))
                if du >= c2:
                    out.append(Violation("C1", u, WHOLE, (dv, du)))
    for i, u in enumerate(ann):
        for v in ann[i + 1:]:
            du = abs(t.entries[u] - twist_coordinate(u.core, v.core))
            dv = abs(t.entries[v] - twist_coordinate(v.core, u.core))
            if min(du, dv) >= c2:
                out.append(Violation("C2", u, v, (du, dv)))
    return out


# -- realization --------------------------------------------------------------

@dataclass
class CentroidResult:
    marking: Marking
    deviation: int
    phi_sum: int
    expansions: int
    bound: int
    table: dict = field(default_factory=dict, repr=False)

    @property
    def status(self) -> str:
        return "success" if self.deviation <= self.bound else "failure"

    def to_json(self) -> dict:
        return {
            "centroid": self.marking.to_json(),
            "deviation": self.deviation,
            "status": self.status,
            "expansions": self.expansions,
            "per_subsurface": [
                {"subsurface": str(w), "target": str(tgt), "value": str(val), "d": d}
                for w, (tgt, val, d) in sorted(self.table.items(), key=lambda kv: kv[0].key)
            ],
        }


class _Scorer:
    def __init__(self, t: ProjectionTuple):
        self.t = t
        self.xs = t.whole
        self.active_ann = [w for w in t.active if w.is_annulus]
        self.cache: dict[Marking, tuple[int, int]] = {}

    def subsurfaces(self, mu: Marking) -> list[Subsurface]:
        ws = set(self.active_ann)
        ws.update(annulus(g) for g in farey_strip(mu.base, self.xs))
        return sort_subsurfaces(ws)

    def score(self, mu: Marking) -> tuple[int, int]:
        s = self.cache.get(mu)
        if s is None:
            worst = total = farey_distance(mu.base, self.xs)
            for w in self.subsurfaces(mu):
                d = abs(TORUS.project(w, mu) - self.t.target(w))
                total += d
                if d > worst:
                    worst = d
            s = self.cache[mu] = (worst, total)
        return s

    def table(self, mu: Marking) -> dict:
        out = {WHOLE: (self.xs, mu.base, farey_distance(mu.base, self.xs))}
        for w in self.subsurfaces(mu):
            tgt, val = self.t.target(w), TORUS.project(w, mu)
            out[w] = (tgt, val, abs(val - tgt))
        return out


def constructive_seed(t: ProjectionTuple) -> Marking:
    """Base at the S-centroid, transversal twisted to that annulus's target."""
    xs = t.whole
    return Marking(xs, neighbor_with_twist(xs, t.target(annulus(xs))))


#: radius of the balls the final downhill pass looks through
POLISH_RADIUS = 2


def _ball(mu: Marking, r: int) -> list[Marking]:
    seen, frontier = {mu}, [mu]
    for _ in range(r):
        frontier = [nu for m in frontier for nu in TORUS.neighbors(m) if nu not in seen and not seen.add(nu)]
    return sorted(seen)


def realize(t: ProjectionTuple, seeds: Sequence[Marking], budget: Optional[int] = None,
            bound: Optional[int] = None, polish: bool = True) -> CentroidResult:
    """Best-first search for a marking whose projections match the tuple.

    Priority is (max deviation, total deviation, marking).  The search stops
    at the first marking within ``bound`` or when ``budget`` expansions are
    spent, then moves downhill through balls of radius POLISH_RADIUS until
    nothing nearby scores better.  Ties always go to the canonical-least marking.
    """
    if not seeds:
        raise ValueError("realize needs at least one seed")
    cfg = get_config()
    bound = cfg.D_real if bound is None else bound
    budget = search_budget_for(t, seeds) if budget is None else budget
    sc = _Scorer(t)
    start = sorted(set(seeds) | {constructive_seed(t)})
    heap = [(*sc.score(m), m) for m in start]
    heapq.heapify(heap)
    seen = set(start)
    best = min(heap)
    expansions = 0
    while heap and expansions < budget:
        node = heapq.heappop(heap)
        if node < best:
            best = node
        if node[0] <= bound:
            break
        expansions += 1
        for nu in TORUS.neighbors(node[2]):
            if nu not in seen:
                seen.add(nu)
                heapq.heappush(heap, (*sc.score(nu), nu))
    if polish:
        while True:
            nxt = min((*sc.score(nu), nu) for nu in _ball(best[2], POLISH_RADIUS))
            if nxt >= best:
                break
            best = nxt
            expansions += 1
    worst, total, mu = best
    return CentroidResult(mu, worst, total, expansions, bound, sc.table(mu))


def search_budget_for(t: ProjectionTuple, points: Sequence[Marking]) -> int:
    """beta times a cheap size proxy: the summed projection distances."""
    cfg = get_config()
    size = 1
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            for w in t.active:
                size += TORUS.d(w, points[i], points[j])
    return cfg.beta * size


def kappa_result(a: Marking, b: Marking, c: Marking, budget_scale: int = 1) -> CentroidResult:
    t = centroid_tuple(a, b, c)
    seeds = sorted({a, b, c})
    res = realize(t, seeds, budget=budget_scale * search_budget_for(t, seeds))
    if res.status != "success":
        raise RealizationFailure(res)
    return res


def kappa(a: Marking, b: Marking, c: Marking) -> Marking:
    return kappa_result(a, b, c).marking
