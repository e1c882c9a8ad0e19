"""The marking graph of S_1_1: moves, exact distances, balls.

Markings of S_1_1 are in bijection with PSL(2, Z): g <-> g(MU0), where the
base of g(MU0) is the second column of g and the transversal the first.  The
three elementary moves are right multiplication by fixed matrices, so the
marking graph is a Cayley graph, the left action is by isometries, and
d(mu, nu) = d(MU0, g_mu^{-1} g_nu).  We use that to answer most distance
queries from one precomputed ball about MU0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from threading import Lock
from typing import Optional

from .backend import MU0, TORUS, Marking
from .farey import Matrix, Slope, mat_inv, mat_mul

#: radius of the precomputed distance table about MU0
TABLE_RADIUS = 16
#: largest ball we agree to enumerate
MAX_RADIUS = 18


class BallTooLarge(ValueError):
    def __init__(self, r, max_r, estimate):
        super().__init__(f"ball radius {r} exceeds the cap {max_r} (about {estimate} markings)")
        self.radius = r
        self.estimate = estimate


def neighbors(mu: Marking) -> list[Marking]:
    """[twist+, twist-, flip]."""
    return TORUS.neighbors(mu)


def to_matrix(mu: Marking) -> Matrix:
    """The determinant-one matrix g with g(MU0) = mu (defined up to sign)."""
    (b, d), (a, c) = mu.base, mu.transversal
    if a * d - b * c == -1:
        b, d = -b, -d
    return (a, b, c, d)


def from_matrix(g: Matrix) -> Marking:
    a, b, c, d = g
    return Marking(Slope.of(b, d), Slope.of(a, c))


def translate(g: Matrix, mu: Marking) -> Marking:
    return from_matrix(mat_mul(g, to_matrix(mu)))


def relative(mu: Marking, nu: Marking) -> Marking:
    """g_mu^{-1}(nu): the image of nu when mu is moved to MU0."""
    return from_matrix(mat_mul(mat_inv(to_matrix(mu)), to_matrix(nu)))


def sphere_size_estimate(r: int) -> int:
    """Number of markings at distance exactly r (exact for S_1_1)."""
    sizes = [1, 3, 6, 10]
    while len(sizes) <= r:
        sizes.append(sizes[-1] + sizes[-2])
    return sizes[r]


def ball_size_estimate(r: int) -> int:
    return sum(sphere_size_estimate(k) for k in range(r + 1))


def bfs_distances(center: Marking, radius: int) -> dict[Marking, int]:
    dist = {center: 0}
    frontier = [center]
    for k in range(1, radius + 1):
        nxt = []
        for mu in frontier:
            for nu in neighbors(mu):
                if nu not in dist:
                    dist[nu] = k
                    nxt.append(nu)
        frontier = nxt
    return dist


_table: Optional[dict[Marking, int]] = None
_table_lock = Lock()


def distance_table() -> dict[Marking, int]:
    global _table
    with _table_lock:
        if _table is None:
            _table = bfs_distances(MU0, TABLE_RADIUS)
        return _table


def bidirectional_distance(mu: Marking, nu: Marking, cap: int) -> Optional[int]:
    """Plain bidirectional BFS; None if the distance exceeds ``cap``."""
    if mu == nu:
        return 0
    sides = [({mu: 0}, [mu]), ({nu: 0}, [nu])]
    radii = [0, 0]
    while radii[0] + radii[1] < cap:
        i = 0 if len(sides[0][1]) <= len(sides[1][1]) else 1
        mine, frontier = sides[i]
        other = sides[1 - i][0]
        radii[i] += 1
        nxt, best = [], None
        for m in frontier:
            for n in neighbors(m):
                if n in mine:
                    continue
                mine[n] = radii[i]
                nxt.append(n)
                if n in other:
                    tot = radii[i] + other[n]
                    best = tot if best is None else min(best, tot)
        if best is not None:
            return best if best <= cap else None
        if not nxt:
            return None
        sides[i] = (mine, nxt)
    return None


def marking_distance(mu: Marking, nu: Marking, cap: int = TABLE_RADIUS) -> Optional[int]:
    """Exact marking-graph distance, or None when it exceeds ``cap``."""
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    if cap <= TABLE_RADIUS:
        k = distance_table().get(relative(mu, nu))
        return k if k is not None and k <= cap else None
    return bidirectional_distance(mu, nu, cap)


def distance(mu: Marking, nu: Marking) -> int:
    """Exact distance with the largest cap we support; raises past it."""
    k = marking_distance(mu, nu, TABLE_RADIUS)
    if k is None:
        k = bidirectional_distance(mu, nu, 2 * MAX_RADIUS + 4)
    if k is None:
        raise ValueError(f"distance between {mu} and {nu} is beyond the desk-scale cap")
    return k


@dataclass
class MarkingBall:
    center: Marking
    radius: int
    members: dict[Marking, int] = field(repr=False)

    def __len__(self):
        return len(self.members)

    def __contains__(self, mu):
        return mu in self.members

    def sorted_members(self) -> list[Marking]:
        return sorted(self.members)

    def sphere(self, k: int) -> list[Marking]:
        return sorted(m for m, d in self.members.items() if d == k)

    def to_json(self) -> dict:
        return {
            "center": self.center.to_json(),
            "radius": self.radius,
            "members": [{"marking": m.to_json(), "distance": d} for m, d in sorted(self.members.items())],
        }

    def to_dot(self) -> str:
        names = {m: f"m{i}" for i, m in enumerate(self.sorted_members())}
        lines = ["graph ball {"]
        for m, name in names.items():
            lines.append(f'  {name} [label="{m.base} | {m.transversal}", dist={self.members[m]}];')
        for m, name in names.items():
            for n in neighbors(m):
                if n in names and names[n] > name:
                    lines.append(f"  {name} -- {names[n]};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def ball(mu: Marking, r: int, max_radius: int = MAX_RADIUS) -> MarkingBall:
    if r < 0:
        raise ValueError("radius must be nonnegative")
    if r > max_radius:
        raise BallTooLarge(r, max_radius, ball_size_estimate(r))
    if r <= TABLE_RADIUS:
        g = to_matrix(mu)
        members = {translate(g, m): k for m, k in distance_table().items() if k <= r}
    else:
        members = bfs_distances(mu, r)
    return MarkingBall(mu, r, members)


def word_length(mu: Marking) -> int:
    """|g| for the group element represented by mu = g(MU0)."""
    return distance(MU0, mu)
