import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rdcentroid.farey import (
    INFINITY,
    ZERO,
    Slope,
    adjacent,
    dehn_twist,
    distance_to_set,
    farey_centroids,
    farey_distance,
    farey_geodesic,
    farey_strip,
    neighbor_with_twist,
    set_diameter,
    to_infinity,
    twist_coordinate,
    twist_matrix,
    mat_apply,
)

from oracles import box_distance_matrix, box_slopes, farey_bfs

S = Slope


def slopes(n=10_000):
    # (0, 0) maps to 1/0 so every draw is usable
    return st.tuples(st.integers(-n, n), st.integers(0, n)).map(
        lambda pq: Slope.of(*pq) if pq != (0, 0) else INFINITY)


def test_slope_canonical_form():
    assert Slope.of(-3, -5) == S(3, 5)
    assert Slope.of(2, -4) == S(-1, 2)
    assert Slope.of(-1, 0) == INFINITY
    assert Slope.parse("-6/4") == S(-3, 2)
    with pytest.raises(ValueError):
        Slope.of(0, 0)


@pytest.mark.parametrize("a,b,expected", [
    (ZERO, INFINITY, True),
    (ZERO, S(1, 1), True),
    (ZERO, S(3, 5), False),
])
def test_adjacent(a, b, expected):
    assert adjacent(a, b) is expected


@pytest.mark.parametrize("a,b,expected", [
    (S(7, 3), S(7, 3), 0),
    (ZERO, INFINITY, 1),
    (ZERO, S(3, 5), 2),
])
def test_distance_examples(a, b, expected):
    assert farey_distance(a, b) == expected


def test_distance_matches_bfs_on_small_box():
    # the full 40-box comparison lives in the acceptance suite
    slopes_, dist = box_distance_matrix(12)
    for i, a in enumerate(slopes_):
        for j in range(i, len(slopes_)):
            assert farey_distance(a, slopes_[j]) == dist[i, j]


def test_box_subgraph_is_geodesically_faithful():
    # distances inside the 12-box agree with distances in a larger box
    small, ds = box_distance_matrix(12)
    big, db = box_distance_matrix(24)
    pos = {s: k for k, s in enumerate(big)}
    for i, a in enumerate(small):
        for j, b in enumerate(small):
            assert ds[i, j] == db[pos[a], pos[b]]


@settings(max_examples=200, deadline=None)
@given(slopes(), slopes(), slopes())
def test_metric_axioms(a, b, c):
    dab = farey_distance(a, b)
    assert dab == farey_distance(b, a)
    assert (dab == 0) == (a == b)
    assert farey_distance(a, c) <= dab + farey_distance(b, c)


@settings(max_examples=100, deadline=None)
@given(slopes(25), slopes(25))
def test_distance_against_bfs(a, b):
    assert farey_distance(a, b) == farey_bfs(a, b, limit=12)


@pytest.mark.parametrize("a,b,expected", [
    (S(2, 9), S(2, 9), [S(2, 9)]),
    (ZERO, INFINITY, [ZERO, INFINITY]),
    (ZERO, S(3, 5), [ZERO, S(1, 2), S(3, 5)]),
])
def test_geodesic_examples(a, b, expected):
    assert list(farey_geodesic(a, b)) == expected


@settings(max_examples=200, deadline=None)
@given(slopes(), slopes())
def test_geodesic_is_a_geodesic(a, b):
    g = farey_geodesic(a, b)
    assert g[0] == a and g[-1] == b
    assert g.length == farey_distance(a, b)
    assert all(adjacent(u, v) for u, v in zip(g, g[1:]))
    assert list(farey_geodesic(b, a)) == list(g.reversed())


@settings(max_examples=100, deadline=None)
@given(slopes(), slopes())
def test_strip_contains_geodesic_vertices(a, b):
    strip = set(farey_strip(a, b))
    assert set(farey_geodesic(a, b)) <= strip
    g = list(farey_geodesic(a, b))
    assert all(distance_to_set(v, g) <= 1 for v in strip)


def test_annulus_off_strip_sees_endpoints_close():
    # an annulus whose core is off strip(a, b) sees a and b within 1 of each other
    rng = random.Random(4)
    box = box_slopes(8)
    for _ in range(60):
        a, b = rng.sample(box, 2)
        strip = set(farey_strip(a, b))
        for g in box:
            if g in strip or g in (a, b):
                continue
            assert abs(twist_coordinate(g, a) - twist_coordinate(g, b)) <= 1


def test_centroid_examples():
    x = S(4, 7)
    assert x in farey_centroids(x, x, x, 0)
    tri = farey_centroids(ZERO, INFINITY, S(1, 1), 1)
    assert {ZERO, INFINITY, S(1, 1)} <= tri


def test_centroid_example_brute_force():
    a, b, c = ZERO, S(5, 8), S(8, 5)
    cents = farey_centroids(a, b, c, 1)
    assert cents
    sides = [set(farey_geodesic(u, v)) for u, v in ((a, b), (b, c), (a, c))]
    for v in cents:
        assert all(distance_to_set(v, side) <= 1 for side in sides)


@settings(max_examples=100, deadline=None)
@given(slopes(), slopes(), slopes())
def test_centroids_are_permutation_invariant(a, b, c):
    ref = farey_centroids(a, b, c, 1)
    for p in itertools.permutations((a, b, c)):
        assert farey_centroids(*p, 1) == ref


def test_centroid_set_diameter_is_small():
    rng = random.Random(11)
    box = box_slopes(200)
    for _ in range(100):
        cents = farey_centroids(*rng.sample(box, 3), 1)
        assert cents and set_diameter(sorted(cents)) <= 2


@pytest.mark.parametrize("n", [-4, 0, 1, 7])
def test_twist_coordinate_about_infinity(n):
    assert twist_coordinate(INFINITY, S(3, 1)) == 3
    beta = Slope.of(0 + n * 1, 1)  # (p, q) -> (p + n q, q) applied to 0/1
    assert twist_coordinate(INFINITY, beta) == n


def test_twist_coordinate_about_zero():
    t0 = twist_coordinate(ZERO, INFINITY)
    t1 = twist_coordinate(ZERO, Slope.of(1, 0 + 1))  # (p, q) -> (p, q + p)
    assert abs((t1 - t0) - 1) <= 2


def test_twist_coordinate_requires_crossing():
    with pytest.raises(ValueError, match="does not cross"):
        twist_coordinate(S(2, 3), S(2, 3))


@settings(max_examples=200, deadline=None)
@given(slopes(500), slopes(500), st.integers(-20, 20))
def test_dehn_twist_translates_by_n(gamma, beta, n):
    if gamma == beta:
        return
    t = twist_coordinate(gamma, beta)
    assert twist_coordinate(gamma, dehn_twist(gamma, beta, n)) == t + n
    assert mat_apply(twist_matrix(gamma, n), beta) == dehn_twist(gamma, beta, n)


@settings(max_examples=200, deadline=None)
@given(slopes(500), slopes(500), slopes(500))
def test_twist_differences_ignore_normalization(gamma, u, v):
    if gamma in (u, v):
        return
    d1 = twist_coordinate(gamma, u) - twist_coordinate(gamma, v)
    d2 = twist_coordinate(gamma, u, "balanced") - twist_coordinate(gamma, v, "balanced")
    assert d1 == d2


@settings(max_examples=100, deadline=None)
@given(slopes(), st.integers(-50, 50))
def test_neighbor_with_twist(gamma, t):
    v = neighbor_with_twist(gamma, t)
    assert adjacent(gamma, v)
    assert twist_coordinate(gamma, v) == t


def test_to_infinity_sends_gamma_to_infinity():
    for g in box_slopes(15):
        assert mat_apply(to_infinity(g), g) == INFINITY
