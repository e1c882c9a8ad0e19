import random

import numpy as np
import pytest

from rdcentroid.backend import MU0
from rdcentroid.centroid import kappa
from rdcentroid.config import get_config
from rdcentroid.markings import distance, from_matrix, to_matrix
from rdcentroid.rdlab import (
    CSV_HEADER,
    T,
    census,
    check_cr_family,
    check_ds_conditions,
    convolution_demo,
    growth_fit,
    random_at_distance,
    thin_triangle,
)
from rdcentroid.suites import random_marking

# max ratio for s = 5, 100 trials, seed 0 (first correct build)
PINNED_CONV_RATIO = 3.581871491532094


@pytest.mark.parametrize("power", [1, 2])
def test_growth_fit_synthetic(power):
    fit = growth_fit([(r, r ** power) for r in range(3, 11)])
    assert fit.exponent == pytest.approx(power, abs=0.01)
    assert fit.b == pytest.approx(1.0, abs=0.01)
    assert not fit.degenerate


def test_growth_fit_degenerate_and_invalid():
    fit = growth_fit([(r, 4) for r in range(3, 9)])
    assert fit.degenerate and fit.exponent == 0.0
    with pytest.raises(ValueError):
        growth_fit([(3, 1), (4, 2), (5, 3)])
    with pytest.raises(ValueError):
        growth_fit([(3, 1), (4, 0), (5, 3), (6, 4)])
    with pytest.raises(ValueError):
        growth_fit([(3, 1), (3, 2), (5, 3), (6, 4)])


def test_census_radius_zero_is_singleton():
    rng = random.Random(0)
    x = random_marking(rng, 6)
    y = random_at_distance(x, 5, rng)
    (rec,) = census(x, y, [0])
    assert rec.centroids == {kappa(x, y, x)}
    assert len(rec.csv_row()) == len(CSV_HEADER)


def test_census_x_equals_y():
    cfg = get_config()
    x = random_marking(random.Random(1), 8)
    recs = census(x, x, range(3, 9))
    counts = [rec.count for rec in recs]
    assert counts == sorted(counts)
    assert all(rec.count <= cfg.census_b * rec.r for rec in recs)


def test_census_is_monotone_and_parallel_agrees():
    rng = random.Random(2)
    x = random_marking(rng, 6)
    y = random_at_distance(x, 12, rng)
    serial = census(x, y, [2, 4, 6])
    assert [r.count for r in serial] == sorted(r.count for r in serial)
    parallel = census(x, y, [2, 4, 6], workers=2)
    assert [r.centroids for r in parallel] == [r.centroids for r in serial]


def test_ds_trivial_cases():
    g = to_matrix(random_marking(random.Random(3), 10))
    assert T(g, g) == kappa(MU0, from_matrix(g), from_matrix(g))
    ident = (1, 0, 0, 1)
    assert T(ident, g) == T(ident, g)
    rep = check_ds_conditions(from_matrix(g), max_length=4)
    assert rep.passed == {"symmetry": True, "equivariance": True, "count": True}


def test_cr_degenerate_triangle():
    x = random_marking(random.Random(4), 8)
    rep = check_cr_family(x, x, x)
    assert rep.witness == x
    assert all(rep.in_hulls)


def test_cr_thin_triangle():
    rng = random.Random(5)
    x, y, z = thin_triangle(random_marking(rng, 8), 6, rng)
    assert distance(x, y) == distance(y, z) == distance(x, z) == 6
    assert check_cr_family(x, y, z).passed


def test_convolution_of_deltas_has_ratio_one():
    rep = convolution_demo(3, 0, f={MU0: 1.0}, g={MU0: 2.0})
    assert rep.max_ratio == pytest.approx(1.0)
    m = random_marking(random.Random(6), 3)
    rep = convolution_demo(3, 0, f={m: 1.0})
    assert rep.max_ratio == pytest.approx(1.0)


def test_convolution_is_cauchy_schwarz_bounded():
    rep = convolution_demo(2, 20, seed=1)
    assert 1.0 <= rep.max_ratio <= np.sqrt(rep.support_f)


def test_convolution_regression():
    rep = convolution_demo(5, 100, seed=0)
    assert rep.max_ratio == pytest.approx(PINNED_CONV_RATIO, rel=1e-12)
    assert rep.max_ratio <= rep.bound
    with pytest.raises(ValueError):
        convolution_demo(9, 1)
