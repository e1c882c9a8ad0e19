"""One test per acceptance criterion, run against the frozen constants.

Sweeps use seed 7, which played no part in calibration (seeds 0 to 4).
Each test records a PASS/FAIL line that is printed in the terminal summary.
"""
import time

import numpy as np
import pytest

from rdcentroid import suites
from rdcentroid.config import get_config
from rdcentroid.farey import farey_distances_from
from rdcentroid.rdlab import convolution_demo

from conftest import ACCEPTANCE
from oracles import box_distance_matrix

SEED = 7
PINNED_CONV_RATIO = 3.581871491532094


def record(n, ok, detail):
    ACCEPTANCE[n] = ("PASS" if ok else "FAIL", detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def run(rep, budget):
    ok = rep.passed and rep.seconds < budget
    return ok, f"{rep.suite}: {rep.samples} samples, {len(rep.violations)} violations, {rep.seconds:.1f}s (< {budget}s), observed {rep.observed}"


def test_criterion_01_farey_oracle():
    t0 = time.perf_counter()
    verts, dist = box_distance_matrix(40)
    mismatches = 0
    for i, a in enumerate(verts):
        got = np.array(farey_distances_from(a, verts[i:]))
        mismatches += int(np.count_nonzero(got != dist[i, i:]))
    secs = time.perf_counter() - t0
    pairs = len(verts) * (len(verts) + 1) // 2
    record(1, mismatches == 0 and secs < 60,
           f"{len(verts)} slopes, {pairs} pairs, {mismatches} mismatches, {secs:.1f}s (< 60s)")


def test_criterion_02_hyperbolic_centroids():
    cfg = get_config()
    rep = suites.suite_farey(1000, seed=SEED)
    ok, detail = run(rep, 120)
    record(2, ok, f"rho_min={cfg.rho_min} D={cfg.D_rho}; {detail}")


def test_criterion_03_behrstock():
    rep = suites.suite_behrstock(10_000, seed=SEED)
    ok, detail = run(rep, 120)
    record(3, ok, f"m0={get_config().m0}; {detail}")


def test_criterion_04_bounded_geodesic_image():
    rep = suites.suite_geodesic_image(1000, seed=SEED)
    ok, detail = run(rep, 120)
    record(4, ok, f"B={get_config().B}; {detail}")


def test_criterion_05_partial_order():
    rep = suites.suite_order(500, seed=SEED)
    ok, detail = run(rep, 600)
    record(5, ok and rep.observed["instances"] == 500, detail)


def test_criterion_06_centroid_properties():
    rep = suites.suite_centroid(200, seed=SEED)
    ok, detail = run(rep, 600)
    record(6, ok and rep.observed["perm_failures"] == 0, f"ceilings {rep.ceilings}; {detail}")


def test_criterion_07_census_growth():
    rep = suites.suite_census(5, seed=SEED, radii=range(3, 11))
    e = rep.observed["pooled_exponent"]
    ok, detail = run(rep, 1800)
    record(7, ok and 0.4 <= e <= 1.6, f"census_b={get_config().census_b}; {detail}")


def test_criterion_08_counting_machinery():
    q = suites.suite_construct_q(6, seed=SEED, radii=(2, 4, 6, 8))
    cover = suites.suite_cover(20, seed=SEED)
    ok_q, dq = run(q, 1800)
    ok_c, dc = run(cover, 1800)
    total = q.seconds + cover.seconds
    record(8, ok_q and ok_c and total < 1800 and cover.observed["truncated"] == 0,
           f"{dq} | {dc} | total {total:.1f}s")


def test_criterion_09_ds_cr_convolution():
    ds = suites.suite_ds(3, seed=SEED, g_length=12, max_length=8)
    cr = suites.suite_cr(50, seed=SEED, d=6)
    t0 = time.perf_counter()
    conv = convolution_demo(5, 100, seed=0)
    conv_secs = time.perf_counter() - t0
    conv_ok = conv.max_ratio == pytest.approx(PINNED_CONV_RATIO, rel=1e-12) and conv.max_ratio <= conv.bound
    total = ds.seconds + cr.seconds + conv_secs
    ok_ds, d1 = run(ds, 900)
    ok_cr, d2 = run(cr, 900)
    record(9, ok_ds and ok_cr and conv_ok and total < 900,
           f"{d1} | {d2} | convolution ratio {conv.max_ratio:.6f} (pinned {PINNED_CONV_RATIO:.6f}, bound {conv.bound:.2f}) | total {total:.1f}s")


def test_criterion_10_stage_two_gate():
    ACCEPTANCE[10] = ("SKIP", "optional: no S_0_5 backend is built")
    pytest.skip("optional criterion: no S_0_5 backend is built")
