import json

import numpy as np
import pytest
from matplotlib.path import Path

from crouzeix_kit import reference
from crouzeix_kit.blaschke import BlaschkeProduct, evaluate
from crouzeix_kit.errors import DegreeOrderError, InputError, RangeNotInDiskError
from crouzeix_kit.levelset import level_set_boundary, lsc_check, max_modulus_on_range, random_blaschke
from crouzeix_kit.linalg import jordan_block
from crouzeix_kit.modelspace import build_model_matrix
from crouzeix_kit.numrange import boundary


def test_jordan_block_identity():
    val, w = max_modulus_on_range(jordan_block(2), BlaschkeProduct((0,)))
    assert val == pytest.approx(0.5, abs=1e-12)
    assert abs(w) == pytest.approx(0.5, abs=1e-12)


def test_trivial_theta():
    rep = lsc_check(BlaschkeProduct((0, 0)), BlaschkeProduct((0,)))
    assert rep.max_abs_b == pytest.approx(0.5, abs=1e-12)
    assert rep.satisfied


@pytest.mark.parametrize("key", sorted(reference.LSC_CASES))
def test_published_configurations(key):
    tz, bz = reference.LSC_CASES[key]
    rep = lsc_check(BlaschkeProduct(tz), BlaschkeProduct(bz))
    assert rep.satisfied and rep.margin > 0.05
    assert abs(evaluate(rep.b, rep.witness)) == pytest.approx(rep.max_abs_b, abs=1e-12)
    d = json.loads(rep.to_json())
    assert d["satisfied"] is True


def test_degree_order():
    theta, b = BlaschkeProduct((0.1, 0.2)), BlaschkeProduct((0.3, 0.4))
    with pytest.raises(DegreeOrderError):
        lsc_check(theta, b)
    with pytest.warns(UserWarning):
        rep = lsc_check(theta, b, strict=False)
    assert 0 < rep.max_abs_b < 1


def test_range_must_sit_in_disk():
    with pytest.raises(RangeNotInDiskError):
        max_modulus_on_range(np.diag([0.0, 1.0]), BlaschkeProduct((0.2,)))


def test_contour_of_z_is_circle():
    lines = level_set_boundary(BlaschkeProduct((0,)), 0.5, grid=512)
    pts = np.concatenate(lines)
    assert np.abs(np.abs(pts) - 0.5).max() <= 2 / 512


def test_contour_arguments():
    with pytest.raises(InputError):
        level_set_boundary(BlaschkeProduct((0,)), 1.0)
    with pytest.raises(InputError):
        level_set_boundary(BlaschkeProduct((0,)), 0.5, grid=10)


def test_contour_separates_sublevel_set():
    B = BlaschkeProduct(reference.LSC_CASES["a"][1])
    lines = [ln for ln in level_set_boundary(B, 0.5) if len(ln) > 3]
    rng = np.random.default_rng(3)
    r = np.sqrt(rng.uniform(size=4000)) * 0.97
    z = r * np.exp(2j * np.pi * rng.uniform(size=4000))
    inside_any = np.zeros(z.size, bool)
    for ln in lines:
        inside_any ^= Path(np.column_stack([ln.real, ln.imag])).contains_points(np.column_stack([z.real, z.imag]))
    truth = np.abs(evaluate(B, z)) < 0.5
    assert (inside_any == truth).mean() >= 0.999


def test_shrinking_range_lowers_maximum():
    tz, bz = reference.LSC_CASES["b"]
    A = build_model_matrix(tz)
    B = BlaschkeProduct(bz)
    assert max_modulus_on_range(0.8 * A, B)[0] <= max_modulus_on_range(A, B)[0] + 1e-12


def test_random_products_against_dense_oracle():
    # oracle: |B| on a dense boundary sample plus random interior convex combinations
    rng = np.random.default_rng(11)
    for _ in range(50):
        theta = random_blaschke(int(rng.integers(2, 6)), rng)
        b = random_blaschke(int(rng.integers(1, theta.degree)), rng)
        A = build_model_matrix(theta.zeros)
        val, _ = max_modulus_on_range(A, b, 720)
        dense = boundary(A, 8192).points
        w = rng.dirichlet(np.ones(3), size=500)
        interior = (w * dense[rng.integers(0, dense.size, size=(500, 3))]).sum(axis=1)
        assert np.abs(evaluate(b, dense)).max() <= val + 1e-6
        assert np.abs(evaluate(b, interior)).max() <= val + 1e-9


def test_random_blaschke_zeros():
    B = random_blaschke(7, np.random.default_rng(0), 0.5)
    assert B.degree == 7 and max(abs(z) for z in B.zeros) <= 0.5
