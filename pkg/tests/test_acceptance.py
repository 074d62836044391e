"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import math

import numpy as np
import pytest

from crouzeix_kit import closed_forms as cf
from crouzeix_kit import reference
from crouzeix_kit.blaschke import BlaschkeProduct, PseudoDisk, euclid_to_pseudo, pseudo_to_euclid
from crouzeix_kit.crouzeix import (
    build_bt,
    condition_product,
    crouzeix_inequality_test,
    cubic_roots,
    curve_series,
    inverse_norm_bound,
    paper_cubic,
    paper_xt,
    series_revert,
    similarity,
    similarity_residual,
    xstar_x_cubic,
)
from crouzeix_kit.disks import check_criterion, curve_gap, inscribed_center, inscribed_radius
from crouzeix_kit.levelset import lsc_check, random_blaschke
from crouzeix_kit.linalg import gram, hermitian_eig, jordan_block, singular_extremes
from crouzeix_kit.modelspace import MatrixFamilySpec, build_kms
from crouzeix_kit.numrange import VectorPath, boundary, kms_curve
from crouzeix_kit.repro import reproduce

HALF_SQRT2 = 1 / math.sqrt(2)


def grid(lo, hi, step):
    k = int(round((hi - lo) / step))
    return [round(lo + i * step, 10) for i in range(k + 1)]


def report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\ncriterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def paper_norms(family, m, ts):
    Xs = np.stack([paper_xt(MatrixFamilySpec(family, 4, t, m)) for t in ts])
    hi, lo = singular_extremes(Xs)
    return hi, 1.0 / lo


def test_criterion_01_n5_disk(capsys):
    ts = grid(0.0, 0.95, 0.01)
    rs, dev = [], 0.0
    for t in ts:
        rep = check_criterion(MatrixFamilySpec("kms", 5, t))
        rs.append(rep.pseudo.radius)
        C = kms_curve(5, t)
        c = inscribed_center(C)
        R = inscribed_radius(C, c)
        dev = max(dev, abs(c - cf.kms5_c(t)), abs(R - math.sqrt(cf.kms5_R2(t))),
                  abs(rep.pseudo.radius - cf.kms5_r(t)))
    r_half = rs[ts.index(0.5)]
    ok = min(rs) >= math.sqrt(3) / 2 - 1e-6 and abs(r_half - 0.873) <= 1e-3 and dev <= 1e-8
    report(capsys, 1, ok, f"min r={min(rs):.9f} r(0.5)={r_half:.6f} closed-form dev={dev:.2e}")


def test_criterion_02_psi(capsys):
    rs = [check_criterion(MatrixFamilySpec("psi", t=t)).pseudo.radius for t in grid(0.0, 0.95, 0.01)]
    bound = 2 ** (-1 / 3)
    report(capsys, 2, min(rs) >= bound - 1e-6, f"min r={min(rs):.9f} bound={bound:.9f}")


def test_criterion_03_phi_thresholds(capsys):
    worst = []
    for m in range(2, 8):
        r1 = check_criterion(MatrixFamilySpec("phi", t=reference.PHI_ONSET[m] + 0.01, m=m)).pseudo.radius
        r2 = check_criterion(MatrixFamilySpec("phi", t=reference.PHI_WEIGHTED_ONSET[m] + 0.01, m=m),
                             reference.phi_path(m)).pseudo.radius
        worst.append(min(r1, r2) - HALF_SQRT2)
    report(capsys, 3, min(worst) > 0, f"smallest margin over m=2..7: {min(worst):.5f}")


def test_criterion_04_limit(capsys):
    path = VectorPath(reference.PHI_LIMIT_WEIGHTS)
    gaps = []
    for m in (2, 3):
        r = check_criterion(MatrixFamilySpec("phi", t=0.9999 ** m, m=m), path).pseudo.radius
        gaps.append(abs(r - cf.phi_alt_ell(m)))
    ells = [cf.phi_alt_ell(m) for m in range(2, 11)]
    ok = max(gaps) <= 0.05 and min(ells) > HALF_SQRT2
    report(capsys, 4, ok, f"|r - l| max={max(gaps):.2e}; min l(2..10)={min(ells):.5f}")


def test_criterion_05_n11(capsys):
    gaps = []
    for t in grid(0.0, 0.9, 0.05):
        gaps.append(curve_gap(kms_curve(11, t), cf.kms11_c(t), cf.kms11_R(t) / (1 - t * t)))
    report(capsys, 5, min(gaps) >= -1e-9, f"min gap={min(gaps):.3e}")


def test_criterion_06_inverse_norms(capsys):
    lines, ok = [], True
    ts = grid(0.0, 0.363, 0.001)
    hi, inv = paper_norms("kms", None, ts)
    spec = MatrixFamilySpec("kms", 4, 0.363)
    bound = inverse_norm_bound(spec)
    true_at = condition_product(spec, "paper_formula").norm_x_inv
    # 1.9999 is a bound on the inverse norm; the computed norm sits below it
    ok &= bool(np.abs(hi - 1).max() <= 1e-8 and inv.max() <= 2.0)
    ok &= 1.99 < bound < 2.0001 and true_at <= bound < 2
    lines.append(f"kms: |X|-1 <= {np.abs(hi - 1).max():.1e}, max|X^-1|={inv.max():.5f}, "
                 f"bound(0.363)={bound:.5f}, |X_0.363^-1|={true_at:.5f}")
    for m, (K, t_star) in sorted(reference.INVERSE_NORM_TABLE.items()):
        hi, inv = paper_norms("atm", m, grid(0.0, t_star, 0.001))
        b = inverse_norm_bound(MatrixFamilySpec("atm", 4, t_star, m))
        ok &= bool(hi.max() <= 1 + 1e-8 and inv.max() <= 2.0) and 1.99 < b < 2.0001 and inv.max() <= b
        lines.append(f"m={m}: max|X^-1|={inv.max():.5f} bound({t_star})={b:.5f}")
    wide = grid(0.0, 0.95, 0.001)
    K_worst = max(paper_norms(f, m, wide)[1].max() for f, m in [("kms", None), ("atm", 2), ("atm", 3), ("atm", 4)])
    K_bound = max(inverse_norm_bound(MatrixFamilySpec(f, 4, 0.0, m), 1.0)
                  for f, m in [("kms", None), ("atm", 2), ("atm", 3), ("atm", 4)])
    ok &= K_worst <= 2.83 and K_bound <= 2.83
    lines.append(f"on [0,0.95] max|X^-1|={K_worst:.5f}, bound on [0,1]={K_bound:.5f}")
    report(capsys, 6, ok, "; ".join(lines))


def test_criterion_07_cubic_oracle(capsys):
    dev = 0.0
    for family, m in [("kms", None), ("atm", 2), ("atm", 3), ("atm", 4)]:
        for t in grid(0.0, 0.95, 0.05):
            spec = MatrixFamilySpec(family, 4, t, m)
            X = paper_xt(spec)
            w = np.sort(hermitian_eig(gram(X)).eigenvalues)
            for cs in (xstar_x_cubic(X), cubic_roots(*paper_cubic(spec))):
                got = np.sort(np.append(cs.roots, 1.0))
                dev = max(dev, float(np.abs(got - w).max()))
    report(capsys, 7, dev <= 1e-8, f"max root deviation={dev:.2e}")


def test_criterion_08_tables(capsys):
    lines, ok = [], True
    for name in ("table-1", "fig-xt1"):
        tab = reproduce(name)
        ok &= tab.ok and len(tab.rows) == (9 if name == "table-1" else 3)
        dp = max(abs(r[3] - r[2]) for r in tab.rows)
        di = max(abs(r[5] - r[4]) for r in tab.rows)
        lines.append(f"{name}: {len(tab.rows) - tab.misses}/{len(tab.rows)} rows, "
                     f"max |dproduct|={dp:.3f}, max |dinterval|={di:.3f}")
    report(capsys, 8, ok, "; ".join(lines))


def test_criterion_09_end_to_end(capsys):
    ok, worst_gap, worst_ratio = True, -np.inf, 0.0
    for t in grid(0.0, 0.35, 0.05):
        spec = MatrixFamilySpec("kms", 4, t)
        ratio = crouzeix_inequality_test(spec, trials=200, max_degree=6, seed=0)
        prod = condition_product(spec, "paper_formula").product
        ok &= ratio <= prod + 1e-6 and ratio <= 2.0
        worst_gap = max(worst_gap, ratio - prod)
        worst_ratio = max(worst_ratio, ratio)
    report(capsys, 9, ok, f"max ratio={worst_ratio:.5f}, max(ratio - product)={worst_gap:.4f}")


def test_criterion_10_lsc(capsys):
    rng = np.random.default_rng(2024)
    fixed = [lsc_check(BlaschkeProduct(tz), BlaschkeProduct(bz))
             for tz, bz in reference.LSC_CASES.values()]
    ok = all(r.satisfied for r in fixed)
    count, smallest = 0, np.inf
    for n in (3, 4, 5):
        for t in (0.3, 0.7):
            theta = BlaschkeProduct((t,) * n)
            for _ in range(100):
                b = random_blaschke(int(rng.integers(1, n)), rng)
                rep = lsc_check(theta, b)
                ok &= rep.satisfied
                count += 1
                smallest = min(smallest, rep.max_abs_b)
    report(capsys, 10, ok, f"3 figure cases + {count} random pairs; smallest max|B|={smallest:.4f}")


def test_criterion_11_structure(capsys):
    rng = np.random.default_rng(7)
    rt = 0.0
    for _ in range(1000):
        z0 = 0.95 * math.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
        r = rng.uniform(0.01, 0.99)
        back = euclid_to_pseudo(pseudo_to_euclid(PseudoDisk(z0, r)))
        rt = max(rt, abs(back.center - z0), abs(back.radius - r))
    jordan = rev = 0.0
    for n in range(3, 12):
        for t in grid(0.0, 0.9, 0.1):
            for family, m in [("kms", None)] + ([("atm", 2), ("atm", 3)] if n >= 4 else []):
                spec = MatrixFamilySpec(family, n, t, m)
                _, B, _ = build_bt(spec)
                jordan = max(jordan, similarity_residual(similarity(spec), B))
                _, F = curve_series(spec)
                comp = np.array(F.compose(series_revert(F, n - 1), n - 1).coeffs)
                rev = max(rev, float(np.abs(comp - np.eye(n)[1]).max()))
    ident = 0.0
    for n in range(2, 12):
        for t in grid(0.0, 0.95, 0.05):
            M = MatrixFamilySpec("theta", n, t).matrix()
            ident = max(ident, float(np.abs(M - (t * np.eye(n) + (1 - t * t) * build_kms(n, t))).max()))
    j2 = float(np.abs(np.abs(boundary(jordan_block(2), 720).points) - 0.5).max())
    ok = rt <= 1e-12 and jordan <= 1e-10 and rev <= 1e-12 and ident <= 1e-14 and j2 <= 1e-8
    report(capsys, 11, ok, f"round trip={rt:.1e} jordan={jordan:.1e} reversion={rev:.1e} "
                           f"identity={ident:.1e} J_2 circle={j2:.1e}")
