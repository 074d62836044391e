import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from crouzeix_kit import closed_forms as cf
from crouzeix_kit.blaschke import EuclideanDisk, euclid_to_pseudo
from crouzeix_kit.closed_forms import closed_form, names, paper_curve_coeffs
from crouzeix_kit.crouzeix import charpoly, deflate_unit_root, paper_xt
from crouzeix_kit.errors import InputError, UnknownFormulaError
from crouzeix_kit.modelspace import MatrixFamilySpec, build_kms
from crouzeix_kit.numrange import TrigCurve, VectorPath, curve_from_path, kms_curve
from crouzeix_kit.reference import PHI_LIMIT_WEIGHTS

T_GRID = [0.0, 0.05, 0.3, 0.55, 0.8, 0.95]
ts = st.floats(0.0, 0.98)
ss = st.floats(0.0, 2 * math.pi)


def _pad(c, k):
    out = np.zeros(k, dtype=complex)
    out[: len(c)] = c
    return out


@pytest.mark.parametrize("t", T_GRID)
def test_transcribed_curves_match_pipeline(t):
    pairs = [("kms5", None, build_kms(5, t), None)]
    for m in (1, 2, 5):
        A = MatrixFamilySpec("phi", t=t, m=m).matrix()
        pairs.append(("phi", m, A, None))
        pairs.append(("phi_alt", m, A, VectorPath(PHI_LIMIT_WEIGHTS)))
    pairs.append(("psi", None, MatrixFamilySpec("psi", t=t).matrix(), None))
    for name, m, A, path in pairs:
        want = paper_curve_coeffs(name, t, m)
        got = curve_from_path(A, path).coeffs
        k = max(len(want), len(got))
        assert np.allclose(_pad(want, k), _pad(got, k), atol=1e-14), name


@given(ts, ss)
def test_kms5_distance_decomposition(t, s):
    f = TrigCurve(paper_curve_coeffs("kms5", t))
    lhs = abs(f(s) - closed_form("kms5.c", t)) ** 2
    rhs = closed_form("kms5.R2", t) + closed_form("kms5.g", t, x=math.cos(s))
    assert lhs == pytest.approx(rhs, abs=1e-12)


@given(ts)
def test_kms5_g_vanishes_at_ends(t):
    assert closed_form("kms5.g", t, x=1.0) == 0.0
    assert closed_form("kms5.g", t, x=-1.0) == 0.0


@given(ts, st.floats(-1, 1))
def test_kms5_g_nonnegative(t, x):
    assert closed_form("kms5.g", t, x=x) >= -1e-15


@given(ts)
def test_kms5_radius_formula_matches_conversion(t):
    c = t + (1 - t * t) * closed_form("kms5.c", t)
    R = (1 - t * t) * closed_form("kms5.R", t)
    assert closed_form("kms5.r", t) == pytest.approx(euclid_to_pseudo(EuclideanDisk(c, R)).radius, abs=1e-10)


def test_kms5_base_values():
    assert closed_form("kms5.r", 0.0) == pytest.approx(math.sqrt(3) / 2, abs=1e-15)
    assert closed_form("kms5.R", 0.5) == pytest.approx(0.938194, abs=1e-6)


@given(st.floats(0.0, 0.97), ss)
def test_psi_distance_decomposition(t, s):
    f = TrigCurve(paper_curve_coeffs("psi", t))
    lhs = abs(f(s) - closed_form("psi.c", t)) ** 2 - closed_form("psi.R2", t)
    rhs = (t - 1) ** 2 * (t + 1) / 80 * closed_form("psi.g", t, x=math.cos(s))
    assert lhs == pytest.approx(rhs, abs=1e-9)


@given(ts, st.integers(1, 9))
def test_phi_center_and_radius(t, m):
    f = TrigCurve(paper_curve_coeffs("phi", t, m))
    assert closed_form("phi.c", t, m) == pytest.approx(0.5 * (f(0) + f(math.pi)).real, abs=1e-14)
    d = np.abs(f(np.linspace(0, 2 * np.pi, 4001)) - closed_form("phi.c", t, m)).min()
    assert d >= closed_form("phi.R", t, m) - 1e-12
    g = TrigCurve(paper_curve_coeffs("phi_alt", t, m))
    assert closed_form("phi_alt.c", t, m) == pytest.approx(0.5 * (g(0) + g(math.pi)).real, abs=1e-14)
    d = np.abs(g(np.linspace(0, 2 * np.pi, 4001)) - closed_form("phi_alt.c", t, m)).min()
    assert d >= closed_form("phi_alt.R", t, m) - 1e-12


@given(st.floats(0.0, 0.95), st.integers(1, 9))
def test_phi_alt_radius_formula(t, m):
    c, R = closed_form("phi_alt.c", t, m), closed_form("phi_alt.R", t, m)
    assert closed_form("phi_alt.r", t, m) == pytest.approx(euclid_to_pseudo(EuclideanDisk(c, R)).radius, abs=1e-9)


def test_limit_function():
    for m in range(2, 11):
        assert closed_form("phi_alt.ell", m=m) > 1 / math.sqrt(2)
    # ell(m) is the t -> 1 limit of the pseudo radius
    for m in (2, 3):
        assert closed_form("phi_alt.r", 0.999999**m, m) == pytest.approx(closed_form("phi_alt.ell", m=m), abs=1e-3)


@given(ts)
def test_kms11_radius_has_cos_pi_12_pseudo_radius(t):
    C = kms_curve(11, t)
    c = 0.5 * (C(0) + C(math.pi)).real
    assert c == pytest.approx(closed_form("kms11.c", t), abs=1e-12)
    shifted = t + (1 - t * t) * c
    r = euclid_to_pseudo(EuclideanDisk(shifted, closed_form("kms11.R", t))).radius
    assert r == pytest.approx(math.cos(math.pi / 12), abs=1e-9)


@pytest.mark.parametrize("t", T_GRID)
def test_cubics_match_characteristic_polynomial(t):
    for family, m in (("kms", None), ("atm", 2), ("atm", 3), ("atm", 4)):
        X = paper_xt(MatrixFamilySpec(family, 4, t, m))
        q = deflate_unit_root(charpoly(X.conj().T @ X).real)
        coeffs = cf.xkms_cubic(t) if family == "kms" else cf.xatm_cubic(t, m)
        assert np.allclose(np.asarray(coeffs) / 102400, q, atol=1e-12)


@pytest.mark.parametrize("t", T_GRID)
def test_displayed_amplitudes(t):
    a, b, c, d = cf.xkms_cubic(t)
    p = (3 * a * c - b * b) / (3 * a * a)
    assert cf.xkms_amplitude_display(t) == pytest.approx(2 * math.sqrt(-p / 3), abs=1e-12)
    for m in (2, 3, 4, 6):
        a, b, c, d = cf.xatm_cubic(t, m)
        p = (3 * a * c - b * b) / (3 * a * a)
        assert closed_form("xatm.amplitude", t, m) == pytest.approx(2 * math.sqrt(-p / 3), abs=1e-12)
        assert closed_form("xatm.shift", t, m) == pytest.approx(-b / (3 * a), abs=1e-12)


def test_amplitude_bound_below_035():
    assert max(cf.xkms_amplitude_display(t) for t in np.linspace(0, 1, 101)) < 0.35


def test_registry_errors():
    assert "kms5.r" in names()
    with pytest.raises(UnknownFormulaError):
        closed_form("nope", 0.1)
    with pytest.raises(InputError):
        closed_form("phi.c", 0.1)
    with pytest.raises(InputError):
        closed_form("kms5.c", 1.5)
