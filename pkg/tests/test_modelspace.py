import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from crouzeix_kit.errors import InputError, ParameterOutOfRangeError, ZeroOutsideDiskError
from crouzeix_kit.linalg import operator_norm
from crouzeix_kit.modelspace import (
    MatrixFamilySpec,
    build_atm,
    build_kms,
    build_model_matrix,
    kms_identity_residual,
)


def test_repeated_half_zero():
    M = build_model_matrix([0.5] * 3)
    expected = np.array([[0.5, 0.75, -0.375], [0, 0.5, 0.75], [0, 0, 0.5]])
    assert np.allclose(M, expected, atol=1e-15)


@given(st.lists(st.builds(complex, st.floats(-0.65, 0.65), st.floats(-0.65, 0.65)), min_size=1, max_size=7))
def test_model_matrix_is_class_sn(zeros):
    # contraction with eigenvalues at the zeros and rank-one defect I - M^* M
    M = build_model_matrix(zeros)
    n = len(zeros)
    assert np.allclose(np.diag(M), zeros)
    assert operator_norm(M) <= 1 + 1e-12
    D = np.eye(n) - M.conj().T @ M
    s = np.linalg.svd(D, compute_uv=False)
    assert s[1:].max(initial=0) < 1e-10


def test_zero_outside():
    with pytest.raises(ZeroOutsideDiskError):
        build_model_matrix([0.2, 1.0])


@given(st.integers(2, 11), st.floats(0, 0.999))
def test_kms_identity(n, t):
    assert kms_identity_residual(n, t) <= 1e-14


def test_kms_entries():
    A = build_kms(4, 0.5)
    assert A[0].tolist() == [0, 1, -0.5, 0.25]
    assert np.all(np.tril(A) == 0)


def test_atm_entries():
    A = build_atm(4, 3, 0.5)
    expected = [[0, 1, 0.5, 0.125], [0, 0, 1, 0.5], [0, 0, 0, 1], [0, 0, 0, 0]]
    assert A.real.tolist() == expected
    with pytest.raises(ParameterOutOfRangeError):
        build_atm(3, 2, 0.5)


def test_spec_shorthands():
    phi = MatrixFamilySpec("phi", t=0.25, m=2)
    assert phi.n == 3 and phi.blaschke_zeros() == (0.25, 0.25, 0.5)
    psi = MatrixFamilySpec("psi", t=0.25)
    assert psi.blaschke_zeros() == (0.25, 0.25, 0.25, 0.5)
    theta = MatrixFamilySpec("theta", 5, 0.3)
    assert np.allclose(theta.matrix(), build_model_matrix([0.3] * 5))
    assert MatrixFamilySpec("kms", 5, 0.3).blaschke().zeros == (0.3,) * 5


def test_spec_json_round_trip():
    for spec in (MatrixFamilySpec("atm", 5, 0.4, 3), MatrixFamilySpec("mtheta", zeros=(0.1 - 0.2j, 0.5))):
        assert MatrixFamilySpec.from_json(spec.to_json()) == spec


def test_spec_validation():
    with pytest.raises(InputError):
        MatrixFamilySpec("nope", 3, 0.1)
    with pytest.raises(ParameterOutOfRangeError):
        MatrixFamilySpec("kms", 4, 1.0)
    with pytest.raises(ParameterOutOfRangeError):
        MatrixFamilySpec("atm", 4, 0.1)
    with pytest.raises(InputError):
        MatrixFamilySpec("mtheta")
    with pytest.raises(InputError):
        MatrixFamilySpec("kms", 4, 0.2).blaschke_zeros()


def test_with_t_and_label():
    spec = MatrixFamilySpec("atm", 4, 0.0, 5).with_t(0.3)
    assert spec.t == 0.3 and spec.label() == "atm(n=4,m=5,t=0.3)"
    assert math.isclose(spec.matrix()[0, 3].real, 0.3**5)
