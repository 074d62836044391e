"""Small dense complex linear algebra.

Everything here targets matrices of dimension at most 16.  The Hermitian
eigensolver is a cyclic Jacobi iteration written against numpy arrays; it
accepts a stack of matrices of shape ``(..., n, n)`` and rotates the whole
stack at once, which is how boundary sweeps and parameter scans get their
speed.  Operator norms are square roots of the extreme eigenvalues of
``A^* A``.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    DimensionTooLargeError,
    InputError,
    NonHermitianError,
    NotSingleBlockError,
)
from .tolerances import MAX_DIMENSION, STRUCTURAL_ZERO

_MAX_SWEEPS = 60


class HermitianSpectrum(NamedTuple):
    """Eigenvalues sorted descending; eigenvectors are the matching columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_square(A, name: str = "matrix") -> np.ndarray:
    """Validate and convert to a complex square array (stacks allowed)."""
    M = np.asarray(A, dtype=complex)
    if M.ndim < 2 or M.shape[-1] != M.shape[-2] or M.shape[-1] < 1:
        raise DimensionMismatchError(f"{name} must be square, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise InputError(f"{name} has non-finite entries")
    return M


def jordan_block(n: int) -> np.ndarray:
    """The n x n nilpotent Jordan block (ones on the first superdiagonal)."""
    return np.eye(n, k=1, dtype=complex)


def _check_hermitian(H: np.ndarray) -> None:
    n = H.shape[-1]
    if n > MAX_DIMENSION:
        raise DimensionTooLargeError(f"dimension {n} exceeds {MAX_DIMENSION}")
    asym = np.abs(H - np.conj(np.swapaxes(H, -1, -2)))
    if asym.size and asym.max() > STRUCTURAL_ZERO:
        raise NonHermitianError(f"asymmetry {asym.max():.3e} exceeds {STRUCTURAL_ZERO}")


def _jacobi(H: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic complex Jacobi on a stack ``(K, n, n)``; returns (diag, V)."""
    H = H.copy()
    K, n, _ = H.shape
    V = np.broadcast_to(np.eye(n, dtype=complex), (K, n, n)).copy()
    # enforce exact Hermitian symmetry before rotating
    H = 0.5 * (H + np.conj(np.swapaxes(H, -1, -2)))
    if n == 1:
        return H[:, :, 0].real.copy(), V
    scale = np.sqrt(np.sum(np.abs(H) ** 2, axis=(1, 2)))
    tiny = np.finfo(float).tiny
    stop = np.maximum(scale, tiny) * 1e-17
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    for _ in range(_MAX_SWEEPS):
        off = np.sqrt(np.sum(np.abs(np.triu(H, 1)) ** 2, axis=(1, 2)))
        active = off > stop
        if not active.any():
            break
        idx = np.nonzero(active)[0]
        h = H[idx]
        v = V[idx]
        for p, q in pairs:
            c = h[:, p, q]
            mag = np.abs(c)
            rot = mag > tiny
            if not rot.any():
                continue
            phase = np.where(rot, c / np.where(rot, mag, 1.0), 1.0)
            app = h[:, p, p].real
            aqq = h[:, q, q].real
            safe = np.where(rot, mag, 1.0)
            zeta = (aqq - app) / (2.0 * safe)
            tn = np.sign(zeta) / (np.abs(zeta) + np.hypot(1.0, zeta))
            tn = np.where(zeta == 0.0, 1.0, tn)
            tn = np.where(rot, tn, 0.0)
            cs = 1.0 / np.sqrt(1.0 + tn * tn)
            sn = tn * cs
            # G = diag(1, conj(phase)) @ [[cs, sn], [-sn, cs]]
            d = np.conj(phase)
            g00 = cs.astype(complex)
            g01 = sn.astype(complex)
            g10 = -sn * d
            g11 = cs * d
            # columns p, q
            colp = h[:, :, p].copy()
            colq = h[:, :, q]
            h[:, :, p] = colp * g00[:, None] + colq * g10[:, None]
            h[:, :, q] = colp * g01[:, None] + colq * g11[:, None]
            # rows p, q with G^H
            rowp = h[:, p, :].copy()
            rowq = h[:, q, :]
            h[:, p, :] = np.conj(g00)[:, None] * rowp + np.conj(g10)[:, None] * rowq
            h[:, q, :] = np.conj(g01)[:, None] * rowp + np.conj(g11)[:, None] * rowq
            h[:, p, q] = 0.0
            h[:, q, p] = 0.0
            h[:, p, p] = h[:, p, p].real
            h[:, q, q] = h[:, q, q].real
            vp = v[:, :, p].copy()
            vq = v[:, :, q]
            v[:, :, p] = vp * g00[:, None] + vq * g10[:, None]
            v[:, :, q] = vp * g01[:, None] + vq * g11[:, None]
        H[idx] = h
        V[idx] = v
    return np.real(np.diagonal(H, axis1=1, axis2=2)).copy(), V


def hermitian_eig(H) -> HermitianSpectrum:
    """Eigendecomposition of a Hermitian matrix or a stack of them.

    Eigenvalues come back sorted in descending order.  Each eigenvector is
    normalized so that its largest-modulus component is real and positive,
    which makes the output deterministic for identical input.
    """
    M = as_square(H, "H")
    _check_hermitian(M)
    batch_shape = M.shape[:-2]
    n = M.shape[-1]
    flat = M.reshape((-1, n, n))
    w, V = _jacobi(flat)
    order = np.argsort(-w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    V = np.take_along_axis(V, order[:, None, :], axis=2)
    pivot = np.argmax(np.abs(V), axis=1)
    lead = np.take_along_axis(V, pivot[:, None, :], axis=1)
    V = V * (np.conj(lead) / np.abs(lead))
    return HermitianSpectrum(w.reshape(batch_shape + (n,)), V.reshape(batch_shape + (n, n)))


def gram(A) -> np.ndarray:
    """``A^* A`` (works on stacks)."""
    M = as_square(A)
    return np.conj(np.swapaxes(M, -1, -2)) @ M


def singular_extremes(A) -> tuple[np.ndarray, np.ndarray]:
    """Largest and smallest singular values of A (or of each matrix in a stack)."""
    M = as_square(A)
    n = M.shape[-1]
    if n > MAX_DIMENSION:
        raise DimensionTooLargeError(f"dimension {n} exceeds {MAX_DIMENSION}")
    w = hermitian_eig(gram(M)).eigenvalues
    hi = np.sqrt(np.clip(w[..., 0], 0.0, None))
    lo = np.sqrt(np.clip(w[..., -1], 0.0, None))
    return hi, lo


def operator_norm(A):
    """Spectral norm: the square root of the top eigenvalue of ``A^* A``."""
    hi, _ = singular_extremes(A)
    return float(hi) if np.ndim(hi) == 0 else hi


def inverse_norm(A):
    """``||A^{-1}||`` as the reciprocal of the smallest singular value."""
    _, lo = singular_extremes(A)
    with np.errstate(divide="ignore"):
        out = 1.0 / lo
    return float(out) if np.ndim(out) == 0 else out


def matrix_polynomial(coeffs: Sequence[complex], A) -> np.ndarray:
    """Evaluate ``sum(coeffs[k] * A**k)`` by Horner's rule."""
    coeffs = list(coeffs)
    if not coeffs:
        raise InputError("coefficient list must be nonempty")
    M = as_square(A)
    n = M.shape[-1]
    eye = np.eye(n, dtype=complex)
    out = np.broadcast_to(coeffs[-1] * eye, M.shape).astype(complex)
    for c in reversed(coeffs[:-1]):
        out = out @ M + c * eye
    return out


def jordan_chain_nilpotent(B) -> np.ndarray:
    """Similarity X with ``X @ J_n @ inv(X) == B`` for a single-block nilpotent B.

    B must be strictly upper triangular with a nonvanishing first
    superdiagonal.  With ``v = e_n`` the columns of X are
    ``B^{n-1} v, ..., B v, v``.
    """
    M = as_square(B, "B")
    if M.ndim != 2:
        raise DimensionMismatchError("expected a single matrix")
    n = M.shape[0]
    scale = max(1.0, float(np.abs(M).max()))
    if np.abs(np.tril(M)).max() > STRUCTURAL_ZERO * scale:
        raise NotSingleBlockError("B is not strictly upper triangular")
    if n > 1 and np.abs(np.diagonal(M, 1)).min() <= STRUCTURAL_ZERO:
        raise NotSingleBlockError("a superdiagonal entry of B vanishes")
    M = np.triu(M, 1)
    cols = [np.eye(n, dtype=complex)[:, -1]]
    for _ in range(n - 1):
        cols.append(M @ cols[-1])
    return np.column_stack(cols[::-1])


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Unitary from orthonormalizing a complex Gaussian matrix."""
    Z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    Q, R = np.linalg.qr(Z)
    return Q * (np.diag(R) / np.abs(np.diag(R)))
