"""Numerical ranges: boundary sweeps and trigonometric curves inside W(A).

A unit-vector path ``x(s)`` with components ``w_l * exp(i f_l s)`` traces the
curve ``s -> <A x(s), x(s)>``.  Entry ``A[i, j]`` contributes
``A[i, j] w_i w_j`` at frequency ``f_j - f_i``, so the curve is a finite
trigonometric polynomial whose coefficients are read off the matrix entries
directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatchError, InputError, NotUnitVectorError, ParameterOutOfRangeError
from .linalg import as_square, hermitian_eig


@dataclass(frozen=True)
class TrigCurve:
    """``s -> sum_k coeffs[k] * exp(i k s)`` for k = 0..K."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex)).copy()
        if c.ndim != 1 or not np.all(np.isfinite(c)):
            raise InputError("curve coefficients must be a finite 1-d sequence")
        if c.size < 2:
            c = np.concatenate([c, np.zeros(2 - c.size, dtype=complex)])
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, s):
        return curve_eval(self, s)

    def affine(self, shift: complex, scale: complex) -> "TrigCurve":
        """The curve ``shift + scale * C``."""
        c = scale * self.coeffs
        c[0] += shift
        return TrigCurve(c)

    def has_real_coefficients(self, tol: float = 1e-12) -> bool:
        return bool(np.all(np.abs(self.coeffs.imag) <= tol))


def curve_eval(C: TrigCurve, s):
    s = np.asarray(s, dtype=float)
    z = np.exp(1j * s)
    out = np.zeros(s.shape, dtype=complex)
    for c in C.coeffs[::-1]:
        out = out * z + c
    return complex(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class VectorPath:
    """Unit-vector path ``x_l(s) = weights[l] * exp(i * frequencies[l] * s)``."""

    weights: tuple[float, ...]
    frequencies: tuple[int, ...] | None = None

    def __post_init__(self):
        w = tuple(float(x) for x in self.weights)
        if any(x < 0 for x in w):
            raise InputError("path weights must be nonnegative")
        if abs(math.fsum(x * x for x in w) - 1.0) > 1e-12:
            raise NotUnitVectorError(f"path weights have squared norm {math.fsum(x * x for x in w)!r}")
        f = tuple(range(len(w))) if self.frequencies is None else tuple(int(k) for k in self.frequencies)
        if len(f) != len(w):
            raise DimensionMismatchError("weights and frequencies differ in length")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "frequencies", f)

    @classmethod
    def canonical(cls, n: int) -> "VectorPath":
        """Weights ``sqrt(2/(n+1)) sin(l pi/(n+1))``, frequencies 0..n-1."""
        w = [math.sqrt(2.0 / (n + 1)) * math.sin(l * math.pi / (n + 1)) for l in range(1, n + 1)]
        norm = math.sqrt(math.fsum(x * x for x in w))
        return cls(tuple(x / norm for x in w))

    @classmethod
    def from_weights(cls, weights: Sequence[float], normalize: bool = False) -> "VectorPath":
        w = [float(x) for x in weights]
        if normalize:
            norm = math.sqrt(math.fsum(x * x for x in w))
            w = [x / norm for x in w]
        return cls(tuple(w))

    def __len__(self) -> int:
        return len(self.weights)

    def __call__(self, s: float) -> np.ndarray:
        return np.asarray(self.weights) * np.exp(1j * np.asarray(self.frequencies) * s)


def range_point(A, x) -> complex:
    """``<A x, x>`` for a unit vector x."""
    M = as_square(A)
    v = np.asarray(x, dtype=complex)
    if v.shape != (M.shape[0],):
        raise DimensionMismatchError("vector length does not match the matrix")
    if abs(np.linalg.norm(v) - 1.0) > 1e-10:
        raise NotUnitVectorError("x must have unit length")
    return complex(np.vdot(v, M @ v))


def curve_from_path(A, path: VectorPath | None = None, harmonics: int | None = None) -> TrigCurve:
    """Exact Fourier coefficients of ``s -> <A x(s), x(s)>``."""
    M = as_square(A)
    n = M.shape[0]
    path = VectorPath.canonical(n) if path is None else path
    if len(path) != n:
        raise DimensionMismatchError(f"path has length {len(path)}, matrix has dimension {n}")
    w = np.asarray(path.weights)
    f = np.asarray(path.frequencies)
    delta = f[None, :] - f[:, None]
    contrib = M * w[:, None] * w[None, :]
    live = contrib != 0
    if np.any(delta[live] < 0):
        raise InputError("curve has negative frequencies; only analytic curves are supported")
    K = int(delta[live].max()) if live.any() else 0
    if harmonics is not None:
        K = max(K, int(harmonics))
    coeffs = np.zeros(K + 1, dtype=complex)
    np.add.at(coeffs, delta[live], contrib[live])
    return TrigCurve(coeffs)


def kms_coefficient(n: int, k: int) -> float:
    """Closed-form coefficient a_{n,k} of the canonical KMS curve."""
    h = math.pi / (n + 1)
    return ((n - k) * math.cos(k * h) * math.sin(h) + math.sin((n - k) * h)) / ((n + 1) * math.sin(h))


def kms_curve(n: int, t: float) -> TrigCurve:
    """Canonical curve of ``A_t``: coefficients ``a_{n,k} (-t)^(k-1)``, k = 1..n-1."""
    if n < 2 or not 0.0 <= t < 1.0:
        raise ParameterOutOfRangeError("kms_curve needs n >= 2 and t in [0, 1)")
    c = [0.0] + [kms_coefficient(n, k) * (-t) ** (k - 1) for k in range(1, n)]
    return TrigCurve(np.asarray(c, dtype=complex))


@dataclass(frozen=True)
class RangeBoundary:
    """Support points of W(A) for a sweep of directions.

    ``points[i]`` maximizes ``Re(exp(-i angles[i]) z)`` over W(A) and the
    maximum is ``support_values[i]``.
    """

    angles: np.ndarray
    points: np.ndarray
    support_values: np.ndarray

    def __len__(self) -> int:
        return self.points.size

    def polygon(self) -> np.ndarray:
        """Boundary vertices with consecutive duplicates removed."""
        return _dedupe(self.points)

    def contains(self, z, inflate: float = 0.0) -> np.ndarray:
        """Membership in the polygon cut out by the support half-planes."""
        zz = np.atleast_1d(np.asarray(z, dtype=complex))
        proj = np.real(np.exp(-1j * self.angles)[None, :] * zz[:, None])
        return np.all(proj <= self.support_values[None, :] + inflate, axis=1)

    def max_abs(self) -> float:
        return float(np.abs(self.points).max())

    def rows(self):
        for th, p, h in zip(self.angles, self.points, self.support_values):
            yield float(th), float(p.real), float(p.imag), float(h)


def _dedupe(points: np.ndarray, tol: float = 1e-13) -> np.ndarray:
    if points.size < 2:
        return points
    keep = np.abs(np.diff(points, append=points[:1])) > tol
    if not keep.any():
        return points[:1]
    return points[keep]


def hermitian_part(A, theta):
    """``(e^{-i theta} A + e^{i theta} A^*) / 2`` for each angle (stacked)."""
    M = as_square(A)
    th = np.atleast_1d(np.asarray(theta, dtype=float))
    e = np.exp(-1j * th)[:, None, None]
    H = 0.5 * (e * M[None] + np.conj(e) * M.conj().T[None])
    return H


def support_points(A, theta) -> tuple[np.ndarray, np.ndarray]:
    """Support points and support values of W(A) in the directions ``theta``.

    When the top eigenvalue of the rotated Hermitian part is repeated the
    support set is a segment; the endpoint furthest along ``i e^{i theta}``
    is returned.
    """
    M = as_square(A)
    n = M.shape[0]
    th = np.atleast_1d(np.asarray(theta, dtype=float))
    H = hermitian_part(M, th)
    w, V = hermitian_eig(H)
    x = V[:, :, 0]
    scale = max(1.0, float(np.abs(M).max()))
    if n > 1:
        tied = np.nonzero(w[:, 0] - w[:, 1] <= 1e-10 * scale)[0]
        for k in tied:
            top = np.nonzero(w[k, 0] - w[k] <= 1e-10 * scale)[0]
            Q = V[k][:, top]
            e = np.exp(-1j * th[k])
            Kh = (e * M - np.conj(e) * M.conj().T) / 2j
            _, U = hermitian_eig(Q.conj().T @ Kh @ Q)
            x[k] = Q @ U[:, 0]
    pts = np.einsum("ki,ij,kj->k", x.conj(), M, x)
    return pts, w[:, 0]


def boundary(A, samples: int = 720, refine: float | None = None, max_points: int = 20000) -> RangeBoundary:
    """Sweep ``samples`` uniform directions; optionally bisect long gaps.

    With ``refine`` set, directions are inserted between neighbours whose
    support points are more than ``refine`` apart, up to ``max_points``.
    """
    if samples < 8:
        raise InputError("boundary needs at least 8 samples")
    M = as_square(A)
    th = 2 * np.pi * np.arange(samples) / samples
    pts, h = support_points(M, th)
    if refine is not None:
        for _ in range(30):
            gaps = np.abs(np.diff(pts, append=pts[:1]))
            bad = np.nonzero(gaps > refine)[0]
            if bad.size == 0 or pts.size + bad.size > max_points:
                break
            nxt = np.where(bad + 1 < th.size, th[(bad + 1) % th.size], 2 * np.pi)
            mid = 0.5 * (th[bad] + nxt)
            p2, h2 = support_points(M, mid)
            th = np.concatenate([th, mid])
            pts = np.concatenate([pts, p2])
            h = np.concatenate([h, h2])
            order = np.argsort(th, kind="stable")
            th, pts, h = th[order], pts[order], h[order]
    return RangeBoundary(th, pts, h)


def polygon_area(points: np.ndarray) -> float:
    x, y = points.real, points.imag
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def is_convex(points: np.ndarray, tol: float = 1e-9) -> bool:
    """Counterclockwise convexity: no cross product below ``-tol``."""
    p = _dedupe(points)
    if p.size < 3:
        return True
    a = np.roll(p, -1) - p
    b = np.roll(p, -2) - np.roll(p, -1)
    cross = a.real * b.imag - a.imag * b.real
    return bool(np.all(cross >= -tol))


def hausdorff(P: np.ndarray, Q: np.ndarray) -> float:
    """Hausdorff distance between two closed polygons (vertex-to-edge)."""

    def one_way(X, Y):
        a = Y
        b = np.roll(Y, -1)
        ab = b - a
        L = np.abs(ab) ** 2
        L = np.where(L == 0, 1.0, L)
        u = np.real((X[:, None] - a[None, :]) * np.conj(ab)[None, :]) / L[None, :]
        u = np.clip(u, 0.0, 1.0)
        proj = a[None, :] + u * ab[None, :]
        return float(np.abs(X[:, None] - proj).min(axis=1).max())

    return max(one_way(P, Q), one_way(Q, P))
