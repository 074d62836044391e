"""Similarity certificates for Crouzeix's conjecture on nilpotent families.

For a strictly upper triangular ``A`` the boundary curve of W(A) is read as a
power series ``F`` with ``F(0) = 0``.  Its compositional inverse, truncated
at degree n-1, gives ``B = G_n(A)`` with ``F(B) = A``.  B is nilpotent with a
single Jordan block, so ``B = X J X^{-1}`` and von Neumann's inequality for
the contraction J yields ``||p(A)|| <= ||X|| ||X^{-1}|| max_W |p|``.  The
condition product ``||X|| ||X^{-1}||`` is the certificate.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import closed_forms
from .closed_forms import S5
from .errors import (
    ComplexRootsError,
    DegenerateCubicError,
    InputError,
    MethodUnavailableError,
    NotInvertibleAtZeroError,
    NumericError,
)
from .linalg import (
    as_square,
    gram,
    hermitian_eig,
    jordan_block,
    jordan_chain_nilpotent,
    matrix_polynomial,
    operator_norm,
    singular_extremes,
)
from .modelspace import NILPOTENT_FAMILIES, MatrixFamilySpec
from .numrange import VectorPath, boundary, curve_from_path
from .tolerances import RESIDUAL

CERT_BOUND = 2.0
CERT_TOL = 1e-9
METHODS = ("paper_formula", "cubic", "eig")


@dataclass(frozen=True)
class PowerSeries:
    """``sum(coeffs[k] z**k)``, truncated."""

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        c = tuple(complex(x) for x in self.coeffs)
        if len(c) < 2:
            c = c + (0j,) * (2 - len(c))
        if not all(math.isfinite(x.real) and math.isfinite(x.imag) for x in c):
            raise InputError("power series coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        out = np.zeros(np.shape(z), dtype=complex)
        for c in reversed(self.coeffs):
            out = out * z + c
        return complex(out) if np.ndim(out) == 0 else out

    def of_matrix(self, A) -> np.ndarray:
        return matrix_polynomial(self.coeffs, A)

    def compose(self, other: "PowerSeries", order: int | None = None) -> "PowerSeries":
        """Truncated ``self(other(z))``; needs ``other[0] == 0``."""
        N = order if order is not None else self.order * other.order
        g = np.zeros(N + 1, dtype=complex)
        g[: min(N, other.order) + 1] = other.coeffs[: N + 1]
        out = np.zeros(N + 1, dtype=complex)
        power = np.zeros(N + 1, dtype=complex)
        power[0] = 1.0
        for k, c in enumerate(self.coeffs):
            if k > 0:
                power = np.convolve(power, g)[: N + 1]
            out += c * power
        return PowerSeries(tuple(out))


def series_revert(F: PowerSeries, order: int) -> PowerSeries:
    """Compositional inverse G with ``F(G(z)) = z + O(z^(order+1))``."""
    if order < 1:
        raise InputError("order must be at least 1")
    f = np.zeros(order + 1, dtype=complex)
    k = min(order, F.order)
    f[: k + 1] = F.coeffs[: k + 1]
    if abs(f[0]) > 1e-12:
        raise NotInvertibleAtZeroError("F(0) must vanish")
    if abs(f[1]) <= 1e-12:
        raise NotInvertibleAtZeroError("F'(0) vanishes")
    g = np.zeros(order + 1, dtype=complex)
    g[1] = 1.0 / f[1]
    # powers[j] = G**j truncated, refreshed as g gains coefficients
    for k in range(2, order + 1):
        acc = 0j
        power = g.copy()
        for j in range(2, k + 1):
            power = np.convolve(power, g)[: order + 1]
            acc += f[j] * power[k]
        g[k] = -acc / f[1]
    return PowerSeries(tuple(g))


def curve_series(spec: MatrixFamilySpec, path: VectorPath | None = None) -> tuple[np.ndarray, PowerSeries]:
    if spec.family not in NILPOTENT_FAMILIES:
        raise InputError(f"family {spec.family} is not nilpotent; use kms or atm")
    A = spec.matrix()
    return A, PowerSeries(tuple(curve_from_path(A, path).coeffs))


def build_bt(spec: MatrixFamilySpec, path: VectorPath | None = None) -> tuple[np.ndarray, np.ndarray, PowerSeries]:
    """``(A, B, F)`` with ``F(B) = A`` and B a single nilpotent Jordan block."""
    A, F = curve_series(spec, path)
    n = A.shape[0]
    G = series_revert(F, n - 1)
    B = np.triu(G.of_matrix(A), 1)
    res = float(np.abs(F.of_matrix(B) - A).max())
    if res > RESIDUAL:
        raise NumericError(f"F(B) misses A by {res:.3e}")
    return A, B, F


@dataclass(frozen=True)
class CubicSpectrum:
    a: float
    b: float
    c: float
    d: float
    p: float
    q: float
    G: float
    z0: float
    z1: float
    z2: float
    x0: float
    x1: float
    x2: float

    @property
    def roots(self) -> tuple[float, float, float]:
        return self.x0, self.x1, self.x2


def cubic_roots(a: float, b: float, c: float, d: float) -> CubicSpectrum:
    """Real roots of ``a x^3 + b x^2 + c x + d`` by the trigonometric formula."""
    if a == 0:
        raise DegenerateCubicError("leading coefficient vanishes")
    p = (3 * a * c - b * b) / (3 * a * a)
    q = (2 * b**3 - 9 * a * b * c + 27 * a * a * d) / (27 * a**3)
    if abs(p) <= 1e-14:
        raise DegenerateCubicError("p vanishes; the roots coincide")
    if p > 0:
        raise ComplexRootsError("p > 0: only one real root")
    G = 3 * q * math.sqrt(-3 / p) / (2 * p)
    if abs(G) > 1 + 1e-9:
        raise ComplexRootsError(f"|G| = {abs(G):.6g} exceeds 1")
    G = min(1.0, max(-1.0, G))
    amp = 2 * math.sqrt(-p / 3)
    phi = math.acos(G) / 3
    z = [amp * math.cos(phi - 2 * math.pi * k / 3) for k in range(3)]
    shift = b / (3 * a)
    return CubicSpectrum(a, b, c, d, p, q, G, z[0], z[1], z[2],
                         z[0] - shift, z[1] - shift, z[2] - shift)


def charpoly(M) -> np.ndarray:
    """Coefficients of ``det(x I - M)``, highest degree first (trace recursion)."""
    A = as_square(M)
    n = A.shape[0]
    coeffs = [1.0 + 0j]
    K = np.zeros_like(A)
    eye = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        K = A @ K + coeffs[-1] * eye
        coeffs.append(-np.trace(A @ K) / k)
    return np.array(coeffs)


def deflate_unit_root(coeffs: Sequence[complex]) -> np.ndarray:
    """Divide a polynomial by ``x - 1`` after checking that 1 is a root."""
    c = np.asarray(coeffs)
    scale = float(np.abs(c).sum())
    if abs(np.polyval(c, 1.0)) > 1e-8 * scale:
        raise NumericError("x = 1 is not a root of the characteristic polynomial")
    q, _ = np.polydiv(c, np.array([1.0, -1.0]))
    return q


def xstar_x_cubic(X) -> CubicSpectrum:
    """Cubic factor of ``det(X^* X - x I)`` for a 4 x 4 X with eigenvalue 1 split off."""
    M = as_square(X)
    if M.shape != (4, 4):
        raise MethodUnavailableError("the cubic method needs a 4 x 4 similarity")
    q = deflate_unit_root(charpoly(gram(M)).real)
    return cubic_roots(*(float(x) for x in q))


def paper_xt(spec: MatrixFamilySpec) -> np.ndarray:
    """Hand-derived similarity for the 4 x 4 KMS and A_{t,m} matrices."""
    if spec.n != 4 or spec.family not in NILPOTENT_FAMILIES:
        raise MethodUnavailableError("closed-form X_t exists only for kms/atm with n = 4")
    t = spec.t
    X = np.zeros((4, 4), dtype=complex)
    X[0, 0] = 1.0
    X[1, 1] = (1 + S5) / 4
    X[2, 2] = (3 + S5) / 8
    X[3, 3] = (2 + S5) / 8
    if spec.family == "kms":
        X[1, 2] = -3 / 40 * (-5 + S5) * t
        X[1, 3] = -t * t / (8 * S5)
        X[2, 3] = 3 * t / (4 * S5)
    else:
        m = spec.m
        X[1, 2] = 3 / 40 * (S5 - 5) * t
        X[1, 3] = (6 * t * t - 7 * t**m) / (8 * S5)
        X[2, 3] = -3 * t / (4 * S5)
    return X


def paper_cubic(spec: MatrixFamilySpec) -> tuple[float, float, float, float]:
    """Hand-derived cubic R with ``det(X^* X - x) = R(x)(x - 1) / 102400``."""
    return _paper_cubic_at(spec, spec.t)


def inverse_norm_bound(spec: MatrixFamilySpec, t_star: float | None = None) -> float:
    """Upper bound for ``||X_t^{-1}||`` over ``[0, t_star]`` (default ``spec.t``).

    The smallest root is ``x_2(t) = z_2(t) - b(t)/(3a)``; ``z_2`` decreases
    and ``-b/(3a)`` increases in t, so pairing ``z_2`` at the right end with
    the shift at ``t = 0`` bounds ``x_2`` from below on the whole interval.
    ``t_star = 1`` is allowed.
    """
    t_star = spec.t if t_star is None else float(t_star)
    if not 0.0 <= t_star <= 1.0:
        raise InputError("t_star must lie in [0, 1]")
    a, b, c, d = _paper_cubic_at(spec, t_star)
    z2 = cubic_roots(a, b, c, d).z2
    a0, b0, _, _ = _paper_cubic_at(spec, 0.0)
    return 1.0 / math.sqrt(z2 - b0 / (3 * a0))


def _paper_cubic_at(spec: MatrixFamilySpec, t: float):
    if spec.n != 4 or spec.family not in NILPOTENT_FAMILIES:
        raise MethodUnavailableError("the closed-form cubic exists only for kms/atm with n = 4")
    if spec.family == "kms":
        return closed_forms.xkms_cubic(t)
    return closed_forms.xatm_cubic(t, spec.m)


@dataclass(frozen=True)
class CrouzeixCertificate:
    spec: MatrixFamilySpec
    norm_x: float
    norm_x_inv: float
    product: float
    conjecture_certified: bool
    method: str

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "norm_x": self.norm_x,
            "norm_x_inv": self.norm_x_inv,
            "product": self.product,
            "conjecture_certified": self.conjecture_certified,
            "method": self.method,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def csv_row(self) -> tuple:
        s = self.spec
        return (s.family, s.n, "" if s.m is None else s.m, s.t, self.norm_x, self.norm_x_inv,
                self.product, self.conjecture_certified, self.method)


CSV_HEADER = ("family", "n", "m", "t", "normX", "normXinv", "product", "certified", "method")


def _certificate(spec, hi, lo_inv, method) -> CrouzeixCertificate:
    prod = float(hi * lo_inv)
    return CrouzeixCertificate(spec, float(hi), float(lo_inv), prod,
                               prod <= CERT_BOUND + CERT_TOL, method)


def similarity(spec: MatrixFamilySpec, path: VectorPath | None = None) -> np.ndarray:
    """Generic Jordan chain X for B_t (seed e_n)."""
    _, B, _ = build_bt(spec, path)
    return jordan_chain_nilpotent(B)


def condition_product(spec: MatrixFamilySpec, method: str = "eig",
                      path: VectorPath | None = None) -> CrouzeixCertificate:
    """``||X|| ||X^{-1}||`` for the chosen similarity and norm method.

    ``paper_formula`` and ``cubic`` use the closed-form X (n = 4 only); the
    first takes norms from the eigensolver, the second from the cubic.
    ``eig`` uses the generic Jordan chain of B_t and works for any size.
    """
    if method not in METHODS:
        raise MethodUnavailableError(f"unknown method {method!r}")
    if method == "eig":
        X = similarity(spec, path)
        hi, lo = singular_extremes(X)
        return _certificate(spec, hi, 1.0 / lo, method)
    X = paper_xt(spec)
    if method == "paper_formula":
        hi, lo = singular_extremes(X)
        return _certificate(spec, hi, 1.0 / lo, method)
    cs = xstar_x_cubic(X)
    top = max(1.0, cs.x0)
    bottom = min(1.0, cs.x2)
    if bottom <= 0:
        raise NumericError("X^* X has a nonpositive eigenvalue")
    return _certificate(spec, math.sqrt(top), 1.0 / math.sqrt(bottom), method)


def _scan_chunk(template: MatrixFamilySpec, ts: np.ndarray, method: str,
                path: VectorPath | None) -> list[CrouzeixCertificate]:
    specs = [template.with_t(float(t)) for t in ts]
    if method != "eig":
        return [condition_product(s, method, path) for s in specs]
    Xs = np.stack([similarity(s, path) for s in specs])
    hi, lo = singular_extremes(Xs)
    return [_certificate(s, h, 1.0 / l, method) for s, h, l in zip(specs, hi, lo)]


def certificate_scan(template: MatrixFamilySpec, ts: Iterable[float], method: str = "eig",
                     path: VectorPath | None = None, threads: int = 1) -> list[CrouzeixCertificate]:
    """Certificates over a t grid; norms of the whole chunk are computed together."""
    ts = np.asarray(list(ts), dtype=float)
    if ts.size == 0:
        return []
    threads = max(1, int(threads))
    chunks = np.array_split(ts, min(threads, ts.size))
    if threads == 1:
        return _scan_chunk(template, ts, method, path)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(lambda c: _scan_chunk(template, c, method, path), chunks)
        return [cert for part in parts for cert in part]


def certified_prefix(certs: Sequence[CrouzeixCertificate], bound: float = CERT_BOUND) -> float | None:
    """Largest grid t such that every earlier grid point has product < bound."""
    last = None
    for cert in certs:
        if not cert.product < bound:
            break
        last = cert.spec.t
    return last


def random_polynomials(rng: np.random.Generator, trials: int, max_degree: int) -> np.ndarray:
    """Rows of coefficients, uniform on the complex unit disk, random degree."""
    r = np.sqrt(rng.uniform(size=(trials, max_degree + 1)))
    phi = rng.uniform(0.0, 2 * np.pi, size=(trials, max_degree + 1))
    coeffs = r * np.exp(1j * phi)
    degree = rng.integers(0, max_degree + 1, size=trials)
    coeffs[np.arange(max_degree + 1)[None, :] > degree[:, None]] = 0.0
    return coeffs


def worst_crouzeix_ratio(A, coeffs: np.ndarray, samples: int = 1440) -> float:
    """Max over rows p of ``||p(A)|| / max_{boundary W(A)} |p|``."""
    M = as_square(A)
    n = M.shape[0]
    pts = boundary(M, samples).points
    C = np.atleast_2d(np.asarray(coeffs, dtype=complex))
    # Horner on the matrix stack and on the boundary samples at once
    P = np.broadcast_to(C[:, -1, None, None] * np.eye(n), (C.shape[0], n, n)).astype(complex)
    vals = np.broadcast_to(C[:, -1, None], (C.shape[0], pts.size)).astype(complex)
    for k in range(C.shape[1] - 2, -1, -1):
        P = P @ M + C[:, k, None, None] * np.eye(n)
        vals = vals * pts[None, :] + C[:, k, None]
    num = np.atleast_1d(operator_norm(P))
    den = np.abs(vals).max(axis=1)
    keep = den > 1e-300
    return float((num[keep] / den[keep]).max()) if keep.any() else 1.0


def crouzeix_inequality_test(spec: MatrixFamilySpec, trials: int = 200, max_degree: int = 6,
                             seed: int = 0, samples: int = 1440) -> float:
    """Worst observed Crouzeix ratio over seeded random polynomials."""
    if trials < 1:
        raise InputError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    return worst_crouzeix_ratio(spec.matrix(), random_polynomials(rng, trials, max_degree), samples)


def similarity_residual(X, B) -> float:
    n = B.shape[0]
    return float(np.abs(X @ jordan_block(n) @ np.linalg.inv(X) - B).max())


__all__ = [
    "PowerSeries", "series_revert", "build_bt", "CubicSpectrum", "cubic_roots", "charpoly",
    "deflate_unit_root", "xstar_x_cubic", "paper_xt", "paper_cubic", "inverse_norm_bound", "CrouzeixCertificate", "condition_product",
    "certificate_scan", "certified_prefix", "crouzeix_inequality_test", "worst_crouzeix_ratio",
    "random_polynomials", "similarity", "similarity_residual", "hermitian_eig",
]
