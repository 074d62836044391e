"""Level sets of |B| and the level-set check against numerical ranges."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass

import contourpy
import numpy as np
from scipy.optimize import minimize_scalar

from .blaschke import BlaschkeProduct, evaluate, format_complex
from .errors import DegreeOrderError, InputError, RangeNotInDiskError
from .linalg import as_square
from .modelspace import build_model_matrix
from .numrange import boundary, support_points

LEVEL = 0.5
LSC_TOL = 1e-12
DISK_CLIP = 1.0 - 1e-9


def max_modulus_on_range(A, B: BlaschkeProduct, samples: int = 1440) -> tuple[float, complex]:
    """Maximum of |B| over W(A) and a boundary point attaining it.

    |B| is subharmonic, so only the boundary of W(A) is searched: a sweep of
    support points, then a bounded Brent search over the direction angle
    around the best few samples.
    """
    M = as_square(A)
    bd = boundary(M, samples)
    if np.abs(bd.points).max() >= 1.0:
        raise RangeNotInDiskError("W(A) reaches the unit circle")
    vals = np.abs(evaluate(B, bd.points))
    h = 2 * np.pi / samples
    best_i = int(np.argmax(vals))
    best, witness = float(vals[best_i]), complex(bd.points[best_i])

    def neg(theta):
        p, _ = support_points(M, [theta])
        return -abs(evaluate(B, p[0]))

    for k in np.argsort(-vals)[:3]:
        th = bd.angles[k]
        res = minimize_scalar(neg, bounds=(th - h, th + h), method="bounded",
                              options={"xatol": 1e-12})
        if -res.fun > best:
            best = float(-res.fun)
            witness = complex(support_points(M, [res.x])[0][0])
    return best, witness


@dataclass(frozen=True)
class LscReport:
    theta: BlaschkeProduct
    b: BlaschkeProduct
    max_abs_b: float
    satisfied: bool
    witness: complex

    @property
    def margin(self) -> float:
        return self.max_abs_b - LEVEL

    def to_dict(self) -> dict:
        return {
            "theta_zeros": [format_complex(z) for z in self.theta.zeros],
            "b_zeros": [format_complex(z) for z in self.b.zeros],
            "max_abs_b": self.max_abs_b,
            "margin": self.margin,
            "satisfied": self.satisfied,
            "witness": [self.witness.real, self.witness.imag],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def lsc_check(theta: BlaschkeProduct, b: BlaschkeProduct, samples: int = 1440,
              strict: bool = True) -> LscReport:
    """Does W(M_theta) escape the region where |b| < 1/2?

    With ``strict=False`` a degree violation only warns; the check still runs.
    """
    if b.degree >= theta.degree:
        msg = f"deg b = {b.degree} is not below deg theta = {theta.degree}"
        if strict:
            raise DegreeOrderError(msg)
        warnings.warn(msg, stacklevel=2)
    M = build_model_matrix(theta.zeros)
    val, witness = max_modulus_on_range(M, b, samples)
    return LscReport(theta, b, val, val >= LEVEL - LSC_TOL, witness)


def level_set_boundary(B: BlaschkeProduct, level: float = LEVEL, grid: int = 512) -> list[np.ndarray]:
    """Contours of ``|B| = level`` inside the unit disk as complex polylines."""
    if not 0.0 < level < 1.0:
        raise InputError("level must lie in (0, 1)")
    if grid < 64:
        raise InputError("grid must be at least 64")
    x = np.linspace(-1.0, 1.0, grid)
    X, Y = np.meshgrid(x, x)
    Z = X + 1j * Y
    outside = np.abs(Z) > DISK_CLIP
    vals = np.empty(Z.shape)
    # keep evaluation away from the poles outside the disk
    inside = ~outside
    vals[inside] = np.abs(evaluate(B, Z[inside]))
    vals[outside] = 1.0
    gen = contourpy.contour_generator(X, Y, np.ma.array(vals, mask=outside))
    return [seg[:, 0] + 1j * seg[:, 1] for seg in gen.lines(level)]


def random_blaschke(degree: int, rng: np.random.Generator, max_modulus: float = 0.95) -> BlaschkeProduct:
    """Zeros uniform (by area) in the disk of radius ``max_modulus``."""
    r = max_modulus * np.sqrt(rng.uniform(size=degree))
    phi = rng.uniform(0.0, 2 * np.pi, size=degree)
    return BlaschkeProduct(tuple(r * np.exp(1j * phi)))
