"""Inscribed disks from boundary curves and the pseudohyperbolic disk criterion.

A curve ``C`` inside a numerical range yields a disk: its center is the
midpoint ``(f(0) + f(pi)) / 2`` and its radius is the distance from that
center to the curve.  For a conjugate-symmetric curve this disk lies in the
convex hull of ``C`` and hence in the numerical range.  When the curve was
built from ``A_t`` rather than ``M_Theta`` the disk is pushed through
``z -> t + (1 - t^2) z``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.optimize import minimize_scalar

from .blaschke import EuclideanDisk, PseudoDisk, euclid_to_pseudo
from .closed_forms import closed_form  # noqa: F401  (re-exported)
from .errors import CenterOutsideCurveError, InputError, NonSymmetricCurveError
from .modelspace import MatrixFamilySpec
from .numrange import TrigCurve, VectorPath, curve_from_path, curve_eval

GRID = 2048
MARGIN_TOL = 1e-12


def inscribed_center(C: TrigCurve) -> complex:
    """Midpoint of ``f(0)`` and ``f(pi)``; real for conjugate-symmetric curves."""
    c = 0.5 * (curve_eval(C, 0.0) + curve_eval(C, math.pi))
    if abs(c.imag) > 1e-10:
        raise NonSymmetricCurveError(f"curve midpoint {c} is not real")
    return complex(c.real, 0.0)


def _min_distance(C: TrigCurve, c: complex, grid: int = GRID) -> tuple[float, float]:
    """Minimum of ``|f(s) - c|`` and a minimizing s."""
    s = 2 * np.pi * np.arange(grid) / grid
    d2 = np.abs(curve_eval(C, s) - c) ** 2
    h = 2 * np.pi / grid
    local = np.nonzero((d2 <= np.roll(d2, 1)) & (d2 <= np.roll(d2, -1)))[0]
    local = local[np.argsort(d2[local])][:8]

    def obj(x):
        return abs(curve_eval(C, x) - c) ** 2

    best_s, best = float(s[local[0]]), float(d2[local[0]])
    for k in local:
        res = minimize_scalar(obj, bounds=(s[k] - h, s[k] + h), method="bounded",
                              options={"xatol": 1e-12})
        if res.fun < best:
            best, best_s = float(res.fun), float(res.x)
    return math.sqrt(max(best, 0.0)), best_s % (2 * np.pi)


def inscribed_radius(C: TrigCurve, c: complex, grid: int = GRID) -> float:
    """Distance from ``c`` to the curve, grid search plus bounded Brent polish."""
    R, _ = _min_distance(C, c, grid)
    if R <= 1e-12:
        raise CenterOutsideCurveError(f"center {c} lies on the curve")
    return R


def criterion_threshold(n: int, kind: str = "half") -> float:
    """``(1/2)**(1/(n-1))``, or ``cos(pi/(n+1))`` with ``kind="cos"``."""
    if n < 2:
        raise InputError("threshold needs n >= 2")
    if kind == "half":
        return 0.5 ** (1.0 / (n - 1))
    if kind == "cos":
        return math.cos(math.pi / (n + 1))
    raise InputError(f"unknown threshold kind {kind!r}")


@dataclass(frozen=True)
class DiskCriterionReport:
    spec: MatrixFamilySpec
    curve_id: str
    center: complex
    euclid_radius: float
    pseudo: PseudoDisk
    threshold: float
    satisfied: bool
    margin: float

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "curve_id": self.curve_id,
            "center": [self.center.real, self.center.imag],
            "euclid_radius": self.euclid_radius,
            "z0": [self.pseudo.center.real, self.pseudo.center.imag],
            "r": self.pseudo.radius,
            "threshold": self.threshold,
            "satisfied": self.satisfied,
            "margin": self.margin,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def csv_row(self) -> tuple:
        return (self.spec.t, self.center.real, self.euclid_radius, self.pseudo.center.real,
                self.pseudo.radius, self.threshold, self.satisfied)


CSV_HEADER = ("t", "c", "R", "z0", "r", "threshold", "satisfied")


def _curve_id(path: VectorPath | None) -> str:
    if path is None:
        return "canonical"
    return "weights(" + ",".join(f"{w:.6g}" for w in path.weights) + ")"


def criterion_curve(spec: MatrixFamilySpec, path: VectorPath | None = None,
                    shift: bool | None = None) -> tuple[TrigCurve, tuple[complex, float] | None]:
    """The curve used for the disk step and the affine map applied to its disk.

    KMS specs use the curve of ``A_t`` and, by default, the map
    ``z -> t + (1 - t^2) z``; everything else uses ``M_Theta`` directly.
    """
    if spec.family == "atm":
        raise InputError("the disk criterion applies to Blaschke families, not atm")
    if shift is None:
        shift = spec.family == "kms"
    A = spec.matrix()
    if shift and spec.family != "kms":
        raise InputError("shift is only meaningful for the kms family")
    C = curve_from_path(A, path)
    t = spec.t
    return C, ((t, 1 - t * t) if shift else None)


def check_criterion(spec: MatrixFamilySpec, path: VectorPath | None = None,
                    shift: bool | None = None, threshold: str = "half") -> DiskCriterionReport:
    C, affine = criterion_curve(spec, path, shift)
    c = inscribed_center(C)
    R = inscribed_radius(C, c)
    if affine is not None:
        a, b = affine
        c, R = a + b * c, b * R
    pseudo = euclid_to_pseudo(EuclideanDisk(c, R))
    thr = criterion_threshold(spec.n, threshold)
    margin = pseudo.radius - thr
    return DiskCriterionReport(spec, _curve_id(path), c, R, pseudo, thr,
                               margin >= -MARGIN_TOL, margin)


def best_real_center(spec: MatrixFamilySpec, path: VectorPath | None = None,
                     shift: bool | None = None) -> tuple[float, float, float]:
    """Optional 1-D search over real centers maximizing the pseudo radius.

    Returns ``(center, euclid_radius, r)`` in the unshifted-or-shifted frame
    matching :func:`check_criterion`.
    """
    C, affine = criterion_curve(spec, path, shift)
    c0 = inscribed_center(C).real
    R0 = inscribed_radius(C, c0)
    a, b = affine if affine is not None else (0.0, 1.0)

    def neg_r(x):
        R, _ = _min_distance(C, x, 512)
        cc, RR = a + b * x, b * R
        if RR <= 0 or abs(cc) + RR >= 1:
            return 0.0
        return -euclid_to_pseudo(EuclideanDisk(cc, RR)).radius

    res = minimize_scalar(neg_r, bounds=(c0 - R0, c0 + R0), method="bounded",
                          options={"xatol": 1e-10})
    x = float(res.x) if res.fun < neg_r(c0) else c0
    R = inscribed_radius(C, x)
    cc, RR = a + b * x, b * R
    return cc, RR, euclid_to_pseudo(EuclideanDisk(cc, RR)).radius


def disk_scan(template: MatrixFamilySpec, ts: Iterable[float], path: VectorPath | None = None,
              shift: bool | None = None, threshold: str = "half") -> list[DiskCriterionReport]:
    return [check_criterion(template.with_t(float(t)), path, shift, threshold) for t in ts]


def pseudo_radius(spec: MatrixFamilySpec, path: VectorPath | None = None,
                  shift: bool | None = None) -> float:
    return check_criterion(spec, path, shift).pseudo.radius


def curve_gap(C: TrigCurve, c: complex, R: float, grid: int = GRID) -> float:
    """``min_s |f(s) - c|^2 - R^2``; nonnegative exactly when D(c, R) clears the curve."""
    d, _ = _min_distance(C, c, grid)
    return d * d - R * R
