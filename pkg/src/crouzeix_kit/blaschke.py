"""Finite Blaschke products and pseudohyperbolic disks."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import (
    InputError,
    NotInsideUnitDiskError,
    OutsideDiskError,
    PoleProximityError,
    ZeroOutsideDiskError,
)

ZERO_MARGIN = 1e-9


@dataclass(frozen=True)
class BlaschkeProduct:
    """``z -> unimodular * prod((z - a) / (1 - conj(a) z))`` over ``zeros``."""

    zeros: tuple[complex, ...]
    unimodular: complex = 1.0

    def __post_init__(self):
        zs = tuple(complex(a) for a in self.zeros)
        for a in zs:
            if not abs(a) <= 1.0 - ZERO_MARGIN:
                raise ZeroOutsideDiskError(f"zero {a} is not inside the unit disk")
        lam = complex(self.unimodular)
        if abs(abs(lam) - 1.0) > 1e-12:
            raise InputError(f"front factor {lam} is not unimodular")
        object.__setattr__(self, "zeros", zs)
        object.__setattr__(self, "unimodular", lam)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __call__(self, z):
        return evaluate(self, z)


def evaluate(B: BlaschkeProduct, z):
    """Value of B at z; z may be a scalar or an array."""
    zz = np.asarray(z, dtype=complex)
    out = np.full(zz.shape, B.unimodular, dtype=complex)
    for a in B.zeros:
        den = 1.0 - np.conj(a) * zz
        if np.any(np.abs(den) <= 1e-14):
            raise PoleProximityError(f"evaluation point too close to the pole 1/conj({a})")
        out = out * (zz - a) / den
    return complex(out) if out.ndim == 0 else out


def pseudo_distance(z: complex, w: complex) -> float:
    """Pseudohyperbolic distance ``|(z - w) / (1 - conj(w) z)|``."""
    if abs(z) >= 1.0 or abs(w) >= 1.0:
        raise OutsideDiskError("points must lie in the open unit disk")
    return abs((z - w) / (1.0 - w.conjugate() * z))


@dataclass(frozen=True)
class EuclideanDisk:
    center: complex
    radius: float

    def contains(self, z, pad: float = 0.0):
        return np.abs(np.asarray(z) - self.center) < self.radius + pad

    def inside_unit_disk(self) -> bool:
        return abs(self.center) + self.radius <= 1.0

    def boundary(self, k: int = 64) -> np.ndarray:
        s = np.linspace(0.0, 2 * np.pi, k, endpoint=False)
        return self.center + self.radius * np.exp(1j * s)


@dataclass(frozen=True)
class PseudoDisk:
    center: complex
    radius: float

    def __post_init__(self):
        if not abs(self.center) < 1.0:
            raise OutsideDiskError("pseudohyperbolic center must lie in the unit disk")
        if not 0.0 <= self.radius < 1.0:
            raise InputError("pseudohyperbolic radius must lie in [0, 1)")


def _small_root(k: float) -> float:
    """Root in [0, 1) of ``x + 1/x = k`` for k >= 2, free of cancellation."""
    disc = max(k * k - 4.0, 0.0)
    return 2.0 / (k + math.sqrt(disc))


def euclid_to_pseudo(D: EuclideanDisk) -> PseudoDisk:
    c = complex(D.center)
    R = float(D.radius)
    if not R > 0.0:
        raise InputError("Euclidean radius must be positive")
    if not abs(c) + R < 1.0:
        raise NotInsideUnitDiskError(f"disk D({c}, {R}) is not strictly inside the unit disk")
    r = _small_root((R * R - abs(c) ** 2 + 1.0) / R)
    if c == 0:
        return PseudoDisk(0j, R)
    rho = _small_root((abs(c) ** 2 - R * R + 1.0) / abs(c))
    return PseudoDisk(cmath.rect(rho, cmath.phase(c)), r)


def pseudo_to_euclid(D: PseudoDisk) -> EuclideanDisk:
    z0 = complex(D.center)
    r = float(D.radius)
    den = 1.0 - r * r * abs(z0) ** 2
    return EuclideanDisk(z0 * (1.0 - r * r) / den, r * (1.0 - abs(z0) ** 2) / den)


def parse_complex(text: str) -> complex:
    """Parse a literal such as ``0.5``, ``-0.2i``, ``0.5-0.2i`` or ``1e-3+2i``."""
    s = text.strip().replace(" ", "")
    if not s:
        raise InputError("empty complex literal")
    if s.endswith(("i", "j")):
        s = s[:-1] + "j"
        if s in ("j", "+j", "-j"):
            s = s.replace("j", "1j")
        elif s[-2] in "+-":
            s = s[:-1] + "1j"
    try:
        return complex(s)
    except ValueError:
        raise InputError(f"bad complex literal {text!r}") from None


def parse_zeros(text: str) -> list[complex]:
    """Comma-separated complex literals."""
    return [parse_complex(tok) for tok in text.split(",") if tok.strip()]


def format_complex(z: complex, digits: int = 12) -> str:
    z = complex(z)
    return f"{z.real:.{digits}g}{z.imag:+.{digits}g}i"


def from_zeros(zeros: Iterable[complex], unimodular: complex = 1.0) -> BlaschkeProduct:
    return BlaschkeProduct(tuple(zeros), unimodular)
