"""Explicit formulas for centers, radii and spectral cubics.

These serve as independent oracles for the numerical pipeline: each one is a
direct transcription of a hand-derived expression and shares no code with
the curve/disk machinery except plain arithmetic.  Look formulas up by name
with :func:`closed_form`; :func:`names` lists the registry.

Naming: ``<family>.<quantity>`` where the family prefix is

``kms5``      degree-5 repeated-zero product, curve of A_t (n = 5)
``kms11``     degree-11 repeated-zero product (numerical evidence only)
``phi``       zeros (t, t, t^(1/m)), canonical path
``phi_alt``   zeros (t, t, t^(1/m)), path weights (sqrt(11)/6, 2/3, 1/2)
``psi``       zeros (t, t, t, sqrt(t)), canonical path
``xkms``      the 4x4 KMS similarity and its spectral cubic
``xatm``      the 4x4 A_{t,m} similarity and its spectral cubic
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .errors import InputError, UnknownFormulaError

S2 = math.sqrt(2.0)
S3 = math.sqrt(3.0)
S5 = math.sqrt(5.0)
S6 = math.sqrt(6.0)
S11 = math.sqrt(11.0)


# degree 5, repeated zero -------------------------------------------------

def kms5_curve_coeffs(t):
    return [0.0, S3 / 2, -7 * t / 12, t * t / (2 * S3), -t**3 / 12]


def kms5_c(t):
    return -t / 12 * (t * t + 7)


def kms5_R2(t):
    return t**4 / 12 + t * t / 2 + 0.75


def kms5_g(t, x):
    return t * t * (1 - x * x) * (4 * t**4 * x * x + 28 * t * t * x * x
                                  - 4 * S3 * t**3 * x - 16 * S3 * t * x + 13) / 36


def kms5_g1(t):
    return S3 * (t**8 + t**6 - t**4 + 83 * t * t + 252)


def kms5_g2(t):
    return (3 * t**16 + 6 * t**14 - 3 * t**12 + 492 * t**10 + 2013 * t**8
            + 1014 * t**6 - 1581 * t**4 + 1080 * t * t + 3888)


def kms5_g3(t):
    return 144 * (t * t + 3)


def kms5_r(t):
    return (kms5_g1(t) - math.sqrt(kms5_g2(t))) / kms5_g3(t)


# degree 11, repeated zero --------------------------------------------------

def kms11_c(t):
    return t / 24 * ((S3 - 2) * t**8 + (1 - 2 * S3) * t**6 - 2 * (S3 + 2) * t**4
                     - (2 * S3 + 11) * t * t - 11 * S3 - 2)


def kms11_h(t):
    return ((4 - 2 * S3) * t**22 + (12 * S3 - 12) * t**20 + 56 * t**18
            + (60 * S3 + 88) * t**16 + (170 * S3 + 148) * t**14
            + (96 * S3 + 584) * t**12 + (410 * S3 + 244) * t**10
            + (252 * S3 + 472) * t**8 + 632 * t**6 + (396 * S3 - 396) * t**4
            + (484 - 242 * S3) * t * t - 288 * S3 + 504)


def kms11_R(t):
    """Euclidean radius of the shifted disk whose pseudo radius is cos(pi/12)."""
    return (36 * S2 + 6 * S6 - math.sqrt(kms11_h(t))) / (24 * (S3 + 1))


# Phi_t with the canonical path -------------------------------------------

def _root_terms(t, m):
    tm = t ** (1.0 / m)
    return tm, math.sqrt(1 - t * t) * math.sqrt(1 - tm * tm)


def phi_curve_coeffs(t, m):
    tm, q = _root_terms(t, m)
    return [(tm + 3 * t) / 4, S2 * (q - t * t + 1) / 4, -t * q / 4]


def phi_c(t, m):
    tm, q = _root_terms(t, m)
    return (tm + t * (3 - q)) / 4


def phi_R(t, m):
    tm, q = _root_terms(t, m)
    return math.sqrt((1 - t * t) * (2 * q + 2 - t * t - tm * tm) / 8)


# Phi_t with the path (sqrt(11)/6, 2/3, 1/2) ------------------------------

def phi_alt_curve_coeffs(t, m):
    tm, q = _root_terms(t, m)
    return [(tm + 3 * t) / 4, (3 * q - S11 * t * t + S11) / 9, -S11 * t * q / 12]


def phi_alt_c(t, m):
    tm, q = _root_terms(t, m)
    return (3 * tm + t * (9 - S11 * q)) / 12


def phi_alt_R(t, m):
    tm, q = _root_terms(t, m)
    return math.sqrt((1 - t * t) * (80 + 24 * S11 * q - 36 * tm * tm - 44 * t * t) / 324)


def phi_alt_r(t, m):
    c, R = phi_alt_c(t, m), phi_alt_R(t, m)
    k = 1 - c * c + R * R
    return (k - math.sqrt(-4 * R * R + (-1 + c * c - R * R) ** 2)) / (2 * R)


def phi_alt_g_limit(m):
    return math.sqrt(2 * m * (88 * m + 72 + 48 * math.sqrt(11 * m))) / 9


def phi_alt_h_limit(m):
    return (3 * m + 1) / 2 + math.sqrt(11 * m) / 3


def phi_alt_ell(m):
    """Limit of the pseudo radius as t -> 1 for the alternate path."""
    r = math.sqrt(11 * m)
    num = 9 + 6 * r + 27 * m - math.sqrt(81 + 108 * r + 306 * m - 60 * m * r + 25 * m * m)
    return num / (8 * math.sqrt(m * (9 + 6 * r + 11 * m)))


# Psi_t ------------------------------------------------------------------

def psi_curve_coeffs(t):
    q = math.sqrt(t + 1)
    st = math.sqrt(t)
    return [
        (S5 * t + 15 * t - S5 * st + 5 * st) / 20,
        (-3 * S5 * t * t - 5 * t * t - 2 * S5 * q * t + 2 * S5 * q + 3 * S5 + 5) / 20,
        (2 * S5 * t**3 + 2 * S5 * q * t * t - 2 * S5 * t - 2 * S5 * q * t) / 20,
        (S5 * q * t**3 - 5 * q * t**3 - S5 * q * t * t + 5 * q * t * t) / 20,
    ]


def psi_c(t):
    q = math.sqrt(t + 1)
    return (2 * S5 * t**3 + 2 * S5 * q * t * t - (2 * S5 * q + S5 - 15) * t
            - (S5 - 5) * math.sqrt(t)) / 20


def psi_R2(t):
    q = math.sqrt(t + 1)
    inner = (S5 * t**4 - 3 * t**4 - 4 * t**3 - 8 * q * t * t
             - 2 * (-2 * t + S5 * q - 3 * q + S5 - 5) * t * t
             - 8 * t * t - 3 * S5 * t - 7 * t - 2 * S5 * q - 6 * q - 3 * S5 - 8.5)
    return -(t - 1) ** 2 * (t + 1) / 40 * inner


def psi_g(t, x):
    q = math.sqrt(1 + t)
    return 8 * t * t * (1 - x * x) * (5 - S5 + 2 * t + 3 * q - S5 * q + 2 * t * x
                                      - 2 * t * x * S5 + 2 * t * x * q - 2 * S5 * t * x * q) + 1


# 4x4 similarities and their spectral cubics ------------------------------

def xkms_cubic(t):
    """Coefficients (a, b, c, d) of R with det(X*X - x) = R(x)(x - 1)/102400."""
    a = 102400.0
    b = -320 * t**4 + 5760 * S5 * t * t - 28800 * t * t - 28800 * S5 - 75200
    c = (-546 * S5 * t**4 + 2374 * t**4 + 1710 * S5 * t * t + 4950 * t * t
         + 13350 * S5 + 29950)
    d = -1800 * S5 - 4025
    return a, b, c, d


def xatm_cubic(t, m):
    a = 102400.0
    b = (-15680 * t ** (2 * m) + 26880 * t ** (m + 2) - 11520 * t**4 + 5760 * S5 * t * t
         - 28800 * t * t - 28800 * S5 - 75200)
    c = (1470 * S5 * t ** (2 * m) + 3430 * t ** (2 * m) - 2016 * S5 * t ** (m + 2)
         - 3360 * t ** (m + 2) + 2304 * t**4 + 1710 * S5 * t * t + 4950 * t * t
         + 13350 * S5 + 29950)
    d = -1800 * S5 - 4025
    return a, b, c, d


def _depressed(a, b, c, d):
    p = (3 * a * c - b * b) / (3 * a * a)
    q = (2 * b**3 - 9 * a * b * c + 27 * a * a * d) / (27 * a**3)
    return p, q


def _G(coeffs):
    p, q = _depressed(*coeffs)
    return 3 * q * math.sqrt(-3 / p) / (2 * p)


def _amplitude(coeffs):
    p, _ = _depressed(*coeffs)
    return 2 * math.sqrt(-p / 3)


def xkms_amplitude_display(t):
    """Displayed closed form of ``|2 sqrt(-p/3)|`` for the KMS cubic."""
    return math.sqrt(t**8 + 36 * (5 - S5) * t**6 - 2 * (711 * S5 - 1534) * t**4
                     + 90 * (29 * S5 + 125) * t * t + 125 * (18 * S5 + 47)) / 480


def xatm_amplitude_display(t, m):
    u = 49 * t ** (2 * m) - 84 * t ** (m + 2) + 36 * t**4 - 18 * (S5 - 5) * t * t + 90 * S5 + 235
    v = (245 * (3 * S5 + 7) * t ** (2 * m) - 336 * (3 * S5 + 5) * t ** (m + 2) + 1152 * t**4
         + 45 * (19 * S5 + 55) * t * t + 25 * (267 * S5 + 599))
    return math.sqrt(u * u - 6 * v) / 480


def xatm_shift_display(t, m):
    """Displayed closed form of ``|b / (3a)|`` for the A_{t,m} cubic."""
    return (49 * t ** (2 * m) - 84 * t ** (m + 2) + 36 * t**4 - 18 * (S5 - 5) * t * t
            + 90 * S5 + 235) / 960


def xatm_H(t, m):
    """Smallest cubic root with the ``-b/(3a)`` shift removed."""
    coeffs = xatm_cubic(t, m)
    G = max(-1.0, min(1.0, _G(coeffs)))
    return _amplitude(coeffs) * math.cos(math.acos(G) / 3 - 4 * math.pi / 3)


def xkms_H(t):
    coeffs = xkms_cubic(t)
    G = max(-1.0, min(1.0, _G(coeffs)))
    return _amplitude(coeffs) * math.cos(math.acos(G) / 3 - 4 * math.pi / 3)


_REGISTRY: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "kms5.c": (kms5_c, ("t",)),
    "kms5.R2": (kms5_R2, ("t",)),
    "kms5.R": (lambda t: math.sqrt(kms5_R2(t)), ("t",)),
    "kms5.g": (kms5_g, ("t", "x")),
    "kms5.g1": (kms5_g1, ("t",)),
    "kms5.g2": (kms5_g2, ("t",)),
    "kms5.g3": (kms5_g3, ("t",)),
    "kms5.r": (kms5_r, ("t",)),
    "kms11.c": (kms11_c, ("t",)),
    "kms11.h": (kms11_h, ("t",)),
    "kms11.R": (kms11_R, ("t",)),
    "phi.c": (phi_c, ("t", "m")),
    "phi.R": (phi_R, ("t", "m")),
    "phi_alt.c": (phi_alt_c, ("t", "m")),
    "phi_alt.R": (phi_alt_R, ("t", "m")),
    "phi_alt.r": (phi_alt_r, ("t", "m")),
    "phi_alt.g_limit": (phi_alt_g_limit, ("m",)),
    "phi_alt.h_limit": (phi_alt_h_limit, ("m",)),
    "phi_alt.ell": (phi_alt_ell, ("m",)),
    "psi.c": (psi_c, ("t",)),
    "psi.R2": (psi_R2, ("t",)),
    "psi.R": (lambda t: math.sqrt(psi_R2(t)), ("t",)),
    "psi.g": (psi_g, ("t", "x")),
    "xkms.G": (lambda t: _G(xkms_cubic(t)), ("t",)),
    "xkms.amplitude": (xkms_amplitude_display, ("t",)),
    "xkms.shift": (lambda t: xkms_cubic(t)[1] / (3 * xkms_cubic(t)[0]), ("t",)),
    "xkms.H": (xkms_H, ("t",)),
    "xatm.G": (lambda t, m: _G(xatm_cubic(t, m)), ("t", "m")),
    "xatm.amplitude": (xatm_amplitude_display, ("t", "m")),
    "xatm.shift": (xatm_shift_display, ("t", "m")),
    "xatm.H": (xatm_H, ("t", "m")),
}

_CURVES = {
    "kms5": (kms5_curve_coeffs, ("t",)),
    "phi": (phi_curve_coeffs, ("t", "m")),
    "phi_alt": (phi_alt_curve_coeffs, ("t", "m")),
    "psi": (psi_curve_coeffs, ("t",)),
}


def names() -> list[str]:
    return sorted(_REGISTRY)


def _call(table, name, t, m, x):
    try:
        fn, args = table[name]
    except KeyError:
        raise UnknownFormulaError(f"no formula named {name!r}") from None
    vals = {"t": t, "m": m, "x": x}
    missing = [a for a in args if vals[a] is None]
    if missing:
        raise InputError(f"formula {name!r} needs {', '.join(missing)}")
    if t is not None and "t" in args and not 0.0 <= t < 1.0:
        raise InputError("t must lie in [0, 1)")
    return fn(*(vals[a] for a in args))


def closed_form(name: str, t: float | None = None, m: int | None = None, x: float | None = None):
    """Evaluate the registered formula ``name``."""
    return _call(_REGISTRY, name, t, m, x)


def paper_curve_coeffs(name: str, t: float, m: int | None = None) -> np.ndarray:
    """Hand-derived curve coefficients (index = frequency)."""
    return np.asarray(_call(_CURVES, name, t, m, None), dtype=complex)
