"""Matrix models: M_Theta from zeros, KMS matrices A_t and the A_{t,m} family.

:class:`MatrixFamilySpec` names a matrix by family and parameters.  Besides
the three matrix families (``mtheta``, ``kms``, ``atm``) it accepts three
shorthands for Blaschke products used throughout the disk analysis:

``theta``  zero t repeated n times
``phi``    zeros (t, t, t**(1/m))
``psi``    zeros (t, t, t, sqrt(t))

all of which resolve to an explicit zero list and are built like ``mtheta``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .blaschke import BlaschkeProduct
from .errors import InputError, ParameterOutOfRangeError, ZeroOutsideDiskError
from .tolerances import T_CAP

FAMILIES = ("mtheta", "kms", "atm", "theta", "phi", "psi")
NILPOTENT_FAMILIES = ("kms", "atm")


def build_model_matrix(zeros: Sequence[complex]) -> np.ndarray:
    """Upper triangular matrix of the compressed shift attached to ``zeros``."""
    a = np.asarray(list(zeros), dtype=complex)
    if a.size == 0:
        raise InputError("need at least one zero")
    if np.any(np.abs(a) >= 1.0):
        raise ZeroOutsideDiskError("all zeros must lie in the open unit disk")
    n = a.size
    d = np.sqrt(1.0 - np.abs(a) ** 2)
    M = np.diag(a)
    for i in range(n):
        prod = 1.0 + 0j
        for j in range(i + 1, n):
            # prod runs over k = i+1 .. j-1, empty for j = i+1
            M[i, j] = d[i] * d[j] * prod
            prod *= -np.conj(a[j])
    return M


def _check_t(t: float) -> float:
    t = float(t)
    if not 0.0 <= t < 1.0:
        raise ParameterOutOfRangeError(f"t = {t} outside [0, 1)")
    return t


def build_kms(n: int, t: float) -> np.ndarray:
    """Strictly upper triangular ``A_t`` with entries ``(-t)**(j-i-1)``."""
    if n < 2:
        raise ParameterOutOfRangeError("n must be at least 2")
    t = _check_t(t)
    i, j = np.indices((n, n))
    A = np.where(j > i, (-t) ** np.clip(j - i - 1, 0, None), 0.0)
    return A.astype(complex)


def build_atm(n: int, m: int, t: float) -> np.ndarray:
    """``A_{t,m}``: ones on the superdiagonal, t^m in the corner, t elsewhere above."""
    if n < 4 or m < 2:
        raise ParameterOutOfRangeError("A_{t,m} needs n >= 4 and m >= 2")
    t = _check_t(t)
    A = np.triu(np.full((n, n), t, dtype=complex), 2)
    A += np.eye(n, k=1)
    A[0, n - 1] = t**m
    return A


@dataclass(frozen=True)
class MatrixFamilySpec:
    family: str
    n: int = 0
    t: float = 0.0
    m: int | None = None
    zeros: tuple[complex, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        object.__setattr__(self, "zeros", tuple(complex(z) for z in self.zeros))
        if self.family == "mtheta":
            if not self.zeros:
                raise InputError("family mtheta needs zeros")
            object.__setattr__(self, "n", len(self.zeros))
            return
        if not 0.0 <= self.t <= T_CAP:
            raise ParameterOutOfRangeError(f"t = {self.t} outside [0, {T_CAP}]")
        if self.family == "phi":
            object.__setattr__(self, "n", 3)
        elif self.family == "psi":
            object.__setattr__(self, "n", 4)
        if self.n < 2:
            raise ParameterOutOfRangeError("n must be at least 2")
        if self.family in ("atm", "phi"):
            if self.m is None or self.m < (2 if self.family == "atm" else 1):
                raise ParameterOutOfRangeError(f"family {self.family} needs m >= 2")
            if self.family == "atm" and self.n < 4:
                raise ParameterOutOfRangeError("family atm needs n >= 4")

    def with_t(self, t: float) -> "MatrixFamilySpec":
        return MatrixFamilySpec(self.family, self.n, t, self.m, self.zeros)

    def blaschke_zeros(self) -> tuple[complex, ...]:
        """Zeros of the Blaschke product behind the spec (not for kms/atm)."""
        t = self.t
        if self.family == "mtheta":
            return self.zeros
        if self.family == "theta":
            return (complex(t),) * self.n
        if self.family == "phi":
            return (complex(t), complex(t), complex(t ** (1.0 / self.m)))
        if self.family == "psi":
            return (complex(t),) * 3 + (complex(math.sqrt(t)),)
        raise InputError(f"family {self.family} is a nilpotent family without zeros")

    def blaschke(self) -> BlaschkeProduct:
        if self.family == "kms":
            return BlaschkeProduct((complex(self.t),) * self.n)
        return BlaschkeProduct(self.blaschke_zeros())

    def matrix(self) -> np.ndarray:
        if self.family == "kms":
            return build_kms(self.n, self.t)
        if self.family == "atm":
            return build_atm(self.n, self.m, self.t)
        return build_model_matrix(self.blaschke_zeros())

    def label(self) -> str:
        if self.family == "mtheta":
            return "mtheta[" + ",".join(f"{z.real:g}{z.imag:+g}i" for z in self.zeros) + "]"
        m = f",m={self.m}" if self.m is not None else ""
        return f"{self.family}(n={self.n}{m},t={self.t:g})"

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "m": self.m,
            "t": self.t,
            "zeros": [[z.real, z.imag] for z in self.zeros],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "MatrixFamilySpec":
        zeros = tuple(complex(z[0], z[1]) if isinstance(z, (list, tuple)) else complex(z)
                      for z in d.get("zeros") or ())
        return cls(d["family"], int(d.get("n") or 0), float(d.get("t") or 0.0),
                   d.get("m"), zeros)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "MatrixFamilySpec":
        return cls.from_dict(json.loads(text))


def kms_identity_residual(n: int, t: float) -> float:
    """Entrywise gap between M_{Theta_t} and ``t I + (1 - t^2) A_t``."""
    M = build_model_matrix([t] * n)
    return float(np.abs(M - (t * np.eye(n) + (1 - t * t) * build_kms(n, t))).max())
