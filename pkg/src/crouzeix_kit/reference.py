"""Published reference values used by ``repro`` and the acceptance tests."""

from __future__ import annotations

import math

from .numrange import VectorPath

# Phi_t: canonical-path onset t_m of the 1/sqrt(2) disk, m = 2..7
PHI_ONSET = {2: 0.11, 3: 0.27, 4: 0.41, 5: 0.50, 6: 0.57, 7: 0.62}

# Phi_t: improved onset t*_m with hand-picked path weights (a, b, c)
PHI_WEIGHTED_ONSET = {2: 0.09, 3: 0.18, 4: 0.24, 5: 0.28, 6: 0.28, 7: 0.29}

_r = math.sqrt
PHI_WEIGHTS = {
    2: (_r(6) / 5, 4 * _r(19) / 25, 3 * _r(19) / 25),
    3: (1 / _r(5), 2 / 3, 4 / (3 * _r(5))),
    4: (_r(2) / _r(11), 3 * _r(6) / 11, 3 * _r(5) / 11),
    5: (_r(3) / (2 * _r(5)), _r(17) / (5 * _r(2)), _r(51) / 10),
    6: (1 / (2 * _r(2)), 3 * _r(7) / (10 * _r(2)), _r(14) / 5),
    7: (1 / 3, 2 * _r(2) / (3 * _r(3)), 4 / (3 * _r(3))),
}

# path used for the t -> 1 limit of Phi_t
PHI_LIMIT_WEIGHTS = (_r(11) / 6, 2 / 3, 1 / 2)

# ||X_{t,m}^{-1}|| <= K_m on [0, 1) and <= 2 on [0, t*_m], n = 4
INVERSE_NORM_TABLE = {2: (2.83, 0.363), 3: (2.83, 0.368), 4: (2.83, 0.367)}
KMS_INVERSE_BOUND = (2.83, 0.363)

# (n, m) -> (max condition product, end of the interval with product < 2)
ATM_TABLE = {
    (4, 5): (2.38, 0.438), (4, 6): (2.38, 0.438), (4, 7): (2.38, 0.438),
    (5, 2): (2.51, 0.364), (5, 3): (2.51, 0.368), (5, 4): (2.51, 0.368),
    (6, 2): (2.63, 0.306), (6, 3): (2.63, 0.307), (6, 4): (2.63, 0.307),
}

# n -> (max condition product, interval end) for the KMS matrices
KMS_TABLE = {6: (2.63, 0.545), 7: (2.73, 0.580), 8: (2.81, 0.608)}

PRODUCT_TOL = 0.05
INTERVAL_TOL = 0.01

# level-set configurations: Theta zeros and B zeros
LSC_CASES = {
    "a": ((0.5, 0.5, 0.5), (5 / 9 + 0.2j, 2 / 3 - 2j / 9)),
    "b": ((0.5, 0.5, 0.5), (5 / 9, 3 / 4)),
    "c": ((0.5, 0.5, 0.5), (0.5 - 2j / 11, 2 / 3 - 0.25j)),
}


def phi_path(m: int) -> VectorPath:
    return VectorPath(PHI_WEIGHTS[m])
