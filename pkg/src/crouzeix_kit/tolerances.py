"""Numerical tolerances shared across the package."""

STRUCTURAL_ZERO = 1e-12
RESIDUAL = 1e-10
NORM_ACCURACY = 1e-9

# largest dimension handled by the dense Hermitian solver
MAX_DIMENSION = 16

# family parameters are capped below 1 so that 1 - t**2 stays well away from 0
T_CAP = 1.0 - 1e-6
