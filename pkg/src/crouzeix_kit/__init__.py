"""Numerical ranges of compressed shifts, disk criteria and Crouzeix certificates."""

from .blaschke import (
    BlaschkeProduct,
    EuclideanDisk,
    PseudoDisk,
    euclid_to_pseudo,
    pseudo_distance,
    pseudo_to_euclid,
)
from .closed_forms import closed_form
from .crouzeix import (
    CrouzeixCertificate,
    CubicSpectrum,
    PowerSeries,
    build_bt,
    condition_product,
    crouzeix_inequality_test,
    cubic_roots,
    paper_xt,
    series_revert,
)
from .disks import (
    DiskCriterionReport,
    check_criterion,
    criterion_threshold,
    inscribed_center,
    inscribed_radius,
)
from .errors import CrouzeixKitError, InputError, NumericError
from .levelset import LscReport, level_set_boundary, lsc_check, max_modulus_on_range
from .linalg import hermitian_eig, inverse_norm, jordan_chain_nilpotent, operator_norm
from .modelspace import MatrixFamilySpec, build_atm, build_kms, build_model_matrix
from .numrange import TrigCurve, VectorPath, boundary, curve_from_path, kms_curve

__version__ = "0.1.0"

__all__ = [
    "BlaschkeProduct", "EuclideanDisk", "PseudoDisk", "euclid_to_pseudo", "pseudo_distance",
    "pseudo_to_euclid", "closed_form", "CrouzeixCertificate", "CubicSpectrum", "PowerSeries",
    "build_bt", "condition_product", "crouzeix_inequality_test", "cubic_roots", "paper_xt",
    "series_revert", "DiskCriterionReport", "check_criterion", "criterion_threshold",
    "inscribed_center", "inscribed_radius", "CrouzeixKitError", "InputError", "NumericError",
    "LscReport", "level_set_boundary", "lsc_check", "max_modulus_on_range", "hermitian_eig",
    "inverse_norm", "jordan_chain_nilpotent", "operator_norm", "MatrixFamilySpec", "build_atm",
    "build_kms", "build_model_matrix", "TrigCurve", "VectorPath", "boundary", "curve_from_path",
    "kms_curve",
]
