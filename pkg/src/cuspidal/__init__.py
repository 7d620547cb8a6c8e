"""Cuspidal forms of point configurations.

The cuspidal form of a configuration A with Gale dual B is the homogeneous
polynomial whose zero set cuts out the cusps of the discriminant in the
Horn-Kapranov parameters.  It vanishes identically exactly when A is dual
defective.
"""

from .bivariate import classify_conic, conic_fit_oracle, conic_report, normal_form_2d, signature_2d
from .circuits import classify, contains_iterated_circuit, is_iterated_circuit
from .configuration import (GaleDual, PointConfiguration, adapted_gale_dual, gale_dual,
                            minor_duality_constant, validate_normalize)
from .core import cuspidal_form, cuspidal_polynomial, hessian_form, is_dual_defective, jacobian_rank
from .linalg import Matrix
from .poly import Polynomial

__version__ = "0.1.0"

__all__ = [
    "GaleDual", "Matrix", "PointConfiguration", "Polynomial",
    "adapted_gale_dual", "classify", "classify_conic", "conic_fit_oracle", "conic_report",
    "contains_iterated_circuit", "cuspidal_form", "cuspidal_polynomial", "gale_dual",
    "hessian_form", "is_dual_defective", "is_iterated_circuit", "jacobian_rank",
    "minor_duality_constant", "normal_form_2d", "signature_2d", "validate_normalize",
]
