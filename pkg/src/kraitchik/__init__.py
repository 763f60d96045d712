"""Exact construction and validated verification of the Gauss-Kraitchik
decomposition 4*Phi_d(X) = Psi_d(X)^2 - D*Xi_d(X)^2 for odd squarefree d."""

from .construct import (
    IdentityReport,
    KraitchikPair,
    SymmetryReport,
    check_symmetry,
    cyclotomic,
    psi_xi,
    u_coefficients,
    verify_identity,
)
from .powersums import DiscriminantContext, power_sum_s, ramanujan_h
from .qfield import QuadElem, abs_square, cmp_surd, l1_norm_parts

__all__ = [
    "DiscriminantContext",
    "IdentityReport",
    "KraitchikPair",
    "QuadElem",
    "SymmetryReport",
    "abs_square",
    "check_symmetry",
    "cmp_surd",
    "cyclotomic",
    "l1_norm_parts",
    "power_sum_s",
    "psi_xi",
    "ramanujan_h",
    "u_coefficients",
    "verify_identity",
]
