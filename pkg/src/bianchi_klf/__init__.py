"""Eisenstein series for PSL(2, O_K) acting on hyperbolic 3-space, their Kronecker
limit formula, the eta and D functions built from it, and elliptic Dedekind sums."""

from .cosets import coset_reps_infinity, double_coset_reps
from .eisenstein import (
    EisensteinValue,
    LaurentData,
    eisenstein_direct,
    eisenstein_fourier,
    eisenstein_hat,
    fourier_coefficient,
    fourier_coefficient_quadrature,
    laurent_a0,
    laurent_phi0,
    phi,
)
from .elliptic import eisenstein_kronecker_e1, elliptic_dedekind, egm_g, geta_comparison, zeta2_check
from .hspace import GMatrix, HPoint, moebius
from .lattice import CLattice
from .limit import d_gamma, klf_lhs, klf_rhs, log_eta
from .numfield import AlgInt, ImagQuadField

__all__ = [
    "AlgInt", "CLattice", "EisensteinValue", "GMatrix", "HPoint", "ImagQuadField", "LaurentData",
    "coset_reps_infinity", "d_gamma", "double_coset_reps", "egm_g", "eisenstein_direct",
    "eisenstein_fourier", "eisenstein_hat", "eisenstein_kronecker_e1", "elliptic_dedekind",
    "fourier_coefficient", "fourier_coefficient_quadrature", "geta_comparison", "klf_lhs",
    "klf_rhs", "laurent_a0", "laurent_phi0", "log_eta", "moebius", "phi", "zeta2_check",
]
