"""Exact Weil-Petersson volumes and the intersection numbers they encode."""

from .arith import bernoulli, zeta_even_coeff
from .intersection import closed_volume, correlator, psi_kappa
from .polyring import VolumePolynomial
from .recursion import VolumeCache, compute_volume, kernel_F
from .reports import CheckReport

__all__ = [
    "bernoulli",
    "zeta_even_coeff",
    "VolumePolynomial",
    "VolumeCache",
    "compute_volume",
    "kernel_F",
    "closed_volume",
    "correlator",
    "psi_kappa",
    "CheckReport",
]
