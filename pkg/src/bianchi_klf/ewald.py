"""Theta-splitting (Ewald / Riemann) evaluation of Epstein-type lattice sums.

Both routines return the analytically continued value, so they remain valid at
exponents where the plain lattice sum only converges conditionally or diverges.
The split point is fixed at t = 1 after rescaling the form to unit determinant;
terms are dropped once exp(-pi q) is below ~1e-17.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special

from .lattice import CLattice, pairing
from .specfun import fsum, fsum_complex, theta_tail

QMAX = 12.5


def _box_points(Ainv: np.ndarray, qmax: float) -> np.ndarray:
    n = Ainv.shape[0]
    bounds = [int(math.floor(math.sqrt(qmax * Ainv[i, i]) + 1e-9)) for i in range(n)]
    axes = [np.arange(-b, b + 1) for b in bounds]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)
    return grid


def _quad_values(A: np.ndarray, pts: np.ndarray) -> np.ndarray:
    return np.einsum("ij,jk,ik->i", pts, A, pts)


def epstein_zeta(A: np.ndarray, sigma: float, qmax: float = QMAX) -> float:
    """Sum over nonzero x in Z^n of (x^T A x)^(-sigma), continued meromorphically in sigma.

    A must be symmetric positive definite.  Pole at sigma = n/2 only.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    det = float(np.linalg.det(A))
    kappa = det ** (1.0 / n)
    An = A / kappa
    Ainv = np.linalg.inv(An)
    x = _box_points(Ainv, qmax)
    q = _quad_values(An, x)
    q = q[(q > 0) & (q <= qmax)]
    k = _box_points(An, qmax)
    qs = _quad_values(Ainv, k)
    qs = qs[(qs > 0) & (qs <= qmax)]
    real = fsum(np.sort(theta_tail(sigma, q))[::-1])
    recip = fsum(np.sort(theta_tail(n / 2 - sigma, qs))[::-1])
    bracket = real + recip + 1.0 / (sigma - n / 2) - 1.0 / sigma
    return float(kappa ** (-sigma) * math.pi ** sigma / special.gamma(sigma) * bracket)


def epstein_residue(A: np.ndarray) -> float:
    """Residue at sigma = n/2 of epstein_zeta(A, sigma)."""
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    return math.pi ** (n / 2) / special.gamma(n / 2) / math.sqrt(np.linalg.det(A))


def hecke_sum(L: CLattice, z: complex, k: int, sigma: float, qmax: float = QMAX) -> complex:
    """Sum over lambda in L, z + lambda != 0, of conj(z + lambda)^k |z + lambda|^(-2 sigma).

    Entire in sigma for k >= 1; for k = 0 there is a pole at sigma = 1.
    """
    a = math.sqrt(L.area)
    Ln = CLattice(L.w1 / a, L.w2 / a)
    zn = complex(z) / a
    zn = complex(Ln.reduce(zn))
    D = Ln.dual()
    Rr = math.sqrt(qmax) + abs(zn) + 1e-9
    lam, _, _ = Ln.points(Rr, include_zero=True)
    w = zn + lam
    q = np.abs(w) ** 2
    keep = (q > 1e-24) & (q <= qmax)
    w, q = w[keep], q[keep]
    real = fsum_complex(np.conj(w) ** k * theta_tail(sigma, q))
    mu = D.points(math.sqrt(qmax))[0]
    qm = np.abs(mu) ** 2
    phase = np.exp(2j * np.pi * pairing(mu, zn))
    recip = (-1j) ** k * fsum_complex(np.conj(mu) ** k * phase * theta_tail(k + 1 - sigma, qm))
    total = real + recip
    if k == 0:
        total += 1.0 / (sigma - 1.0)
        if Ln.contains(zn):
            total -= 1.0 / sigma
    value = math.pi ** sigma / special.gamma(sigma) * total
    return complex(value * a ** (k - 2 * sigma))
