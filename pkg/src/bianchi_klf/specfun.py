"""Special-function kernels: K_nu, incomplete gamma, zeta_K, L(s, chi_D), e(x), summation."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy import special

from .numfield import ImagQuadField, kronecker_symbol

EULER_GAMMA = 0.57721566490153286061


def e_char(x):
    """e(x) = exp(2 pi i x)."""
    if np.ndim(x):
        return np.exp(2j * np.pi * np.asarray(x))
    return cmath.exp(2j * math.pi * x)


def fsum_complex(values: Iterable[complex]) -> complex:
    """Correctly rounded sum of complex values (real and imaginary parts separately)."""
    vals = np.asarray(list(values) if not isinstance(values, np.ndarray) else values, dtype=complex)
    return complex(math.fsum(vals.real.tolist()), math.fsum(vals.imag.tolist()))


def fsum(values) -> float:
    return math.fsum(np.asarray(values, dtype=float).ravel().tolist())


def bessel_k(nu, x):
    """Modified Bessel function of the second kind K_nu(x), real nu, x > 0."""
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr <= 0):
        raise ValueError("bessel_k needs x > 0")
    # K is even in nu and flat at nu = 0; tiny (subnormal) orders make kv return nan
    nu = np.abs(np.asarray(nu, dtype=float))
    nu = np.where(nu < 1e-12, 0.0, nu)
    out = special.kv(nu, x_arr)
    return float(out) if out.ndim == 0 else out


def bessel_k_quadrature(nu: float, x: float) -> float:
    """K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt, by adaptive quadrature."""
    from scipy.integrate import quad

    if x <= 0:
        raise ValueError("bessel_k needs x > 0")
    tmax = math.acosh(max(1.0, 745.0 / x + 1.0)) + 1.0
    val, _ = quad(lambda t: math.exp(-x * math.cosh(t)) * math.cosh(nu * t), 0, tmax, epsabs=0, epsrel=1e-13, limit=400)
    return val


def upper_gamma(a: float, x):
    """Upper incomplete gamma Gamma(a, x) for any real a and x > 0 (vectorised in x)."""
    x = np.asarray(x, dtype=float)
    if a > 0:
        return special.gammaincc(a, x) * special.gamma(a)
    m = int(math.ceil(-a)) if a != int(a) else int(-a)
    start = a + m  # > 0, or == 0 for integer a
    if start == 0:
        g = special.exp1(x)
    else:
        g = special.gammaincc(start, x) * special.gamma(start)
    # Gamma(b, x) = (Gamma(b + 1, x) - x^b e^{-x}) / b, walking b down from start to a
    b = start
    for _ in range(m):
        b -= 1
        g = (g - x ** b * np.exp(-x)) / b
    return g


def theta_tail(a: float, q):
    """G_a(q) = int_1^inf t^(a-1) exp(-pi q t) dt, q > 0."""
    q = np.asarray(q, dtype=float)
    y = np.pi * q
    return upper_gamma(a, y) * y ** (-a)


# -- zeta and L-functions ------------------------------------------------------


def riemann_zeta(s: float) -> float:
    if s <= 1:
        raise ValueError("riemann_zeta implemented for s > 1 only")
    return float(special.zeta(s, 1))


def quadratic_l(s: float, D: int) -> float:
    """L(s, chi_D) for a fundamental discriminant D, via Hurwitz zeta; s > 0, s != 1 OK for D != 1."""
    q = abs(D)
    if s <= 0:
        raise ValueError("quadratic_l implemented for s > 0")
    if s == 1:
        # the Hurwitz poles cancel; L(1, chi) = -(1/q) sum chi(a) digamma(a/q)
        return -math.fsum(kronecker_symbol(D, a) * float(special.digamma(a / q)) for a in range(1, q + 1)) / q
    total = 0.0
    for a in range(1, q + 1):
        chi = kronecker_symbol(D, a)
        if chi:
            total += chi * float(special.zeta(s, a / q))
    return total * q ** (-s)


def quadratic_l_series(s: float, D: int, terms: int = 2_000_000) -> float:
    """Direct partial sum of sum chi_D(n) n^{-s}, blocked over full periods (oracle)."""
    q = abs(D)
    period = q * (terms // q)
    n = np.arange(1, period + 1, dtype=float)
    chi = np.array([kronecker_symbol(D, a) for a in range(1, q + 1)], dtype=float)
    chis = np.tile(chi, period // q)
    return fsum(chis * n ** (-s))


def dedekind_zeta(F: ImagQuadField, s: float) -> float:
    """zeta_K(s) = zeta(s) L(s, chi_{d_K}) for s > 1."""
    if s <= 1:
        raise ValueError("dedekind_zeta needs s > 1")
    return riemann_zeta(s) * quadratic_l(s, F.disc)


def dedekind_zeta_element_sum(F: ImagQuadField, s: float, radius: float = 400.0) -> float:
    """(1/w) sum over nonzero alpha in O_K of N(alpha)^-s with a continuum tail estimate."""
    from .numfield import lattice_points_in_disc

    xs, ys = lattice_points_in_disc(F.d, radius)
    z = xs + ys * F.omega
    n = np.abs(z) ** 2
    n = n[n > 0.5]
    head = fsum(np.sort(n ** (-s))[::-1])
    # int_{|z| > R} |z|^{-2s} dA / covolume
    tail = 2 * math.pi * radius ** (2 - 2 * s) / (2 * s - 2) / F.covolume
    return (head + tail) / F.unit_count


def dedekind_zeta_residue(F: ImagQuadField) -> float:
    """Residue of zeta_K at s = 1 (class number one): 2 pi / (w sqrt|d_K|)."""
    return 2 * math.pi / (F.unit_count * math.sqrt(abs(F.disc)))


def vol_gamma(F: ImagQuadField) -> float:
    """Covolume of PSL(2, O_K): |d_K|^{3/2} zeta_K(2) / (4 pi^2)."""
    return abs(F.disc) ** 1.5 * dedekind_zeta(F, 2.0) / (4 * math.pi ** 2)


@dataclass(frozen=True)
class ZetaValue:
    s: float
    value: float
    method: str
    truncation: float | None = None


def zeta_value(F: ImagQuadField, s: float, method: str = "euler-factorization") -> ZetaValue:
    if method == "euler-factorization":
        return ZetaValue(s, dedekind_zeta(F, s), method)
    if method == "dirichlet-series":
        return ZetaValue(s, dedekind_zeta_element_sum(F, s), method, 400.0)
    raise ValueError(f"unknown method {method!r}")


def gamma_fn(s: float) -> float:
    return float(special.gamma(s))
