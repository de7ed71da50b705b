"""Eisenstein-Kronecker E_1, elliptic Dedekind sums, Weierstrass invariants and the function g(u).

E_1(z, L) is the Hecke-regularised value of sum_lambda conj(z + lambda) / |z + lambda|^2,
i.e. the value at t = 0 of the entire function
    t -> sum_lambda conj(z + lambda) |z + lambda|^(-2 - 2t).
It is odd and L-periodic, and equals zeta_W(z) - s_2 z - (pi/|L|) conj(z).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import eisenstein as eis
from .ewald import hecke_sum
from .hspace import HPoint
from .lattice import CLattice, pairing, residues_mod_lattice
from .limit import c_gamma, eta_constant, log_eta, log_eta_as_printed
from .numfield import AlgInt, ImagQuadField, lattice_points_in_disc
from .specfun import EULER_GAMMA, bessel_k, dedekind_zeta, dedekind_zeta_element_sum, fsum, fsum_complex

HECKE_T = (0.02, 0.01, 0.005)


@dataclass(frozen=True)
class EllipticSum:
    c: AlgInt
    d: AlgInt
    lattice: CLattice
    value: complex
    coprime: bool = True


@dataclass(frozen=True)
class WeierstrassData:
    lattice: CLattice
    g2: complex
    g3: complex
    delta: complex
    s2: complex


# -- E_1 ----------------------------------------------------------------------


def _reduced_basis(L: CLattice) -> tuple[complex, complex]:
    """Lagrange-Gauss reduced oriented basis (w1, w2) with tau = w2/w1 in the usual fundamental domain."""
    w1, w2 = L.w1, L.w2
    while True:
        if abs(w2) < abs(w1):
            w1, w2 = w2, w1
        m = round((w2 / w1).real)
        if m == 0:
            break
        w2 = w2 - m * w1
    if (w2 / w1).imag < 0:
        w2 = -w2
    return w1, w2


def _e1_weierstrass_unit(z: complex, tau: complex, nterms: int = 60) -> complex:
    """E_1 for the lattice Z + Z tau via the q-expansion of the Weierstrass zeta function."""
    # bring z near 0 so the sine series converges quickly
    k = round(z.imag / tau.imag)
    z = z - k * tau
    z = z - round(z.real)
    q = cmath.exp(2j * math.pi * tau)
    n = np.arange(1, nterms + 1)
    qn = q ** n
    series = np.sum(qn / (1 - qn) * np.sin(2 * math.pi * n * z))
    A = tau.imag
    return complex(math.pi / cmath.tan(math.pi * z) + 4 * math.pi * series + math.pi / A * (z - z.conjugate()))


def eisenstein_kronecker_e1(z: complex, L: CLattice, method: str = "hecke") -> complex:
    """E_1(z, L) for z not in L.

    ``hecke``: theta-split evaluation of the regularised sum exactly at t = 0.
    ``hecke-richardson``: the same sum at t in {0.02, 0.01, 0.005}, extrapolated.
    ``weierstrass``: zeta_W(z) - s_2 z - (pi/|L|) conj(z) with zeta_W from q-series.
    """
    z = complex(z)
    if L.contains(z, tol=1e-12):
        raise ValueError("E_1 has a pole on the lattice")
    if method == "hecke":
        return hecke_sum(L, z, 1, 1.0)
    if method == "hecke-richardson":
        vals = [hecke_sum(L, z, 1, 1.0 + t) for t in HECKE_T]
        re, _ = eis.richardson([v.real for v in vals])
        im, _ = eis.richardson([v.imag for v in vals])
        return complex(re, im)
    if method == "weierstrass":
        w1, w2 = _reduced_basis(L)
        return _e1_weierstrass_unit(z / w1, w2 / w1) / w1
    raise ValueError(f"unknown method {method!r}")


def weierstrass_zeta(z: complex, L: CLattice) -> complex:
    """Weierstrass zeta_W(z) = E_1(z) + s_2 z + (pi/|L|) conj(z)."""
    s2 = weierstrass_invariants(L).s2
    e1 = eisenstein_kronecker_e1(z, L, "weierstrass")
    return e1 + s2 * z + math.pi / L.area * complex(z).conjugate()


# -- elliptic Dedekind sums ---------------------------------------------------------


def elliptic_dedekind(c: AlgInt, d: AlgInt, L: CLattice | None = None, method: str = "hecke") -> EllipticSum:
    """D(c, d) = (1/d) sum over k in L/dL of E_1(ck/d) E_1(k/d), terms with a pole omitted."""
    F = d.field
    if d.is_zero():
        raise ValueError("D(c, d) needs d != 0")
    if L is None:
        L = CLattice.from_field(F)
    cc, dd = complex(c), complex(d)
    terms = []
    for k in residues_mod_lattice(dd, L):
        x1, x2 = cc * k / dd, k / dd
        if L.contains(x1, 1e-9) or L.contains(x2, 1e-9):
            continue
        terms.append(eisenstein_kronecker_e1(x1, L, method) * eisenstein_kronecker_e1(x2, L, method))
    val = fsum_complex(np.array(terms, dtype=complex)) / dd if terms else 0j
    return EllipticSum(c, d, L, complex(val), F.coprime(c, d))


# -- Weierstrass invariants -----------------------------------------------------------


@lru_cache(maxsize=64)
def _invariants(w1: complex, w2: complex) -> WeierstrassData:
    L = CLattice(w1, w2)
    g2 = 60 * hecke_sum(L, 0j, 4, 4.0)
    g3 = 140 * hecke_sum(L, 0j, 6, 6.0)
    s2 = hecke_sum(L, 0j, 2, 2.0)
    return WeierstrassData(L, complex(g2), complex(g3), complex(g2 ** 3 - 27 * g3 ** 2), complex(s2))


def weierstrass_invariants(L: CLattice) -> WeierstrassData:
    """g2 = 60 sum' lambda^-4, g3 = 140 sum' lambda^-6, Delta = g2^3 - 27 g3^2, s_2 = Hecke-summed sum' lambda^-2."""
    return _invariants(complex(L.w1), complex(L.w2))


def weierstrass_invariants_series(L: CLattice) -> WeierstrassData:
    """Independent evaluation from the q-expansions of E_4, E_6 and E_2."""
    w1, w2 = _reduced_basis(L)
    tau = w2 / w1
    q = cmath.exp(2j * math.pi * tau)
    n = np.arange(1, 80)
    sig = lambda k: np.array([sum(d ** k for d in range(1, m + 1) if m % d == 0) for m in n], dtype=float)
    qn = q ** n
    E2 = 1 - 24 * np.sum(sig(1) * qn)
    E4 = 1 + 240 * np.sum(sig(3) * qn)
    E6 = 1 - 504 * np.sum(sig(5) * qn)
    g2 = 4 * math.pi ** 4 / 3 * E4 / w1 ** 4
    g3 = 8 * math.pi ** 6 / 27 * E6 / w1 ** 6
    # Hecke-summed weight 2: G2(tau) - pi / Im tau, scaled
    s2 = (math.pi ** 2 / 3 * E2 - math.pi / tau.imag) / w1 ** 2
    return WeierstrassData(L, complex(g2), complex(g3), complex(g2 ** 3 - 27 * g3 ** 2), complex(s2))


# -- the function g(u) ----------------------------------------------------------


@lru_cache(maxsize=None)
def zeta_mn(d: int, s: float = 2.0) -> float:
    """zeta(O_K, O_K, s) as the literal element sum sum' N(lambda)^-s (unit multiplicity included)."""
    F = ImagQuadField.of(d)
    return F.unit_count * dedekind_zeta_element_sum(F, s)


def sigma_elements(F: ImagQuadField, w: AlgInt, s: float) -> float:
    """sum over lambda in O_K with lambda | w of N(lambda)^s."""
    return eis.element_divisor_sigma(F, w, s)


def sigma_elements_bruteforce(F: ImagQuadField, w: AlgInt, s: float) -> float:
    n = w.norm()
    return fsum([float(l.norm()) ** s for l in F.elements_up_to_norm(n) if not l.is_zero() and l.divides(w)])


def egm_g(F: ImagQuadField, u: HPoint, w_max: float | None = None, character: str = "dual") -> float:
    """g(u) for m = u = O_K.

    ``character="dual"`` pairs w with the dual-lattice vector (2i/sqrt|d_K|) w, which is
    O_K-periodic for every field.  ``"printed"`` uses 2 conj(w) / sqrt|d_K|, which coincides
    with the dual choice (after reindexing) only for d = -1.
    """
    D = abs(F.disc)
    if w_max is None:
        w_max = 45.0 * math.sqrt(D) / (4 * math.pi * u.r)
    if 4 * math.pi * w_max * u.r / math.sqrt(D) < 40:
        raise ValueError("w_max too small: need 4 pi w_max r / sqrt|d_K| >= 40")
    xs, ys = lattice_points_in_disc(F.d, w_max)
    keep = (xs != 0) | (ys != 0)
    xs, ys = xs[keep], ys[keep]
    w = xs + ys * F.omega
    aw = np.abs(w)
    sig = eis.divisor_sigma_many(F, xs, ys, -1.0) * F.unit_count
    if character == "dual":
        freq = eis.dual_generator(F) * w
    elif character == "printed":
        freq = 2 * np.conj(w) / math.sqrt(D)
    else:
        raise ValueError(f"unknown character {character!r}")
    phase = np.cos(2 * np.pi * pairing(freq, u.z))
    terms = aw * sig * u.r * bessel_k(1.0, 4 * np.pi * aw * u.r / math.sqrt(D)) * phase
    if character == "printed":
        terms = aw * sig * u.r * bessel_k(1.0, 4 * np.pi * aw * u.r / math.sqrt(D)) * np.exp(
            2j * np.pi * pairing(freq, u.z)
        )
        series = fsum_complex(terms).real
    else:
        series = fsum(terms)
    return float(D / (4 * math.pi ** 2) * zeta_mn(F.d) * u.r ** 2 + 2 * series)


def b_gamma(F: ImagQuadField, r: float) -> float:
    """(4 pi^2/|d_K|)(2 gamma - 1 - log|d_K| - log r - (1/6) log g~(O_K)), g~ = (2 pi)^-12 |Delta(O_K)|."""
    D = abs(F.disc)
    delta = weierstrass_invariants(CLattice.from_field(F)).delta
    gt = (2 * math.pi) ** -12 * abs(delta)
    return 4 * math.pi ** 2 / D * (2 * EULER_GAMMA - 1 - math.log(D) - math.log(r) - math.log(gt) / 6)


def geta_comparison(F: ImagQuadField, u: HPoint, w_max: float | None = None) -> dict:
    """Residual of g(u) = -(|d_K|/(pi^2 w)) zeta(O,O,2) C log|eta(u)| + B(r) at h = 1.

    ``C log|eta|`` is taken as the series it is defined by: alpha Re log eta for the
    package's eta, and also the printed-sign variant.  The report separates the
    part depending on u through eta from the closed-form B(r).
    """
    D = abs(F.disc)
    g = egm_g(F, u, w_max)
    pref = D / (math.pi ** 2 * F.unit_count) * zeta_mn(F.d)
    main = -pref * eta_constant(F) * log_eta(F, u).log_eta.real
    main_printed = -pref * c_gamma(F) * log_eta_as_printed(F, u).real
    B = b_gamma(F, u.r)
    return {
        "g": g,
        "eta_term": main,
        "B": B,
        "B_constant": B + 4 * math.pi ** 2 / D * math.log(u.r),
        "B_log_r_coefficient": -4 * math.pi ** 2 / D,
        "g_minus_eta_term": g - main,
        "residual": g - main - B,
        "residual_printed_eta": g - main_printed - B,
    }


# -- zeta_K(2) from residues -------------------------------------------------------


def zeta2_check(F: ImagQuadField, tol: float = 1e-6) -> dict:
    """|d_K|^{-1/2} |Lambda'| against zeta_K(2) for three readings of |Lambda'|."""
    D = abs(F.disc)
    oracle = dedekind_zeta(F, 2.0)
    readings = {
        # the dual of O_K under Re(conj(w) z)
        "raw_dual": 1.0 / F.covolume,
        # lattice rescaled to unit area, so its dual also has unit area
        "unit_area": 1.0,
        # Lambda' = 2 |d_K|^{-1/2} conj(u)^2 with u = O_K
        "two_over_sqrt_d": (2 / math.sqrt(D)) ** 2 * F.covolume,
    }
    out = {"zeta_K(2)": oracle, "readings": {}}
    for name, cov in readings.items():
        val = cov / math.sqrt(D)
        out["readings"][name] = {"covolume": cov, "value": val, "residual": val - oracle, "holds": abs(val - oracle) < tol}
    # residue bookkeeping that does hold: Res E_hat = 2 zeta_K(2) Res E
    res_hat = 4 * math.pi ** 2 / D
    out["residue_identity"] = {
        "res_E_hat": res_hat,
        "2 zeta_K(2) alpha": 2 * oracle * eta_constant(F),
        "residual": res_hat - 2 * oracle * eta_constant(F),
    }
    out["required_covolume"] = math.sqrt(D) * oracle
    return out
