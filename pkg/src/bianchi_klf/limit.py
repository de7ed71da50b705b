"""The first Kronecker limit formula for PSL(2, O_K) and the eta / D analogues built from it.

Conventions used throughout (all verified numerically in the test-suite):

* alpha = a pi / |Lambda| is the residue of E(u, s) at s = 1, a being the residue
  of phi_0.  It equals 2 pi^2 / (|d_K| zeta_K(2)).
* log eta is normalised so that
      alpha * log eta(u) = -(1/2 [Gamma_inf : Gamma'_inf] r^2 + sum_{w in Lambda'_+} a_w(r, 1) e(<w, z>)),
  which makes Re log eta(Mu) = Re log eta(u) + 1/2 log(|cz+d|^2 + |c|^2 r^2) hold exactly.
* The limit formula then reads
      lim_{s -> 1} (E(u, s) - alpha / (s - 1)) = (pi/|Lambda|)(b - a) - alpha log|r eta(u)^2|.

``c_gamma`` returns the constant |Lambda'| / vol(Gamma) + pi / |Lambda| as it is
usually stated; ``klf_rhs_as_printed`` evaluates the formula with that constant
and the opposite sign convention for eta, for comparison.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field

import numpy as np

from . import eisenstein as eis
from .hspace import GMatrix, HPoint, convergence_order, denominator, laplace_beltrami, moebius
from .lattice import plus_half_mask
from .numfield import ImagQuadField
from .specfun import bessel_k, fsum, fsum_complex, vol_gamma

MIN_TAIL_PRODUCT = 40.0
D_SD_FAULT = 1e-4


@dataclass(frozen=True)
class EtaValue:
    u: HPoint
    log_eta: complex
    R: float
    tail_bound: float


@dataclass(frozen=True)
class DGammaValue:
    M: GMatrix
    value: float
    samples: tuple
    sd: float
    differences: tuple = ()

    @property
    def healthy(self) -> bool:
        return self.sd <= D_SD_FAULT


@dataclass(frozen=True)
class KLFValue:
    u: HPoint
    value: float
    route: str
    diagnostics: dict = field(default_factory=dict)


# -- constants ----------------------------------------------------------------


def c_gamma(F: ImagQuadField) -> float:
    """|Lambda'| / vol(Gamma) + pi / |Lambda| for the cusp at infinity."""
    area = F.covolume
    return (1.0 / area) / vol_gamma(F) + math.pi / area


def residue_by_volume(F: ImagQuadField) -> float:
    """|Lambda'| / vol(Gamma)."""
    return (1.0 / F.covolume) / vol_gamma(F)


def eta_constant(F: ImagQuadField) -> float:
    """Normalising constant of log eta: the residue alpha = a pi / |Lambda|."""
    return eis.laurent_phi0(F).alpha


# -- eta ----------------------------------------------------------------------


def default_radius(r: float) -> float:
    return eis.TAIL_RADIUS_PRODUCT / (2 * math.pi * r)


def _half_series(F: ImagQuadField, u: HPoint, R: float) -> complex:
    """sum over Lambda'_+ with |w| <= R of a_w(r, 1) e(<w, z>)."""
    w, coeff = eis.nonzero_coefficients(F, u.r, 1.0, R)
    keep = plus_half_mask(w)
    w, coeff = w[keep], coeff[keep]
    phase = np.exp(2j * np.pi * (np.conj(w) * u.z).real)
    return fsum_complex(coeff * phase)


def log_eta(F: ImagQuadField, u: HPoint, R: float | None = None) -> EtaValue:
    if R is None:
        R = default_radius(u.r)
    if 2 * math.pi * R * u.r < MIN_TAIL_PRODUCT:
        raise ValueError(f"truncation radius {R} too small for r = {u.r}: need 2 pi R r >= {MIN_TAIL_PRODUCT}")
    const = 0.5 * F.cusp_index * u.r ** 2
    series = _half_series(F, u, R)
    value = -(const + series) / eta_constant(F)
    tail = eis._bessel_tail_bound(F, u.r, 1.0, R) / eta_constant(F)
    return EtaValue(u, complex(value), R, tail)


def log_eta_as_printed(F: ImagQuadField, u: HPoint, R: float | None = None) -> complex:
    """log eta with the constant c_gamma and the series entering with a plus sign."""
    if R is None:
        R = default_radius(u.r)
    return (0.5 * F.cusp_index * u.r ** 2 + _half_series(F, u, R)) / c_gamma(F)


# -- both sides of the limit formula -------------------------------------------


def klf_rhs(F: ImagQuadField, u: HPoint, R: float | None = None) -> float:
    """(pi/|Lambda|)(b - a) - alpha log|r eta(u)^2|."""
    L = eis.laurent_phi0(F)
    le = log_eta(F, u, R).log_eta
    return math.pi / F.covolume * (L.b - L.a) - L.alpha * (math.log(u.r) + 2 * le.real)


def klf_rhs_as_printed(F: ImagQuadField, u: HPoint, R: float | None = None) -> float:
    """(pi/|Lambda|) b - C log|r eta(u)^2| with C = c_gamma and the printed eta."""
    L = eis.laurent_phi0(F)
    le = log_eta_as_printed(F, u, R)
    return math.pi / F.covolume * L.b - c_gamma(F) * (math.log(u.r) + 2 * le.real)


def _eisenstein_near_one(F: ImagQuadField, u: HPoint, s: float, route: str) -> float:
    if route == "fourier":
        return eis.eisenstein_fourier(F, u, s).value
    if route == "ewald":
        return eis.eisenstein_direct(F, u, s, method="ewald").value
    raise ValueError(f"unknown route {route!r}")


def klf_lhs(F: ImagQuadField, u: HPoint, eps_schedule=eis.EPS_SCHEDULE, route: str = "fourier") -> KLFValue:
    """Richardson limit of E(u, 1 + eps) - alpha / eps.

    ``fourier`` evaluates E through its expansion; ``ewald`` through the theta-split
    pair sum, which shares no formula with the right-hand side.
    """
    eps = tuple(float(e) for e in eps_schedule)
    if any(b >= a for a, b in zip(eps, eps[1:])):
        raise ValueError("eps schedule must be strictly decreasing")
    alpha = eta_constant(F)
    g = [_eisenstein_near_one(F, u, 1 + e, route) - alpha / e for e in eps]
    value, err = eis.richardson(g, ratio=eps[0] / eps[1])
    g_half = g[1:] + [_eisenstein_near_one(F, u, 1 + eps[-1] / 2, route) - 2 * alpha / eps[-1]]
    value_half, _ = eis.richardson(g_half, ratio=eps[0] / eps[1])
    if abs(value - value_half) > 1e-2:
        raise RuntimeError(f"unstable eps extrapolation: {value} vs {value_half}")
    return KLFValue(u, value, route, {"richardson": err, "halving_change": abs(value - value_half)})


@dataclass(frozen=True)
class ResidueExperiment:
    d: int
    numeric: float
    by_volume: float
    by_laurent: float
    numeric_error: float


def residue_experiment(F: ImagQuadField, u: HPoint | None = None) -> ResidueExperiment:
    """eps E(u, 1 + eps) extrapolated to eps = 0 (theta-split route) against both closed forms."""
    if u is None:
        u = HPoint(0.3 + 0.4j, 0.9)
    eps = (4e-3, 2e-3, 1e-3, 5e-4)
    g = [e * _eisenstein_near_one(F, u, 1 + e, "ewald") for e in eps]
    val, err = eis.richardson(g)
    return ResidueExperiment(F.d, val, residue_by_volume(F), eta_constant(F), err)


# -- D --------------------------------------------------------------------------


def default_samples(F: ImagQuadField) -> list[HPoint]:
    return [
        HPoint(0.3 + 0.4j, 0.9),
        HPoint(0.0j, 1.0),
        HPoint(-0.2 + 0.15j, 0.6),
        HPoint(0.45 - 0.1j, 1.4),
        HPoint(0.1 + 0.3j, 0.75),
    ]


def d_gamma(F: ImagQuadField, M: GMatrix, u_samples=None) -> DGammaValue:
    """(1/pi) Im(log eta(Mu) - log eta(u)), median over the samples, with the sample sd."""
    samples = tuple(default_samples(F) if u_samples is None else u_samples)
    if len(samples) < 3:
        raise ValueError("at least three sample points are required")
    diffs = []
    for u in samples:
        v = moebius(M, u)
        diffs.append((log_eta(F, v).log_eta.imag - log_eta(F, u).log_eta.imag) / math.pi)
    sd = statistics.pstdev(diffs)
    return DGammaValue(M, float(statistics.median(diffs)), samples, float(sd), tuple(diffs))


def real_part_transformation(F: ImagQuadField, M: GMatrix, u: HPoint) -> float:
    """Re log eta(Mu) - Re log eta(u) - 1/2 log(|cz+d|^2 + |c|^2 r^2)."""
    v = moebius(M, u)
    return log_eta(F, v).log_eta.real - log_eta(F, u).log_eta.real - 0.5 * math.log(denominator(M, u))


def check_conjugacy(F: ImagQuadField, M: GMatrix, P: GMatrix, u_samples=None, tol: float = 1e-6) -> dict:
    N = P @ M @ P.inverse()
    dm = d_gamma(F, M, u_samples)
    dn = d_gamma(F, N, u_samples)
    res = abs(dm.value - dn.value)
    return {"D(M)": dm.value, "D(PMP^-1)": dn.value, "residual": res, "tol": tol, "pass": res < tol}


# -- harmonicity ------------------------------------------------------------------

H_SCHEDULE = (4e-3, 2e-3, 1e-3)


def harmonicity_check(
    F: ImagQuadField,
    u: HPoint,
    h_schedule=H_SCHEDULE,
    func=None,
    tol: float = 1e-4,
    parts=("re", "im"),
) -> dict:
    """Finite-difference Laplace-Beltrami of Re and Im log eta (or of ``func``) for steps h * r.

    The truncation radius is frozen for the whole stencil, so every evaluation
    uses the same finite sum.
    """
    hs = [h * u.r for h in h_schedule]
    if u.r - max(hs) <= 0:
        raise ValueError("stencil leaves the half-space")
    if func is None:
        R = default_radius(u.r - max(hs))

        def func(v):
            return log_eta(F, v, R).log_eta

    getters = {"re": lambda v: complex(func(v)).real, "im": lambda v: complex(func(v)).imag}
    out = {}
    for name in parts:
        f = getters[name]
        lap = [abs(laplace_beltrami(f, u, h)) for h in hs]
        orders = convergence_order(lap, hs[0] / hs[1])
        out[name] = {
            "laplacian": lap,
            "orders": orders,
            "pass": lap[-1] < tol and all(1.7 <= o <= 2.3 for o in orders),
        }
    return out


# -- a Bessel identity occasionally quoted for the coefficients ----------------


def k0_experiment(xs=(0.5, 1.0, 2.0)) -> list[dict]:
    """Compare K_1(x) with x K_0(x)."""
    out = []
    for x in xs:
        k1 = bessel_k(1.0, x)
        xk0 = x * bessel_k(0.0, x)
        out.append({"x": x, "K1": k1, "x*K0": xk0, "difference": k1 - xk0})
    return out
