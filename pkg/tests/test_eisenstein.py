import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bianchi_klf import eisenstein as eis
from bianchi_klf.hspace import GMatrix, HPoint, moebius
from bianchi_klf.numfield import SUPPORTED_D, ImagQuadField
from bianchi_klf.specfun import dedekind_zeta

U = HPoint(0.3 + 0.4j, 0.9)


def test_dual_generator_spans_dual_lattice(field):
    L = eis.ring_lattice(field)
    g = eis.dual_generator(field)
    assert L.dual().same_lattice(type(L)(g, g * field.omega))


def test_dual_to_ring_roundtrip(field):
    for x, y in [(1, 0), (2, -3), (0, 5)]:
        n = field(x, y)
        w = eis.dual_generator(field) * complex(n)
        assert eis.dual_to_ring(field, w) == n


@given(st.sampled_from(SUPPORTED_D), st.integers(-15, 15), st.integers(-15, 15), st.sampled_from([-1.0, -2.0, -0.5]))
@settings(max_examples=80, deadline=None)
def test_divisor_sigma_sieve_matches_bruteforce(d, x, y, s):
    F = ImagQuadField.of(d)
    n = F(x, y)
    if n.is_zero():
        return
    fast = eis.divisor_sigma_many(F, np.array([x]), np.array([y]), s)[0]
    assert fast == pytest.approx(eis.divisor_sigma_bruteforce(F, n, s), rel=1e-12)
    assert eis.divisor_sigma(F, n, s) == pytest.approx(fast, rel=1e-12)


def test_normalisation_audit_gaussian():
    audit = eis.normalization_audit(ImagQuadField.of(-1))
    assert audit.residual < 1e-6
    assert float(audit.constant) == ImagQuadField.of(-1).cusp_index


def test_phi_closed_form_against_bruteforce():
    F = ImagQuadField.of(-1)
    omegas = [0j, eis.dual_generator(F) * complex(F(1, 1)), eis.dual_generator(F) * 3]
    brute = eis.phi_bruteforce(F, omegas, 2.0, c_max=30)
    closed = [eis.phi(F, w, 2.0) for w in omegas]
    assert np.max(np.abs(brute - np.array(closed))) < 1e-6


def test_phi0_pole_rejected(gauss):
    with pytest.raises(ValueError):
        eis.phi(gauss, 0j, 1.0)


def test_fourier_coefficient_quadrature(gauss):
    w = eis.dual_generator(gauss) * complex(gauss(1, 2))
    for r, s in [(0.9, 1.5), (0.5, 2.0)]:
        q = eis.fourier_coefficient_quadrature(gauss, w, r, s, 32)
        assert abs(q - eis.fourier_coefficient(gauss, w, r, s)) < 1e-9


@pytest.mark.parametrize("d", [-1, -2, -7])
@pytest.mark.parametrize("s", [1.5, 2.0])
def test_direct_route_matches_fourier(d, s):
    F = ImagQuadField.of(d)
    a = eis.eisenstein_direct(F, U, s).value
    b = eis.eisenstein_fourier(F, U, s).value
    assert abs(a - b) < 1e-9


def test_brute_coset_sum_with_tail(gauss):
    v = eis.eisenstein_direct(gauss, HPoint(0j, 1.0), 2.0, c_max=10, method="brute")
    ref = eis.eisenstein_direct(gauss, HPoint(0j, 1.0), 2.0).value
    assert abs(v.value - ref) < 1e-4


def test_brute_coset_sum_refuses_near_pole(gauss):
    with pytest.raises(eis.ToleranceUnreachable):
        eis.eisenstein_direct(gauss, U, 1.1, method="brute")


def test_eisenstein_is_invariant(gauss):
    M = GMatrix(gauss(1, 1), gauss(1), gauss(1), gauss(1, -1))
    v = moebius(M, U)
    assert eis.eisenstein_fourier(gauss, v, 1.5).value == pytest.approx(eis.eisenstein_fourier(gauss, U, 1.5).value, rel=1e-9)


def test_hat_normalisation(gauss):
    s = 2.0
    hat = eis.eisenstein_hat(gauss, U, s).value
    assert hat == pytest.approx(2 * dedekind_zeta(gauss, 1 + s) * eis.eisenstein_fourier(gauss, U, s).value, rel=1e-10)


def test_richardson_polynomial():
    g = [3.0 + 2 * e - 5 * e ** 2 for e in (0.1, 0.05, 0.025)]
    val, err = eis.richardson(g)
    assert val == pytest.approx(3.0, abs=1e-13)


def test_laurent_b_against_mpmath(gauss):
    L = eis.laurent_phi0(gauss)
    m = eis.phi_constant(gauss)
    with mpmath.workdps(40):
        zk = lambda s: mpmath.zeta(s) * mpmath.dirichlet(s, [0, 1, 0, -1])
        a_ref = m * mpmath.pi / 4 / zk(2)
        f = lambda s: m * zk(s) / zk(s + 1) - a_ref / (s - 1)
        b_ref = float(f(1 + mpmath.mpf("1e-15")))
    assert L.a == pytest.approx(float(a_ref), rel=1e-14)
    assert L.b == pytest.approx(b_ref, abs=1e-6)


def test_laurent_constant_term(gauss):
    L = eis.laurent_a0(gauss, 0.9)
    assert L.errors["beta_residual"] < 1e-6
    assert abs(eis.beta_as_printed(gauss, 0.9) - L.beta) > 0.1


def test_residue_closed_form(field):
    alpha = eis.residue_at_one(field)
    assert alpha == pytest.approx(2 * math.pi ** 2 / (abs(field.disc) * dedekind_zeta(field, 2.0)), rel=1e-12)
