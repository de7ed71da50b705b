import math

import numpy as np
import pytest

from bianchi_klf import elliptic as ell
from bianchi_klf.hspace import GMatrix, HPoint, denominator, moebius
from bianchi_klf.lattice import CLattice
from bianchi_klf.numfield import ImagQuadField


@pytest.mark.parametrize("z", [0.3 + 0.1j, -0.45 + 0.2j, 0.1 + 0.8j])
def test_e1_routes_agree(field, z):
    L = CLattice.from_field(field)
    a = ell.eisenstein_kronecker_e1(z, L, "hecke")
    b = ell.eisenstein_kronecker_e1(z, L, "weierstrass")
    assert abs(a - b) < 1e-12


def test_e1_is_periodic_and_odd(gauss):
    L = CLattice.from_field(gauss)
    z = 0.27 + 0.11j
    e = ell.eisenstein_kronecker_e1(z, L)
    assert abs(ell.eisenstein_kronecker_e1(z + 1 + 1j, L) - e) < 1e-12
    assert abs(ell.eisenstein_kronecker_e1(-z, L) + e) < 1e-12


def test_e1_pole_rejected(gauss):
    with pytest.raises(ValueError):
        ell.eisenstein_kronecker_e1(1 + 1j, CLattice.from_field(gauss))


def test_invariants_routes(field):
    L = CLattice.from_field(field)
    a, b = ell.weierstrass_invariants(L), ell.weierstrass_invariants_series(L)
    for k in ("g2", "g3", "s2"):
        assert abs(getattr(a, k) - getattr(b, k)) < 1e-10


def test_square_and_hexagonal_invariants():
    assert abs(ell.weierstrass_invariants(CLattice.from_field(ImagQuadField.of(-1))).g3) < 1e-12
    assert abs(ell.weierstrass_invariants(CLattice.from_field(ImagQuadField.of(-3))).g2) < 1e-12


def test_dedekind_sum_vanishes_with_extra_units():
    for d in (-1, -3):
        F = ImagQuadField.of(d)
        assert abs(ell.elliptic_dedekind(F(1, 1), F(3)).value) < 1e-12


@pytest.mark.parametrize("d", [-2, -7])
def test_dedekind_sum_conjugation(d):
    F = ImagQuadField.of(d)
    c, e = F(1, 1), F(3, 1)
    D = ell.elliptic_dedekind(c, e).value
    Dbar = ell.elliptic_dedekind(c.conj(), e.conj()).value
    assert abs(D) > 1e-6
    assert abs(D + Dbar) < 1e-12
    assert abs(D.real) < 1e-12


def test_sigma_elements(field):
    w = field(3, 2)
    assert ell.sigma_elements(field, w, -1.0) == pytest.approx(ell.sigma_elements_bruteforce(field, w, -1.0), rel=1e-12)


def test_g_transformation(gauss):
    M = GMatrix(gauss(1, 1), gauss(1), gauss(1), gauss(1, -1))
    u = HPoint(0.3 + 0.4j, 0.9)
    lhs = ell.egm_g(gauss, moebius(M, u)) + math.log(denominator(M, u))
    assert lhs == pytest.approx(ell.egm_g(gauss, u), abs=1e-9)


def test_g_against_eta():
    res = ell.geta_comparison(ImagQuadField.of(-2), HPoint(0.1 + 0.2j, 0.8))
    assert abs(res["g_minus_eta_term"]) < 1e-9


def test_zeta2_bookkeeping(field):
    res = ell.zeta2_check(field)
    assert abs(res["residue_identity"]["residual"]) < 1e-12
    assert res["required_covolume"] == pytest.approx(math.sqrt(abs(field.disc)) * res["zeta_K(2)"])
