import math

import pytest

from bianchi_klf import limit as lim
from bianchi_klf.hspace import GMatrix, HPoint, moebius
from bianchi_klf.numfield import ImagQuadField

U = HPoint(0.3 + 0.4j, 0.9)


def test_real_part_transformation(gauss):
    M = GMatrix(gauss(1, 1), gauss(1), gauss(1), gauss(1, -1))
    assert abs(lim.real_part_transformation(gauss, M, U)) < 1e-9


def test_eta_periodic(gauss):
    a = lim.log_eta(gauss, U).log_eta
    b = lim.log_eta(gauss, U.translate(1 + 1j)).log_eta
    assert abs(a - b) < 1e-12


def test_eta_truncation_guard(gauss):
    with pytest.raises(ValueError):
        lim.log_eta(gauss, U, R=1.0)


@pytest.mark.parametrize("d", [-1, -3])
def test_limit_formula(d):
    F = ImagQuadField.of(d)
    lhs = lim.klf_lhs(F, U).value
    assert abs(lhs - lim.klf_rhs(F, U)) < 1e-6


def test_limit_formula_by_theta_route(gauss):
    u = HPoint(0j, 1.0)
    assert abs(lim.klf_lhs(gauss, u, route="ewald").value - lim.klf_rhs(gauss, u)) < 1e-6


def test_eps_schedule_validated(gauss):
    with pytest.raises(ValueError):
        lim.klf_lhs(gauss, U, eps_schedule=(1e-3, 2e-3, 1e-4))


def test_residue_experiment_gaussian(gauss):
    r = lim.residue_experiment(gauss)
    assert r.numeric == pytest.approx(r.by_laurent, rel=1e-5)
    assert r.by_volume == pytest.approx(r.by_laurent, rel=1e-12)


def test_residue_by_volume_differs_for_hexagonal():
    F = ImagQuadField.of(-3)
    assert lim.residue_by_volume(F) / lim.eta_constant(F) == pytest.approx(4 / 3, rel=1e-10)


def test_d_gamma_translation_is_zero(gauss):
    T = GMatrix(gauss(1), gauss(1, 1), gauss(0), gauss(1))
    val = lim.d_gamma(gauss, T)
    assert abs(val.value) < 1e-10 and val.healthy


def test_harmonicity(gauss):
    res = lim.harmonicity_check(gauss, U)
    assert res["re"]["pass"] and res["im"]["pass"]


def test_k0_identity_is_not_an_identity():
    rows = lim.k0_experiment()
    assert all(abs(r["difference"]) > 0.05 for r in rows)
