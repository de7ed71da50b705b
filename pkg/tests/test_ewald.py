import math

import numpy as np
import pytest

from bianchi_klf import ewald, specfun as sf
from bianchi_klf.lattice import CLattice
from bianchi_klf.numfield import ImagQuadField


@pytest.mark.parametrize("s", [1.5, 2.0, 3.5, 0.5, -0.5])
def test_square_lattice_epstein(s):
    # sum (m^2 + n^2)^-s = 4 zeta(s) beta(s), continued
    import mpmath

    ref = 4 * mpmath.zeta(s) * mpmath.dirichlet(s, [0, 1, 0, -1])
    assert ewald.epstein_zeta(np.eye(2), s) == pytest.approx(float(ref), rel=1e-11, abs=1e-12)


def test_epstein_direct_sum_4d():
    A = np.diag([1.0, 2.0, 1.5, 3.0])
    n = 12
    ax = np.arange(-n, n + 1)
    g = np.stack(np.meshgrid(ax, ax, ax, ax, indexing="ij"), -1).reshape(-1, 4)
    q = np.einsum("ij,jk,ik->i", g, A, g)
    Q = 1.0 * n ** 2
    q = q[(q > 0) & (q <= Q)]
    # continuum tail: vol{q <= t} = pi^2 t^2 / (2 sqrt det A)
    tail = math.pi ** 2 / (2 * math.sqrt(np.linalg.det(A)) * Q ** 2)
    direct = sf.fsum(q ** -4.0) + tail
    assert ewald.epstein_zeta(A, 4.0) == pytest.approx(direct, rel=1e-7)


def test_epstein_residue_matches_pole():
    A = np.array([[2.0, 0.5], [0.5, 1.0]])
    eps = 1e-6
    assert eps * ewald.epstein_zeta(A, 1 + eps) == pytest.approx(ewald.epstein_residue(A), rel=1e-5)


def test_hecke_sum_g2_is_zero_for_hexagonal():
    L = CLattice.from_field(ImagQuadField.of(-3))
    assert abs(ewald.hecke_sum(L, 0j, 4, 4.0)) < 1e-12


def test_hecke_sum_direct():
    L = CLattice(1.0, 0.3 + 1.1j)
    z = 0.2 + 0.1j
    pts, _, _ = L.points(200.0, include_zero=True)
    w = z + pts
    direct = sf.fsum_complex(np.conj(w) ** 2 * np.abs(w) ** -8.0)
    assert abs(ewald.hecke_sum(L, z, 2, 4.0) - direct) < 1e-9
