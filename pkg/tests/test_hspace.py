import math

import numpy as np
import pytest

from bianchi_klf.hspace import GMatrix, HPoint, convergence_order, denominator, laplace_beltrami, moebius
from bianchi_klf.numfield import ImagQuadField


def test_point_validation():
    with pytest.raises(ValueError):
        HPoint(0j, 0.0)
    assert tuple(HPoint.from_xyr(1, 2, 3)) == (1.0, 2.0, 3.0)


def test_determinant_checked(gauss):
    with pytest.raises(ValueError):
        GMatrix(gauss(1), gauss(1), gauss(1), gauss(2, 1))


def test_action_is_a_group_action(gauss):
    M1 = GMatrix(gauss(1), gauss(1), gauss(0), gauss(1))
    M2 = GMatrix(gauss(0), gauss(-1), gauss(1), gauss(0))
    M3 = GMatrix(gauss(1, 1), gauss(1), gauss(1), gauss(1, -1))
    u = HPoint(0.3 + 0.2j, 0.7)
    for A, B in ((M1, M2), (M2, M3), (M3, M1)):
        lhs = moebius(A @ B, u)
        rhs = moebius(A, moebius(B, u))
        assert abs(lhs.z - rhs.z) < 1e-12 and abs(lhs.r - rhs.r) < 1e-12
    v = moebius(M3.inverse(), moebius(M3, u))
    assert abs(v.z - u.z) < 1e-12 and abs(v.r - u.r) < 1e-12


def test_height_transformation(gauss):
    M = GMatrix(gauss(1, 1), gauss(1), gauss(1), gauss(1, -1))
    u = HPoint(-0.2 + 0.5j, 1.3)
    assert moebius(M, u).r == pytest.approx(u.r / denominator(M, u), rel=1e-14)


def test_hyperbolic_distance_preserved(gauss):
    def cosh_dist(u, v):
        return 1 + (abs(u.z - v.z) ** 2 + (u.r - v.r) ** 2) / (2 * u.r * v.r)

    M = GMatrix(gauss(1, 1), gauss(1), gauss(1), gauss(1, -1))
    u, v = HPoint(0.1 + 0.1j, 0.5), HPoint(-0.4 + 0.3j, 2.0)
    assert cosh_dist(moebius(M, u), moebius(M, v)) == pytest.approx(cosh_dist(u, v), rel=1e-12)


@pytest.mark.parametrize("s", [0.5, 1.5, 2.0])
def test_laplacian_eigenfunction(s):
    u = HPoint(0.2 + 0.1j, 0.8)
    lap = laplace_beltrami(lambda v: v.r ** (1 + s), u, 1e-4)
    assert lap == pytest.approx((s * s - 1) * u.r ** (1 + s), rel=1e-6)


def test_convergence_order():
    assert convergence_order([4e-4, 1e-4, 2.5e-5]) == pytest.approx([2.0, 2.0])
    assert math.isnan(convergence_order([1e-3, 0.0])[0])
