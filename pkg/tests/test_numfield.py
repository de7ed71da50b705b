import math

import pytest
from hypothesis import given, settings, strategies as st

from bianchi_klf.numfield import SUPPORTED_D, ImagQuadField, UnsupportedFieldError, lattice_points_in_disc

small = st.integers(-40, 40)
fields = st.sampled_from(SUPPORTED_D)


def test_rejects_unsupported_fields():
    for d in (-5, -19, -163, 2):
        with pytest.raises((UnsupportedFieldError, ValueError)):
            ImagQuadField(d)


def test_discriminants_and_covolume(field):
    expected = {-1: -4, -2: -8, -3: -3, -7: -7, -11: -11}
    assert field.disc == expected[field.d]
    assert field.covolume == pytest.approx(math.sqrt(abs(field.disc)) / 2)
    assert abs((complex(field.w) - field.omega)) < 1e-15


def test_unit_groups(field):
    assert len(field.units) == field.unit_count
    assert all(u.norm() == 1 for u in field.units)


@given(fields, small, small, small, small)
@settings(max_examples=200, deadline=None)
def test_euclidean_division(d, ax, ay, bx, by):
    F = ImagQuadField.of(d)
    a, b = F(ax, ay), F(bx, by)
    if b.is_zero():
        return
    q, r = F.divmod(a, b)
    assert q * b + r == a
    assert r.norm() < b.norm()


@given(fields, small, small, small, small)
@settings(max_examples=200, deadline=None)
def test_extended_gcd_bezout(d, ax, ay, bx, by):
    F = ImagQuadField.of(d)
    a, b = F(ax, ay), F(bx, by)
    if a.is_zero() and b.is_zero():
        return
    g, x, y = F.extended_gcd(a, b)
    assert x * a + y * b == g
    assert g.divides(a) and g.divides(b)


@given(fields, small, small)
@settings(max_examples=60, deadline=None)
def test_factorization_reconstructs(d, x, y):
    F = ImagQuadField.of(d)
    a = F(x, y)
    if a.is_zero() or a.norm() > 2000:
        return
    prod = F.one
    for p, e in F.factor(a):
        for _ in range(e):
            prod = prod * p
    assert (a.exact_div(prod)).is_unit()


def test_residue_systems_sizes(field):
    for c in (field(2, 1), field(3), field(1, 2)):
        res = field.residues_mod(c)
        assert len(res) == c.norm()
        assert len(field.coprime_residues_mod(c)) == field.euler_phi(c)
        keys = {(r % c).x for r in res}
        assert len(keys) >= 1


def test_gaussian_gcd_example(gauss):
    g = gauss.gcd(gauss(3, 4), gauss(1, 3))
    assert g.norm() in (1, 2, 5)
    assert g.divides(gauss(3, 4)) and g.divides(gauss(1, 3))


def test_lattice_points_in_disc_counts():
    xs, ys = lattice_points_in_disc(-1, 10.0)
    assert len(xs) == sum(1 for x in range(-10, 11) for y in range(-10, 11) if x * x + y * y <= 100)


@pytest.mark.parametrize("d", SUPPORTED_D)
def test_lattice_points_in_disc_boundary_rows(d):
    # norms landing exactly on the radius (e.g. 13w for d = -2) must be kept
    F = ImagQuadField.of(d)
    for n in range(1, 200):
        xs, ys = lattice_points_in_disc(d, math.sqrt(n))
        brute = sum(
            1 for x in range(-40, 41) for y in range(-40, 41)
            if x * x + F.omega_trace * x * y + F.omega_norm * y * y <= n
        )
        assert len(xs) == brute


def test_divisors_include_the_element(field):
    a = field(0, 3)
    assert max(g.norm() for g in field.divisors(a)) == a.norm()
