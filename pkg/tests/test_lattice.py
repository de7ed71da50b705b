import numpy as np
import pytest

from bianchi_klf.lattice import CLattice, pairing, plus_half, residues_mod_lattice, shells


def test_dual_pairs_integrally(field):
    L = CLattice.from_field(field)
    D = L.dual()
    for v in (D.w1, D.w2):
        for w in (L.w1, L.w2):
            p = pairing(v, w)
            assert abs(p - round(p)) < 1e-12
    assert D.area == pytest.approx(1 / L.area)


def test_gaussian_lattice_self_dual(gauss):
    L = CLattice.from_field(gauss)
    assert L.same_lattice(L.dual())
    assert L.area == pytest.approx(1.0)


def test_shells_ordered(field):
    pts = shells(CLattice.from_field(field), 5.0)
    mags = np.abs(pts)
    assert np.all(np.diff(mags) >= -1e-12)
    assert np.all(mags <= 5.0 + 1e-12) and np.all(mags > 0)


def test_plus_half_halves(field):
    L = CLattice.from_field(field)
    half = plus_half(L, 6.0)
    full = shells(L, 6.0)
    assert 2 * len(half) == len(full)
    keys = {(round(z.real, 9), round(z.imag, 9)) for z in half}
    assert not any((round(-z.real, 9), round(-z.imag, 9)) in keys for z in half)


def test_residues_mod_lattice(field):
    L = CLattice.from_field(field)
    d = complex(field(2, 1))
    res = residues_mod_lattice(d, L)
    assert len(res) == round(abs(d) ** 2)
    sub = CLattice(d * L.w1, d * L.w2)
    reduced = {tuple(np.round(sub.coords(sub.reduce(z)), 8).tolist()) for z in res}
    assert len(reduced) == len(res)


def test_degenerate_basis_rejected():
    with pytest.raises(ValueError):
        CLattice(1.0, 2.0)
