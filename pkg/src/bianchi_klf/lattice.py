"""Complex lattices, their duals under Re(conj(w) z), shell enumeration and residue systems."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .numfield import ImagQuadField, in_plus_half, cmath_arg


def pairing(w, z):
    """Euclidean scalar product <w, z> = Re(conj(w) z); broadcasts over arrays."""
    return (np.conj(w) * z).real


@dataclass(frozen=True)
class CLattice:
    w1: complex
    w2: complex

    def __post_init__(self):
        w1, w2 = complex(self.w1), complex(self.w2)
        if abs((w1.conjugate() * w2).imag) < 1e-14 * max(abs(w1), abs(w2)) ** 2:
            raise ValueError("lattice basis is degenerate")
        if (w2 / w1).imag < 0:
            w1, w2 = w2, w1
        object.__setattr__(self, "w1", w1)
        object.__setattr__(self, "w2", w2)

    @classmethod
    def from_field(cls, F: ImagQuadField) -> "CLattice":
        return cls(1.0, F.omega)

    @property
    def area(self) -> float:
        return abs((self.w1.conjugate() * self.w2).imag)

    @cached_property
    def _basis(self) -> np.ndarray:
        return np.array([[self.w1.real, self.w2.real], [self.w1.imag, self.w2.imag]])

    def coords(self, z) -> np.ndarray:
        """Real coordinates (s, t) with z = s w1 + t w2."""
        z = np.asarray(z, dtype=complex)
        st = np.linalg.solve(self._basis, np.stack([z.real.ravel(), z.imag.ravel()]))
        return st.reshape((2,) + z.shape)

    def contains(self, z, tol: float = 1e-9) -> bool:
        st = self.coords(z)
        return bool(np.all(np.abs(st - np.round(st)) < tol))

    def reduce(self, z):
        """Translate z into the half-open fundamental parallelogram."""
        st = self.coords(z)
        st = st - np.floor(st + 1e-13)
        return st[0] * self.w1 + st[1] * self.w2

    def points(self, R: float, include_zero: bool = False) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Lattice points with |lambda| <= R as (values, m, n), lambda = m w1 + n w2, shell-ordered."""
        G = np.array(
            [[abs(self.w1) ** 2, pairing(self.w1, self.w2)], [pairing(self.w1, self.w2), abs(self.w2) ** 2]]
        )
        Ginv = np.linalg.inv(G)
        mmax = int(math.floor(R * math.sqrt(Ginv[0, 0]) + 1e-9))
        nmax = int(math.floor(R * math.sqrt(Ginv[1, 1]) + 1e-9))
        m, n = np.meshgrid(np.arange(-mmax, mmax + 1), np.arange(-nmax, nmax + 1), indexing="ij")
        m, n = m.ravel(), n.ravel()
        z = m * self.w1 + n * self.w2
        keep = np.abs(z) <= R * (1 + 1e-12)
        if not include_zero:
            keep &= (m != 0) | (n != 0)
        z, m, n = z[keep], m[keep], n[keep]
        order = np.lexsort((_arg_array(z), np.round(np.abs(z), 10)))
        return z[order], m[order], n[order]

    def dual(self) -> "DualLattice":
        # <v_i, w_j> = delta_ij: rows of B^{-T}
        Binv_T = np.linalg.inv(self._basis).T
        v1 = complex(Binv_T[0, 0], Binv_T[1, 0])
        v2 = complex(Binv_T[0, 1], Binv_T[1, 1])
        return DualLattice(v1, v2)

    def same_lattice(self, other: "CLattice", tol: float = 1e-9) -> bool:
        return (
            abs(self.area - other.area) < tol * max(1.0, self.area)
            and self.contains(other.w1, tol)
            and self.contains(other.w2, tol)
        )


class DualLattice(CLattice):
    """The lattice of w with <w, lambda> in Z for all lambda."""


def _arg_array(z: np.ndarray) -> np.ndarray:
    a = np.angle(z)
    a = np.where(a < 0, a + 2 * np.pi, a)
    return np.round(a, 12)


def shells(L: CLattice, R: float) -> np.ndarray:
    """Nonzero lattice points with |lambda| <= R ordered by (|lambda|, arg lambda)."""
    if R <= 0:
        raise ValueError("R must be positive")
    return L.points(R)[0]


def plus_half_mask(z: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    z = np.asarray(z)
    return (z.real > tol) | ((np.abs(z.real) <= tol) & (z.imag > tol))


def plus_half(L: CLattice, R: float) -> np.ndarray:
    """Points of shells(L, R) with Re > 0, or Re = 0 and Im > 0."""
    pts = shells(L, R)
    return pts[plus_half_mask(pts)]


def residues_mod_lattice(d: complex, L: CLattice) -> np.ndarray:
    """Coset representatives of L / dL, for d with dL a sublattice of L."""
    d = complex(d)
    if d == 0:
        raise ValueError("residues modulo 0")
    sub = CLattice(d * L.w1, d * L.w2)
    index = sub.area / L.area
    n = int(round(index))
    if abs(index - n) > 1e-8 or not (L.contains(sub.w1) and L.contains(sub.w2)):
        raise ValueError("d L is not a sublattice of L")
    corners = [0, sub.w1, sub.w2, sub.w1 + sub.w2]
    R = max(abs(c) for c in corners) + abs(L.w1) + abs(L.w2)
    pts, _, _ = L.points(R, include_zero=True)
    st = sub.coords(pts)
    eps = 1e-9
    keep = (st[0] >= -eps) & (st[0] < 1 - eps) & (st[1] >= -eps) & (st[1] < 1 - eps)
    reps = pts[keep]
    if reps.size != n:
        raise RuntimeError(f"residue enumeration found {reps.size} cosets, expected {n}")
    order = np.lexsort((_arg_array(reps), np.round(np.abs(reps), 10)))
    return reps[order]


__all__ = [
    "CLattice",
    "DualLattice",
    "pairing",
    "shells",
    "plus_half",
    "plus_half_mask",
    "residues_mod_lattice",
    "in_plus_half",
    "cmath_arg",
]
