"""Coset representatives for Gamma = PSL(2, O_K) relative to the unipotent stabilizer of infinity.

Conventions, audited against exhaustive matrix enumeration (see tests):

* Gamma'_inf \\ Gamma  <->  coprime bottom rows (c, d) modulo (c, d) ~ (-c, -d).
* Gamma'_inf \\ Gamma / Gamma'_inf, c != 0  <->  pairs (+-c, d mod cO_K) with d a unit mod c.
* Rows (c, d) and (eps c, eps d) for a unit eps != +-1 are *different* cosets, so
  every ideal (c) contributes UNIT_MULTIPLICITY = |O_K^x| / 2 values of c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hspace import GMatrix
from .numfield import AlgInt, ImagQuadField, in_plus_half, lattice_points_in_disc


def unit_multiplicity(F: ImagQuadField) -> int:
    """Number of Gamma'_inf double cosets per ideal (c) and residue class; equals [Gamma_inf : Gamma'_inf]."""
    return F.cusp_index


@dataclass(frozen=True)
class BottomRow:
    c: AlgInt
    d: AlgInt
    witness: GMatrix


@dataclass(frozen=True)
class DoubleCosetRep:
    c: AlgInt
    d: AlgInt
    witness: GMatrix


OMEGA_INFINITY = "Omega_inf"


def witness_matrix(F: ImagQuadField, c: AlgInt, d: AlgInt) -> GMatrix:
    """A matrix in SL(2, O_K) with bottom row (c, d); requires (c, d) = (1)."""
    g, x, y = F.extended_gcd(c, d)
    if not g.is_unit():
        raise ValueError(f"bottom row ({c}, {d}) is not coprime")
    ginv = g.conj()  # g^{-1} for a unit
    a = y * ginv
    b = -(x * ginv)
    M = GMatrix(a, b, c, d)
    return M


def canonical_c_values(F: ImagQuadField, c_max: float) -> list[AlgInt]:
    """Nonzero c with |c| <= c_max, one from each pair {c, -c}, ordered by (|c|, arg c)."""
    xs, ys = lattice_points_in_disc(F.d, c_max)
    out = []
    for x, y in zip(xs, ys):
        if x == 0 and y == 0:
            continue
        c = F(int(x), int(y))
        if in_plus_half(complex(c)):
            out.append(c)
    out.sort(key=lambda c: (c.norm(), round(math.atan2(complex(c).imag, complex(c).real), 12)))
    return out


def normalize_row(F: ImagQuadField, c: AlgInt, d: AlgInt) -> tuple[AlgInt, AlgInt]:
    """Representative of {(c, d), (-c, -d)} with c (or d if c = 0) in the right half plane."""
    lead = c if not c.is_zero() else d
    if in_plus_half(complex(lead)):
        return c, d
    return -c, -d


def reduce_mod(F: ImagQuadField, d: AlgInt, c: AlgInt) -> AlgInt:
    """The representative of d + cO_K in the parallelogram {s c + t c w : s, t in [0, 1)}."""
    n = c.norm()
    t = d * c.conj()  # d / c = (P + Q w) / n
    P, Q = t.x % n, t.y % n
    k = (t.x - P) // n, (t.y - Q) // n
    return d - c * F(k[0], k[1])


def coset_reps_infinity(F: ImagQuadField, c_max: float, d_max: float | None = None) -> list[BottomRow]:
    """Representatives of Gamma'_inf \\ Gamma with |c| <= c_max and |d| <= d_max.

    The c = 0 stratum contributes the cusp_index diagonal matrices diag(eps^-1, eps).
    Without d_max, each c contributes its reduced residues d mod c only
    (one row per double coset).
    """
    if c_max < 0:
        raise ValueError("c_max must be non-negative")
    out = [
        BottomRow(F.zero, u, GMatrix(u.conj(), F.zero, F.zero, u)) for u in F.units_mod_sign
    ]
    for c in canonical_c_values(F, c_max):
        if d_max is None:
            ds = F.coprime_residues_mod(c)
        else:
            xs, ys = lattice_points_in_disc(F.d, d_max)
            ds = [F(int(x), int(y)) for x, y in zip(xs, ys)]
            ds = [d for d in ds if F.coprime(c, d)]
        for d in ds:
            out.append(BottomRow(c, d, witness_matrix(F, c, d)))
    return out


def double_coset_reps(F: ImagQuadField, c_max: float) -> list:
    """[OMEGA_INFINITY] followed by one DoubleCosetRep per (+-c, d mod c) with |c| <= c_max."""
    out: list = [OMEGA_INFINITY]
    for c in canonical_c_values(F, c_max):
        for d in F.coprime_residues_mod(c):
            out.append(DoubleCosetRep(c, d, witness_matrix(F, c, d)))
    return out


def double_coset_key(F: ImagQuadField, M: GMatrix):
    """Label of the Gamma'_inf double coset containing M (entries AlgInt)."""
    c, d = normalize_row(F, M.c, M.d)
    if c.is_zero():
        return OMEGA_INFINITY
    return (c.x, c.y, *(lambda r: (r.x, r.y))(reduce_mod(F, d, c)))


def same_double_coset(F: ImagQuadField, M: GMatrix, rep: DoubleCosetRep) -> bool:
    """Exact test: M in Gamma'_inf rep Gamma'_inf (as PSL classes)."""
    for sgn in (1, -1):
        c, d = M.c * sgn, M.d * sgn
        if c == rep.c and rep.c.divides(d - rep.d):
            return True
    return False


def enumerate_group(F: ImagQuadField, max_norm: int) -> list[GMatrix]:
    """All elements of PSL(2, O_K) whose four entries have norm <= max_norm (one per +-pair)."""
    xs, ys = lattice_points_in_disc(F.d, math.sqrt(max_norm))
    ent = [(int(x), int(y)) for x, y in zip(xs, ys)]
    E = np.array(ent, dtype=np.int64)
    m = len(ent)
    tr, nm = F.omega_trace, F.omega_norm

    def mul(ax, ay, bx, by):
        return ax * bx - nm * ay * by, ax * by + ay * bx + tr * ay * by

    # ad - bc = 1 : for each (a, d) pair compute ad, then match bc = ad - 1
    ax, bx_ = np.meshgrid(E[:, 0], E[:, 0], indexing="ij")
    ay, by_ = np.meshgrid(E[:, 1], E[:, 1], indexing="ij")
    px, py = mul(ax, ay, bx_, by_)  # product of entry i and entry j
    from collections import defaultdict

    by_prod: dict = defaultdict(list)
    for i in range(m):
        for j in range(m):
            by_prod[(int(px[i, j]), int(py[i, j]))].append((i, j))
    out = {}
    for (vx, vy), pairs in by_prod.items():
        target = (vx - 1, vy)
        for (ia, idd) in pairs:
            for (ib, ic) in by_prod.get(target, ()):
                M = GMatrix(F(*ent[ia]), F(*ent[ib]), F(*ent[ic]), F(*ent[idd]))
                out.setdefault(M.key(), M)
    return list(out.values())
