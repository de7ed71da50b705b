"""Upper half-space H^3: points z + r j, the SL(2, C) action and a hyperbolic Laplacian."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .numfield import AlgInt


@dataclass(frozen=True)
class HPoint:
    z: complex
    r: float

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError(f"HPoint needs r > 0, got {self.r}")
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "r", float(self.r))

    @classmethod
    def from_xyr(cls, x: float, y: float, r: float) -> "HPoint":
        return cls(complex(x, y), r)

    @property
    def x(self) -> float:
        return self.z.real

    @property
    def y(self) -> float:
        return self.z.imag

    def translate(self, w: complex) -> "HPoint":
        return HPoint(self.z + w, self.r)

    def __iter__(self):
        return iter((self.z.real, self.z.imag, self.r))


@dataclass(frozen=True)
class GMatrix:
    """Element of SL(2, C) acting on H^3; entries may be complex or AlgInt."""

    a: complex | AlgInt
    b: complex | AlgInt
    c: complex | AlgInt
    d: complex | AlgInt

    def __post_init__(self):
        det = self.det()
        if isinstance(det, AlgInt):
            if det != 1 * _one_like(det):
                raise ValueError(f"determinant {det} != 1")
        elif abs(det - 1) > 1e-12:
            raise ValueError(f"determinant {det} differs from 1")

    @classmethod
    def identity(cls, F=None) -> "GMatrix":
        if F is None:
            return cls(1, 0, 0, 1)
        return cls(F.one, F.zero, F.zero, F.one)

    @property
    def exact(self) -> bool:
        return isinstance(self.a, AlgInt)

    def det(self):
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "GMatrix") -> "GMatrix":
        return GMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "GMatrix":
        return GMatrix(self.d, -self.b, -self.c, self.a)

    def complex_entries(self) -> tuple[complex, complex, complex, complex]:
        return complex(self.a), complex(self.b), complex(self.c), complex(self.d)

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))

    def key(self):
        """Hashable PSL class: the entry tuple up to an overall sign."""
        t = (self.a, self.b, self.c, self.d)
        n = tuple(-e for e in t)
        return min(t, n, key=repr)


def _one_like(x: AlgInt) -> AlgInt:
    return AlgInt(1, 0, x.d)


def denominator(M: GMatrix, u: HPoint) -> float:
    """|cz + d|^2 + |c|^2 r^2."""
    _, _, c, d = M.complex_entries()
    den = abs(c * u.z + d) ** 2 + abs(c) ** 2 * u.r ** 2
    if not den > 0:
        raise ZeroDivisionError("vanishing automorphy denominator; singular matrix?")
    return den


def moebius(M: GMatrix, u: HPoint) -> HPoint:
    a, b, c, d = M.complex_entries()
    cz_d = c * u.z + d
    den = abs(cz_d) ** 2 + abs(c) ** 2 * u.r ** 2
    if not den > 0:
        raise ZeroDivisionError("vanishing automorphy denominator; singular matrix?")
    zm = ((a * u.z + b) * cz_d.conjugate() + a * c.conjugate() * u.r ** 2) / den
    return HPoint(zm, u.r / den)


def laplace_beltrami(
    f: Callable[[HPoint], complex | float],
    u: HPoint,
    h: float | None = None,
):
    """Central-difference r^2 (f_xx + f_yy + f_rr) - r f_r on the 7-point stencil.

    Default step is 1e-3 * r.
    """
    if h is None:
        h = 1e-3 * u.r
    if u.r - h <= 0:
        raise ValueError("stencil leaves the half-space (r - h <= 0)")
    f0 = f(u)
    fxp = f(HPoint(u.z + h, u.r))
    fxm = f(HPoint(u.z - h, u.r))
    fyp = f(HPoint(u.z + 1j * h, u.r))
    fym = f(HPoint(u.z - 1j * h, u.r))
    frp = f(HPoint(u.z, u.r + h))
    frm = f(HPoint(u.z, u.r - h))
    lap = (fxp + fxm + fyp + fym + frp + frm - 6 * f0) / h ** 2
    dr = (frp - frm) / (2 * h)
    return u.r ** 2 * lap - u.r * dr


def convergence_order(errors: Sequence[float], ratio: float = 2.0) -> list[float]:
    """Observed orders log_ratio(e_k / e_{k+1}) for a step sequence shrinking by `ratio`."""
    out = []
    for e0, e1 in zip(errors, errors[1:]):
        if e0 == 0 or e1 == 0:
            out.append(float("nan"))
            continue
        out.append(math.log(abs(e0) / abs(e1)) / math.log(ratio))
    return out
