"""Exact arithmetic in the ring of integers of a Euclidean imaginary quadratic field.

Only the five norm-Euclidean fields Q(sqrt(d)), d in {-1, -2, -3, -7, -11}, are
supported.  Elements are stored as integer pairs (x, y) meaning x + y*omega,
where O_K = Z + Z*omega.  Nothing in this module touches floating point except
the ``__complex__`` conversion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

import numpy as np

SUPPORTED_D = (-1, -2, -3, -7, -11)


class UnsupportedFieldError(ValueError):
    pass


def _round_div(p: int, q: int) -> int:
    """Nearest integer to p/q (q > 0), ties rounded down."""
    return -((-2 * p + q) // (2 * q))


@dataclass(frozen=True)
class AlgInt:
    x: int
    y: int
    d: int

    @property
    def field(self) -> "ImagQuadField":
        return ImagQuadField.of(self.d)

    def _coerce(self, other) -> "AlgInt":
        if isinstance(other, AlgInt):
            if other.d != self.d:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, np.integer)):
            return AlgInt(int(other), 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return AlgInt(self.x + o.x, self.y + o.y, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return AlgInt(self.x - o.x, self.y - o.y, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return AlgInt(-self.x, -self.y, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        # omega^2 = tr*omega - n
        xx = self.x * o.x - F.omega_norm * self.y * o.y
        yy = self.x * o.y + self.y * o.x + F.omega_trace * self.y * o.y
        return AlgInt(xx, yy, self.d)

    __rmul__ = __mul__

    def conj(self) -> "AlgInt":
        # conj(omega) = tr - omega
        F = self.field
        return AlgInt(self.x + F.omega_trace * self.y, -self.y, self.d)

    def norm(self) -> int:
        F = self.field
        return self.x * self.x + F.omega_trace * self.x * self.y + F.omega_norm * self.y * self.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __complex__(self) -> complex:
        return self.x + self.y * self.field.omega

    def __divmod__(self, other):
        return self.field.divmod(self, self._coerce(other))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "AlgInt":
        q, rem = divmod(self, other)
        if not rem.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other) -> bool:
        """True if self | other."""
        other = self._coerce(other)
        if self.is_zero():
            return other.is_zero()
        return self.field.divmod(other, self)[1].is_zero()

    def __repr__(self) -> str:
        sym = "i" if self.d == -1 else "w"
        if self.y == 0:
            return f"{self.x}"
        if self.x == 0:
            return f"{self.y}{sym}"
        return f"{self.x}{self.y:+d}{sym}"


@dataclass(frozen=True)
class ImagQuadField:
    d: int

    def __post_init__(self):
        if self.d not in SUPPORTED_D:
            raise UnsupportedFieldError(
                f"d={self.d} is not one of the Euclidean fields {SUPPORTED_D}"
            )

    @staticmethod
    @lru_cache(maxsize=None)
    def of(d: int) -> "ImagQuadField":
        return ImagQuadField(d)

    @cached_property
    def disc(self) -> int:
        return self.d if self.d % 4 == 1 else 4 * self.d

    @property
    def omega_trace(self) -> int:
        return 1 if self.d % 4 == 1 else 0

    @property
    def omega_norm(self) -> int:
        return (1 - self.d) // 4 if self.d % 4 == 1 else -self.d

    @cached_property
    def omega(self) -> complex:
        root = 1j * math.sqrt(-self.d)
        return (1 + root) / 2 if self.d % 4 == 1 else root

    @property
    def unit_count(self) -> int:
        return {-1: 4, -3: 6}.get(self.d, 2)

    @property
    def cusp_index(self) -> int:
        """Index of the unipotent stabilizer of infinity in the full stabilizer."""
        return self.unit_count // 2

    @cached_property
    def covolume(self) -> float:
        """Euclidean area of C / O_K."""
        return math.sqrt(abs(self.disc)) / 2

    def __call__(self, x: int, y: int = 0) -> AlgInt:
        return AlgInt(int(x), int(y), self.d)

    @property
    def zero(self) -> AlgInt:
        return self(0)

    @property
    def one(self) -> AlgInt:
        return self(1)

    @property
    def w(self) -> AlgInt:
        return self(0, 1)

    @cached_property
    def units(self) -> tuple[AlgInt, ...]:
        out = []
        for x in range(-2, 3):
            for y in range(-2, 3):
                a = self(x, y)
                if a.norm() == 1:
                    out.append(a)
        out.sort(key=lambda a: (cmath_arg(complex(a)), a.x, a.y))
        assert len(out) == self.unit_count
        return tuple(out)

    @cached_property
    def units_mod_sign(self) -> tuple[AlgInt, ...]:
        return tuple(u for u in self.units if in_plus_half(complex(u)))

    # -- Euclidean division -------------------------------------------------

    def divmod(self, a: AlgInt, b: AlgInt) -> tuple[AlgInt, AlgInt]:
        """Quotient rounded to a nearest lattice point; N(remainder) < N(b)."""
        if b.is_zero():
            raise ZeroDivisionError("division by zero in O_K")
        n = b.norm()
        t = a * b.conj()  # a/b = t/n
        y = _round_div(t.y, n)
        # choose x minimising |Re(t/n - x - y*omega)|
        x = _round_div(2 * t.x + (t.y - y * n) * self.omega_trace, 2 * n)
        q = self(x, y)
        return q, a - q * b

    def extended_gcd(self, a: AlgInt, b: AlgInt) -> tuple[AlgInt, AlgInt, AlgInt]:
        """Return (g, x, y) with x*a + y*b = g and (g) = (a, b)."""
        if a.is_zero() and b.is_zero():
            raise ValueError("extended_gcd(0, 0) is undefined")
        r0, r1 = a, b
        x0, x1 = self.one, self.zero
        y0, y1 = self.zero, self.one
        while not r1.is_zero():
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            x0, x1 = x1, x0 - q * x1
            y0, y1 = y1, y0 - q * y1
        return r0, x0, y0

    def gcd(self, a: AlgInt, b: AlgInt) -> AlgInt:
        return self.extended_gcd(a, b)[0]

    def coprime(self, a: AlgInt, b: AlgInt) -> bool:
        if a.is_zero() and b.is_zero():
            return False
        return self.gcd(a, b).is_unit()

    def associate_rep(self, a: AlgInt) -> AlgInt:
        """Canonical representative of the unit orbit of a (0 maps to 0)."""
        if a.is_zero():
            return a
        return min((u * a for u in self.units), key=lambda v: _canon_key(complex(v)))

    def sign_rep(self, a: AlgInt) -> AlgInt:
        """Representative of {a, -a} lying in the half plane used throughout."""
        return a if in_plus_half(complex(a)) else -a

    # -- residue systems ----------------------------------------------------

    def residues_mod(self, c: AlgInt) -> list[AlgInt]:
        """Representatives of O_K / cO_K in the parallelogram {s c + t c w: s,t in [0,1)}."""
        if c.is_zero():
            raise ValueError("residues modulo 0")
        xs, ys = _residue_coords(self.d, c.x, c.y)
        return [self(int(x), int(y)) for x, y in zip(xs, ys)]

    def residues_mod_array(self, c: AlgInt) -> tuple[np.ndarray, np.ndarray]:
        if c.is_zero():
            raise ValueError("residues modulo 0")
        return _residue_coords(self.d, c.x, c.y)

    def coprime_residues_mod(self, c: AlgInt) -> list[AlgInt]:
        xs, ys = self.coprime_residues_array(c)
        return [self(int(x), int(y)) for x, y in zip(xs, ys)]

    def coprime_residues_array(self, c: AlgInt) -> tuple[np.ndarray, np.ndarray]:
        xs, ys = self.residues_mod_array(c)
        keep = np.ones(xs.shape, dtype=bool)
        for p, _ in self.factor(c):
            keep &= ~_divisible(self, xs, ys, p)
        return xs[keep], ys[keep]

    # -- factorisation ------------------------------------------------------

    def kronecker(self, p: int) -> int:
        """Splitting type of the rational prime p: 1 split, -1 inert, 0 ramified."""
        return kronecker_symbol(self.disc, p)

    @lru_cache(maxsize=4096)
    def primes_above(self, p: int) -> tuple[AlgInt, ...]:
        """Prime elements (up to units) lying over the rational prime p."""
        chi = self.kronecker(p)
        if chi == -1:
            return (self(p),)
        found = None
        bound = int(math.isqrt(4 * p)) + 2
        for y in range(0, bound + 1):
            for x in range(-bound, bound + 1):
                a = self(x, y)
                if a.norm() == p:
                    found = a
                    break
            if found is not None:
                break
        assert found is not None, p
        if chi == 0:
            return (self.associate_rep(found),)
        other = found.conj()
        return (self.associate_rep(found), self.associate_rep(other))

    def factor(self, a: AlgInt) -> list[tuple[AlgInt, int]]:
        """Prime factorisation of a (up to a unit) as [(prime, exponent), ...]."""
        if a.is_zero():
            raise ValueError("cannot factor 0")
        out = []
        rest = a
        for p in _rational_prime_factors(a.norm()):
            for pi in self.primes_above(p):
                e = 0
                while pi.divides(rest):
                    rest = rest.exact_div(pi)
                    e += 1
                if e:
                    out.append((pi, e))
        assert rest.is_unit(), (a, rest)
        return out

    def euler_phi(self, c: AlgInt) -> int:
        """|(O_K / cO_K)^x|."""
        n = c.norm()
        num, den = n, 1
        for pi, _ in self.factor(c):
            q = pi.norm()
            num *= q - 1
            den *= q
        return num // den

    def divisors(self, a: AlgInt) -> list[AlgInt]:
        """All divisors of a != 0 up to units, by enumeration of candidates."""
        if a.is_zero():
            raise ValueError("0 has infinitely many divisors")
        n = a.norm()
        out = []
        for g in self.elements_up_to_norm(n):
            if n % g.norm() == 0 and g.divides(a):
                if self.associate_rep(g) == g:
                    out.append(g)
        return out

    def elements_up_to_norm(self, n: int) -> Iterator[AlgInt]:
        """All nonzero elements with norm <= n."""
        xs, ys = lattice_points_in_disc(self.d, math.sqrt(n))
        for x, y in zip(xs, ys):
            a = self(int(x), int(y))
            if 0 < a.norm() <= n:
                yield a


# -- helpers ----------------------------------------------------------------


def cmath_arg(z: complex) -> float:
    a = math.atan2(z.imag, z.real)
    return a if a >= 0 else a + 2 * math.pi


def in_plus_half(z: complex, tol: float = 1e-12) -> bool:
    """Re z > 0, or Re z = 0 and Im z > 0."""
    if z.real > tol:
        return True
    return abs(z.real) <= tol and z.imag > tol


def _canon_key(z: complex) -> tuple:
    return (0 if in_plus_half(z) else 1, round(cmath_arg(z), 12), round(abs(z), 12))


def kronecker_symbol(D: int, n: int) -> int:
    """Kronecker symbol (D / n) for n > 0."""
    if n <= 0:
        raise ValueError("n must be positive")
    result = 1
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        result *= 1 if D % 8 in (1, 7) else -1
    # Jacobi symbol (D / n), n odd
    a = D % n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _rational_prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _divisible(F: ImagQuadField, xs: np.ndarray, ys: np.ndarray, p: AlgInt) -> np.ndarray:
    """Vectorised test p | (xs + ys*omega)."""
    n = p.norm()
    pc = p.conj()
    # (x + y w) * (u + v w) with u + v w = conj(p)
    tx = xs * pc.x - F.omega_norm * ys * pc.y
    ty = xs * pc.y + ys * pc.x + F.omega_trace * ys * pc.y
    return (tx % n == 0) & (ty % n == 0)


def lattice_points_in_disc(d: int, radius: float) -> tuple[np.ndarray, np.ndarray]:
    """Integer coordinates (x, y) of all points x + y*omega with |.| <= radius."""
    F = ImagQuadField.of(d)
    h = F.omega.imag
    ymax = int(math.floor(radius / h + 1e-9))
    ys = np.arange(-ymax, ymax + 1)
    xs_list, ys_list = [], []
    for y in ys:
        cx = -y * F.omega.real
        span = radius * radius - (y * h) ** 2
        if span < -1e-9 * max(1.0, radius * radius):
            continue
        w = math.sqrt(max(span, 0.0))
        lo, hi = math.ceil(cx - w - 1e-9), math.floor(cx + w + 1e-9)
        x = np.arange(lo, hi + 1)
        xs_list.append(x)
        ys_list.append(np.full(x.shape, y))
    xs = np.concatenate(xs_list) if xs_list else np.zeros(0, dtype=np.int64)
    ysr = np.concatenate(ys_list) if ys_list else np.zeros(0, dtype=np.int64)
    z = xs + ysr * F.omega
    keep = np.abs(z) <= radius * (1 + 1e-12)
    return xs[keep].astype(np.int64), ysr[keep].astype(np.int64)


@lru_cache(maxsize=8192)
def _residue_coords(d: int, cx: int, cy: int) -> tuple[np.ndarray, np.ndarray]:
    F = ImagQuadField.of(d)
    c = F(cx, cy)
    n = c.norm()
    # parallelogram corners 0, c, c*w, c + c*w
    corners = [0j, complex(c), complex(c * F.w), complex(c + c * F.w)]
    h = F.omega.imag
    ylo = math.floor(min(z.imag for z in corners) / h) - 1
    yhi = math.ceil(max(z.imag for z in corners) / h) + 1
    xlo = math.floor(min(z.real for z in corners) - abs(F.omega.real) * max(abs(ylo), abs(yhi))) - 1
    xhi = math.ceil(max(z.real for z in corners) + abs(F.omega.real) * max(abs(ylo), abs(yhi))) + 1
    X, Y = np.meshgrid(np.arange(xlo, xhi + 1, dtype=np.int64), np.arange(ylo, yhi + 1, dtype=np.int64))
    X, Y = X.ravel(), Y.ravel()
    cc = c.conj()
    # (X + Y w) * conj(c) = P + Q w; k / c = (P + Q w) / n
    P = X * cc.x - F.omega_norm * Y * cc.y
    Q = X * cc.y + Y * cc.x + F.omega_trace * Y * cc.y
    keep = (P >= 0) & (P < n) & (Q >= 0) & (Q < n)
    xs, ys = X[keep], Y[keep]
    order = np.lexsort((xs, ys))
    xs, ys = xs[order], ys[order]
    assert xs.size == n, (c, xs.size, n)
    xs.setflags(write=False)
    ys.setflags(write=False)
    return xs, ys
