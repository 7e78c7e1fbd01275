"""Exact arithmetic in Z[zeta_m], the ring of integers of the m-th cyclotomic field.

Elements are integer coefficient vectors in the power basis 1, zeta, ...,
zeta^(phi(m)-1), kept reduced modulo the m-th cyclotomic polynomial.  In this
presentation the ring is an integral domain with canonical equality, which is
what fraction-free elimination needs.  Exact division goes through the
conjugate product: a/b = a * prod_{r != 1} sigma_r(b) / N(b), so every
division comes with a built-in divisibility certificate.
"""

from __future__ import annotations

import cmath
import functools
import math
import sys
from dataclasses import dataclass

from .finite_field import FiniteField
from .primes import totient, trial_factor

_EPS = sys.float_info.epsilon


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division over Z[zeta_m] does not come out even."""


# ---------------------------------------------------------------------------
# integer polynomials (dense, constant term first)

def _int_ptrim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _int_pmul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _int_ptrim(out)


def _int_pdiv_exact(f, g):
    # exact division of integer polynomials; g monic or with divisible leads
    f = list(f)
    quo = [0] * (len(f) - len(g) + 1)
    while len(f) >= len(g) and f:
        c, rem = divmod(f[-1], g[-1])
        if rem:
            raise ArithmeticError("inexact polynomial division")
        shift = len(f) - len(g)
        quo[shift] = c
        for i, b in enumerate(g):
            f[shift + i] -= c * b
        _int_ptrim(f)
    if f:
        raise ArithmeticError("inexact polynomial division")
    return quo


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, by exact division.

    Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, recursively.
    """
    if m < 1:
        raise ValueError("m must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _int_pdiv_exact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


# ---------------------------------------------------------------------------

class CycRing:
    """The ring Z[zeta_m] with precomputed reduction and power tables."""

    __slots__ = ("m", "phi", "cyclo", "_red", "_zeta", "units",
                 "zero", "one")

    def __init__(self, m: int):
        self.m = m
        self.phi = totient(m)
        self.cyclo = cyclotomic_poly(m)
        phi = self.phi
        # _red[i] = coefficient row of x^(phi+i) mod Phi_m; enough rows for
        # both product reduction (degree 2*phi-2) and zeta powers (degree m-1).
        top = max(2 * phi - 2, m - 1)
        rows: list[tuple[int, ...]] = []
        if top >= phi:
            base = tuple(-c for c in self.cyclo[:phi])
            rows.append(base)
            for _ in range(phi + 1, top + 1):
                prev = rows[-1]
                lead = prev[phi - 1] if phi else 0
                nxt = [0] * phi
                for j in range(phi - 1):
                    nxt[j + 1] = prev[j]
                if lead:
                    for j in range(phi):
                        nxt[j] += lead * base[j]
                rows.append(tuple(nxt))
        self._red = tuple(rows)
        zeta = []
        for t in range(m):
            vec = [0] * (t + 1)
            vec[t] = 1
            zeta.append(tuple(self._reduce(vec)))
        self._zeta = tuple(zeta)
        self.units = tuple(r for r in range(1, m + 1) if math.gcd(r, m) == 1)
        self.zero = CycInt(self, (0,) * phi)
        self.one = CycInt(self, (1,) + (0,) * (phi - 1))

    def _reduce(self, vec: list[int]) -> list[int]:
        phi = self.phi
        for i in range(len(vec) - 1, phi - 1, -1):
            c = vec[i]
            if c:
                row = self._red[i - phi]
                for j, r in enumerate(row):
                    if r:
                        vec[j] += c * r
        out = vec[:phi]
        out.extend([0] * (phi - len(out)))
        return out

    def element(self, coeffs) -> "CycInt":
        """Canonical element from an int or any-length coefficient sequence."""
        if isinstance(coeffs, int):
            vec = [coeffs] + [0] * (self.phi - 1) if self.phi > 1 else [coeffs]
            return CycInt(self, tuple(self._reduce(vec)))
        return CycInt(self, tuple(self._reduce(list(coeffs))))

    def zeta(self, t: int) -> "CycInt":
        return CycInt(self, self._zeta[t % self.m])

    def combine(self, counts) -> "CycInt":
        """Sum of counts[t] * zeta^t over t, reduced to canonical form."""
        out = [0] * self.phi
        for t, c in enumerate(counts):
            if c:
                for j, r in enumerate(self._zeta[t % self.m]):
                    if r:
                        out[j] += c * r
        return CycInt(self, tuple(out))

    def __repr__(self):
        return f"CycRing(m={self.m})"


@functools.lru_cache(maxsize=None)
def get_ring(m: int) -> CycRing:
    return CycRing(m)


class CycInt:
    """Immutable element of Z[zeta_m] in canonical power-basis form."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CycRing, coeffs: tuple[int, ...]):
        self.ring = ring
        self.coeffs = coeffs

    def _join(self, other) -> "CycInt":
        if isinstance(other, int):
            return self.ring.element(other)
        if self.ring.m != other.ring.m:
            raise ValueError(f"ring mismatch: m={self.ring.m} vs m={other.ring.m}")
        return other

    def __add__(self, other):
        other = self._join(other)
        return CycInt(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._join(other)
        return CycInt(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self._join(other) - self

    def __neg__(self):
        return CycInt(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.ring, tuple(a * other for a in self.coeffs))
        if self.ring.m != other.ring.m:
            raise ValueError(f"ring mismatch: m={self.ring.m} vs m={other.ring.m}")
        ring = self.ring
        f, g = self.coeffs, other.coeffs
        out = [0] * (2 * ring.phi - 1) if ring.phi > 1 else [0]
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    if b:
                        out[i + j] += a * b
        return CycInt(ring, tuple(ring._reduce(out)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not ring elements")
        acc, base = self.ring.one, self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            return self.as_int() == other
        return isinstance(other, CycInt) and self.ring.m == other.ring.m \
            and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring.m, self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def as_int(self) -> int | None:
        """The value as a rational integer, or None if it is not one."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def coeff_abs_sum(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    def galois(self, r: int) -> "CycInt":
        return galois_apply(r, self)

    def conj(self) -> "CycInt":
        """Complex conjugation, i.e. the Galois map zeta -> zeta^(-1)."""
        return galois_apply(-1 % self.ring.m if self.ring.m > 1 else 1, self)

    def norm(self) -> int:
        return norm(self)

    def to_complex(self) -> tuple[complex, float]:
        return to_complex(self)

    def to_json(self) -> dict:
        return {"m": self.ring.m, "coeffs": [str(c) for c in self.coeffs]}

    def __repr__(self):
        return f"CycInt(m={self.ring.m}, coeffs={self.coeffs})"


def cyc_arith(op: str, a: CycInt, b: CycInt | None = None) -> CycInt:
    """Named-op dispatcher mirroring the arithmetic operators."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown ring op {op!r}")


def zeta_pow(ring: CycRing, t: int) -> CycInt:
    """Canonical form of zeta^(t mod m)."""
    return ring.zeta(t)


def galois_apply(r: int, a: CycInt) -> CycInt:
    """The automorphism zeta -> zeta^r; requires gcd(r, m) = 1."""
    ring = a.ring
    if math.gcd(r, ring.m) != 1:
        raise ValueError(f"gcd({r}, {ring.m}) != 1: not a Galois automorphism")
    out = [0] * ring.phi
    for t, c in enumerate(a.coeffs):
        if c:
            for j, z in enumerate(ring._zeta[(r * t) % ring.m]):
                if z:
                    out[j] += c * z
    return CycInt(ring, tuple(out))


def norm(a: CycInt) -> int:
    """Field norm: the product of all Galois conjugates, as an integer."""
    acc = a.ring.one
    for r in a.ring.units:
        acc = acc * galois_apply(r, a)
    value = acc.as_int()
    if value is None:
        raise AssertionError("conjugate product failed to reduce to an integer")
    return value


def divisor_prep(b: CycInt) -> tuple[CycInt, int]:
    """Prepare b for repeated exact division: (prod_{r != 1} sigma_r(b), N(b)).

    Factoring this out lets fraction-free elimination divide a whole matrix
    slab by one pivot without recomputing the conjugate product per entry.
    """
    if b.is_zero():
        raise ZeroDivisionError("exact division by zero in Z[zeta_m]")
    comp = b.ring.one
    for r in b.ring.units:
        if r != 1:
            comp = comp * galois_apply(r, b)
    nrm = (b * comp).as_int()
    if nrm is None or nrm == 0:
        raise AssertionError("norm computation failed to reduce to a nonzero integer")
    return comp, nrm


def exact_div_prepared(a: CycInt, comp: CycInt, nrm: int) -> CycInt:
    scaled = a * comp
    out = []
    for c in scaled.coeffs:
        quo, rem = divmod(c, nrm)
        if rem:
            raise NotDivisibleError("element is not divisible in Z[zeta_m]")
        out.append(quo)
    return CycInt(a.ring, tuple(out))


def exact_div(a: CycInt, b: CycInt) -> CycInt:
    """The unique c with a = b*c, or NotDivisibleError if none exists."""
    if a.ring.m != b.ring.m:
        raise ValueError("ring mismatch in exact_div")
    comp, nrm = divisor_prep(b)
    return exact_div_prepared(a, comp, nrm)


def to_complex(a: CycInt) -> tuple[complex, float]:
    """Float embedding at zeta = exp(2*pi*i/m), with a rigorous error radius.

    The radius bounds conversion of the integer coefficients to floats, the
    few-ulp error in the computed root of unity, and the Horner recurrence at
    a unit-modulus point: all are proportional to sum(|coeffs|) * epsilon,
    with the degree-dependent constant 8*deg + 4 absorbing the three terms.
    """
    ring = a.ring
    s = sum(abs(c) for c in a.coeffs)
    if s == 0:
        return 0j, 0.0
    try:
        sf = float(s)
        z = cmath.exp(2j * cmath.pi / ring.m)
        v = 0j
        for c in reversed(a.coeffs):
            v = v * z + c
    except OverflowError:
        return 0j, math.inf
    radius = sf * _EPS * (8 * max(len(a.coeffs) - 1, 1) + 4)
    if math.isinf(radius):
        return 0j, math.inf
    return v, radius


def as_rational_integer(a: CycInt) -> int | None:
    return a.as_int()


def reduce_mod_prime(a: CycInt, ell: int, t: int) -> int:
    """Evaluation homomorphism Z[zeta_m] -> Z/ell at zeta = t.

    Requires t to have multiplicative order exactly m modulo ell (which
    forces ell = 1 mod m), so the substitution respects Phi_m.
    """
    m = a.ring.m
    if pow(t % ell, m, ell) != 1:
        raise ValueError(f"{t} does not have order {m} mod {ell}")
    for r in trial_factor(m):
        if pow(t % ell, m // r, ell) == 1:
            raise ValueError(f"order of {t} mod {ell} properly divides {m}")
    acc = 0
    for c in reversed(a.coeffs):
        acc = (acc * t + c) % ell
    return acc


def reduce_to_field(a: CycInt, field: FiniteField) -> int:
    """Evaluation homomorphism Z[zeta_{q-1}] -> F_q at zeta = g.

    Under this map the character with chi(g) = zeta becomes the Teichmuller
    character of the corresponding prime over p, so congruences stated
    modulo that prime become element equalities in F_q.
    """
    if a.ring.m != field.q - 1:
        raise ValueError(f"element lives in Z[zeta_{a.ring.m}], field needs m={field.q - 1}")
    p = field.p
    acc = 0
    for c in reversed(a.coeffs):
        acc = field.add(field.mul(acc, field.gen), c % p)
    return acc


@dataclass(frozen=True)
class ScaledCyc:
    """A cyclotomic integer divided by a positive rational integer.

    Normalized so gcd(den, content(num)) = 1, with den = 1 when num = 0.
    """

    num: CycInt
    den: int

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": str(self.den)}

    def is_rational(self) -> bool:
        return self.num.as_int() is not None

    def __repr__(self):
        return f"ScaledCyc({self.num!r} / {self.den})"


def scaled(num: CycInt, den: int) -> ScaledCyc:
    """Build a normalized ScaledCyc from a numerator and nonzero denominator."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        num, den = -num, -den
    content = 0
    for c in num.coeffs:
        content = math.gcd(content, c)
    if content == 0:
        return ScaledCyc(num.ring.zero, 1)
    g = math.gcd(content, den)
    if g > 1:
        num = CycInt(num.ring, tuple(c // g for c in num.coeffs))
        den //= g
    return ScaledCyc(num, den)
