"""Explicit finite fields F_q = F_p[x]/(f) with full discrete-log tables.

Elements are indexed 0..q-1.  Index k corresponds to the polynomial whose
coefficient vector is the base-p digit expansion of k (least significant digit
= constant term), so index 0 is the zero element and index 1 is the identity.
A fixed generator g of the multiplicative group is chosen at construction
time and every nonzero element gets a discrete log, which makes character
evaluation and Jacobi sums pure table lookups.

The tables are dense, so construction is capped (default 2^16 elements).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import product

from .primes import divisors, is_prime_trial, prime_power_split, trial_factor

DEFAULT_FIELD_CAP = 1 << 16


@dataclass(frozen=True)
class PrimePower:
    """A certified prime power q = p^n."""

    p: int
    n: int
    q: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"exponent must be positive, got {self.n}")
        if not is_prime_trial(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.q != self.p**self.n:
            raise ValueError(f"q={self.q} is not {self.p}^{self.n}")


def prime_power(p: int, n: int) -> PrimePower:
    return PrimePower(p, n, p**n)


def prime_power_from_order(q: int) -> PrimePower:
    """PrimePower for a given order q, rejecting non prime powers (and q=1)."""
    split = prime_power_split(q)
    if split is None:
        raise ValueError(f"{q} is not a prime power >= 2")
    return prime_power(*split)


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over Z/p (coefficient lists, constant term first)

def _ptrim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _ptrim(out)


def _pdivmod(f, g, p):
    # g must be nonzero; leading coefficient inverted mod p
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p) if g[-1] != 1 else 1
    quo = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        shift = len(f) - 1 - dg
        c = f[-1] * inv_lead % p
        quo[shift] = c
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        _ptrim(f)
    return quo, f


def _pgcd(f, g, p):
    while g:
        _, f = _pdivmod(f, g, p)
        f, g = g, f
    return f


def _psub(f, g, p):
    out = [0] * max(len(f), len(g))
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return _ptrim(out)


def _ppowmod(f, e, mod, p):
    result = [1]
    base = _pdivmod(f, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _is_irreducible(f: list[int], p: int) -> bool:
    # Rabin's test: x^(p^n) == x mod f, and gcd(x^(p^(n/r)) - x, f) = 1
    # for every prime r dividing n.
    n = len(f) - 1
    x = [0, 1]
    xq = _ppowmod(x, p**n, f, p)
    if _psub(xq, x, p):
        return False
    for r in trial_factor(n):
        h = _ppowmod(x, p ** (n // r), f, p)
        g = _pgcd(list(f), _psub(h, x, p), p)
        if len(g) != 1:
            return False
    return True


def find_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n over Z/p.

    Coefficient tuples (x^0, ..., x^(n-1)) are compared lexicographically;
    for n = 1 the convention is the polynomial x itself.
    """
    if not is_prime_trial(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("degree must be positive")
    if n == 1:
        return (0, 1)
    for tail in product(range(p), repeat=n):
        f = list(tail) + [1]
        if f[0] != 0 and _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteField:
    """Fully tabulated F_q with a fixed multiplicative generator.

    elems[k] is the digit vector of index k; gen is the index of the chosen
    generator; exp[t] is the index of gen^t and dlog inverts exp (dlog[0] is
    the sentinel -1 since 0 has no discrete log).
    """

    pp: PrimePower
    modulus: tuple[int, ...]
    elems: tuple[tuple[int, ...], ...]
    gen: int
    exp: tuple[int, ...]
    dlog: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.pp.q

    @property
    def p(self) -> int:
        return self.pp.p

    def digits(self, x: int) -> tuple[int, ...]:
        return self.elems[x]

    def index(self, digits) -> int:
        p = self.pp.p
        k = 0
        for d in reversed(digits):
            k = k * p + d
        return k

    def add(self, x: int, y: int) -> int:
        if self.pp.n == 1:
            return (x + y) % self.pp.p
        p = self.pp.p
        return self.index([(a + b) % p for a, b in zip(self.elems[x], self.elems[y])])

    def neg(self, x: int) -> int:
        if self.pp.n == 1:
            return (-x) % self.pp.p
        p = self.pp.p
        return self.index([(-a) % p for a in self.elems[x]])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.dlog[x] + self.dlog[y]) % (self.q - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.exp[-self.dlog[x] % (self.q - 1)]

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e <= 0:
                raise ZeroDivisionError("0^e undefined for e <= 0")
            return 0
        return self.exp[e * self.dlog[x] % (self.q - 1)]

    def order(self, x: int) -> int:
        """Multiplicative order of a nonzero element."""
        if x == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        import math

        return (self.q - 1) // math.gcd(self.dlog[x], self.q - 1)

    def generators(self) -> list[int]:
        """All generator indices, ascending."""
        return sorted(x for x in range(1, self.q) if self.order(x) == self.q - 1)

    def with_generator(self, new_gen: int) -> "FiniteField":
        """Same field, same element enumeration, different chosen generator."""
        if self.order(new_gen) != self.q - 1:
            raise ValueError(f"element {new_gen} does not generate the group")
        exp = [1] * (self.q - 1)
        dlog = [-1] * self.q
        dlog[1] = 0
        acc = 1
        for t in range(1, self.q - 1):
            acc = self.mul(acc, new_gen)
            exp[t] = acc
            dlog[acc] = t
        return FiniteField(self.pp, self.modulus, self.elems,
                           new_gen, tuple(exp), tuple(dlog))

    def to_json(self) -> dict:
        """Diagnostic dump (p, n, modulus, generator, discrete logs)."""
        return {
            "p": self.pp.p,
            "n": self.pp.n,
            "q": self.pp.q,
            "modulus": list(self.modulus),
            "gen": self.gen,
            "dlog": list(self.dlog),
        }


def _raw_mul(field_p, modulus, a_digits, b_digits):
    prod = _pmul(list(a_digits), list(b_digits), field_p)
    return _pdivmod(prod, list(modulus), field_p)[1]


def build_field(pp: PrimePower, cap: int = DEFAULT_FIELD_CAP) -> FiniteField:
    """Construct F_q with dense tables.

    The generator is the full-order element with the smallest enumeration
    index; element enumeration is base-p counting order (so a_0 = 0, a_1 = 1).
    """
    p, n, q = pp.p, pp.n, pp.q
    if q > cap:
        raise ValueError(f"field order {q} exceeds table cap {cap}")
    modulus = find_irreducible(p, n)
    elems = tuple(tuple(_digits(k, p, n)) for k in range(q))

    def raw_mul_idx(x: int, y: int) -> int:
        out = _raw_mul(p, modulus, elems[x], elems[y])
        k = 0
        for d in reversed(out + [0] * (n - len(out))):
            k = k * p + d
        return k

    def elem_pow(x: int, e: int) -> int:
        acc, base = 1, x
        while e:
            if e & 1:
                acc = raw_mul_idx(acc, base)
            base = raw_mul_idx(base, base)
            e >>= 1
        return acc

    group_order = q - 1
    cofactors = [group_order // r for r in trial_factor(group_order)] if group_order > 1 else []
    gen = 1
    for x in range(1, q):
        if all(elem_pow(x, c) != 1 for c in cofactors):
            gen = x
            break
    else:
        raise AssertionError("no generator found")  # unreachable for q >= 2

    exp = [1] * max(group_order, 1)
    dlog = [-1] * q
    dlog[1] = 0
    acc = 1
    for t in range(1, group_order):
        acc = raw_mul_idx(acc, gen)
        exp[t] = acc
        dlog[acc] = t
    return FiniteField(pp, modulus, elems, gen, tuple(exp), tuple(dlog))


def _digits(k: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        k, r = divmod(k, p)
        out.append(r)
    return out


@functools.lru_cache(maxsize=None)
def field_for_order(q: int) -> FiniteField:
    """Cached field lookup by order (fields are immutable and shareable)."""
    return build_field(prime_power_from_order(q))


def field_arith(field: FiniteField, op: str, x: int, y: int | None = None) -> int:
    """Single-entry arithmetic dispatcher over element indices."""
    if not 0 <= x < field.q or (y is not None and not 0 <= y < field.q):
        raise ValueError("element index out of range")
    if op == "add":
        return field.add(x, y)
    if op == "mul":
        return field.mul(x, y)
    if op == "neg":
        return field.neg(x)
    if op == "inv":
        return field.inv(x)
    raise ValueError(f"unknown field op {op!r}")


def divisors_and_factorization(k: int) -> tuple[list[int], dict[int, int]]:
    """Sorted divisors and the prime factorization of k >= 1, by trial division."""
    if k < 1:
        raise ValueError("k must be positive")
    return divisors(k), trial_factor(k)
