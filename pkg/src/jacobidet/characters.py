"""Multiplicative characters of F_q and exact Jacobi sums.

The character group is cyclic of order q-1; we pin the generator chi by
chi(g) = zeta_{q-1} for the field's chosen generator g, so chi^i evaluated
at x is just zeta^(i * dlog(x)).  Every character vanishes at 0 (including
the trivial one).  Jacobi sums are computed by direct summation over the
field with table lookups, which keeps them independent of the identities
they are later used to test.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycInt, CycRing, ScaledCyc, get_ring, scaled
from .finite_field import FiniteField


@dataclass(frozen=True)
class Character:
    """The character chi^i of F_q, where chi(g) = zeta_{q-1}."""

    field: FiniteField
    i: int

    def __post_init__(self):
        object.__setattr__(self, "i", self.i % (self.field.q - 1) if self.field.q > 2 else 0)

    @property
    def ring(self) -> CycRing:
        return get_ring(self.field.q - 1)

    def is_trivial(self) -> bool:
        return self.i == 0

    def __call__(self, x: int) -> CycInt:
        return char_eval(self, x)


def character(field: FiniteField, i: int) -> Character:
    return Character(field, i)


def char_eval(c: Character, x: int) -> CycInt:
    """chi^i(x): zero at x = 0, else zeta^(i * dlog(x))."""
    if x == 0:
        return c.ring.zero
    return c.ring.zeta(c.i * c.field.dlog[x])


def jacobi_sum(field: FiniteField, i: int, j: int) -> CycInt:
    """J_q(chi^i, chi^j) = sum over x in F_q of chi^i(x) chi^j(1-x), exactly.

    The x = 0 and x = 1 terms vanish by the psi(0) = 0 convention, so the sum
    runs over the remaining q-2 elements.  Exponents are tallied first and
    folded through the zeta table in one pass.
    """
    q = field.q
    m = q - 1
    i %= m
    j %= m
    counts = [0] * m
    dlog = field.dlog
    for x in range(2, q):
        y = field.sub(1, x)
        counts[(i * dlog[x] + j * dlog[y]) % m] += 1
    return get_ring(m).combine(counts)


def greene_binom(field: FiniteField, a: int, b: int) -> ScaledCyc:
    """The character-binomial chi^b(-1)/q * J(chi^a, chi^(-b)), normalized.

    chi^b(-1) is +-1 (it is a square root of 1), so the value is a cyclotomic
    integer divided by q.
    """
    q = field.q
    m = q - 1
    minus_one = field.neg(1)
    sign_exp = (b * field.dlog[minus_one]) % m if minus_one != 0 else 0
    sign = get_ring(m).zeta(sign_exp).as_int()
    if sign not in (1, -1):
        raise AssertionError("chi^b(-1) must be a rational sign")
    return scaled(jacobi_sum(field, a, -b) * sign, q)
