"""Integer number-theory primitives: primality, factorization, divisors, Jacobi symbol.

Everything here is exact and deterministic.  Trial division is used where the
inputs are desk scale (field orders, divisor lattices); Miller-Rabin and
Pollard rho cover the large integers that come out of determinant sweeps.
"""

from __future__ import annotations

import math

# Deterministic Miller-Rabin witness set: correct for all n < 3.3 * 10^24,
# and a strong probabilistic test beyond that (only used to annotate tables).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime_trial(n: int) -> bool:
    """Primality by trial division.  Intended for desk-scale certification."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_prime(n: int) -> bool:
    """Miller-Rabin primality check (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = n + 1
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k


def trial_factor(n: int) -> dict[int, int]:
    """Complete prime factorization of n >= 1 by trial division."""
    if n < 1:
        raise ValueError("trial_factor expects n >= 1")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors(n: int) -> list[int]:
    """Sorted list of positive divisors of n >= 1."""
    divs = [1]
    for p, e in trial_factor(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def totient(n: int) -> int:
    phi = n
    for p in trial_factor(n):
        phi -= phi // p
    return phi


def _pollard_rho(n: int) -> int:
    # Brent's cycle variant; n must be odd composite.  Deterministic seed walk.
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"pollard rho failed on {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| for n != 0, using rho beyond the trial range."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    factors: dict[int, int] = {}
    stack = []
    d = 2
    while d * d <= n and d < 100000:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        stack.append(n)
    while stack:
        m = stack.pop()
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        f = _pollard_rho(m)
        stack.append(f)
        stack.append(m // f)
    return factors


def prime_power_split(q: int) -> tuple[int, int] | None:
    """Write q as p^n with p prime, or return None if q is not a prime power."""
    if q < 2:
        return None
    factors = trial_factor(q)
    if len(factors) != 1:
        return None
    ((p, n),) = factors.items()
    return p, n


def jacobi_symbol(a: int, m: int) -> int:
    """Jacobi symbol (a/m) for odd m >= 1, by quadratic reciprocity."""
    if m <= 0 or m % 2 == 0:
        raise ValueError("jacobi symbol needs odd positive modulus")
    a %= m
    t = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                t = -t
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            t = -t
        a %= m
    return t if m == 1 else 0
