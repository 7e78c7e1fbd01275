import math

import pytest

from jacobidet.primes import (divisors, factorize, is_prime, is_prime_trial,
                              jacobi_symbol, next_prime, prime_power_split,
                              totient, trial_factor)


def test_trial_and_mr_agree_small():
    for n in range(10000):
        assert is_prime_trial(n) == is_prime(n), n


def test_next_prime():
    assert next_prime(0) == 2
    assert next_prime(2) == 3
    assert next_prime(13) == 17
    assert next_prime(65536) == 65537


@pytest.mark.parametrize("n", [1, 2, 12, 48, 97, 360, 2**10, 3 * 5 * 7 * 11])
def test_trial_factor_reconstructs(n):
    factors = trial_factor(n)
    assert math.prod(p**e for p, e in factors.items()) == n
    assert all(is_prime_trial(p) for p in factors)


def test_divisors_bruteforce():
    for n in range(1, 200):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_totient_bruteforce():
    for n in range(1, 100):
        assert totient(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_factorize_large():
    n = 48**46
    factors = factorize(n)
    assert factors == {2: 4 * 46, 3: 46}
    # semiprime beyond the trial range
    a, b = 1000003, 1000033
    assert factorize(a * b) == {a: 1, b: 1}
    assert factorize(-12) == {2: 2, 3: 1}


def test_prime_power_split():
    assert prime_power_split(27) == (3, 3)
    assert prime_power_split(32) == (2, 5)
    assert prime_power_split(7) == (7, 1)
    assert prime_power_split(12) is None
    assert prime_power_split(1) is None


def _legendre(a, p):
    v = pow(a % p, (p - 1) // 2, p)
    return -1 if v == p - 1 else v


def _jacobi_bruteforce(a, m):
    out = 1
    for p, e in trial_factor(m).items():
        out *= _legendre(a, p) ** e
    return out


def test_jacobi_symbol_vs_euler_criterion():
    for m in range(1, 62, 2):
        for a in range(1, m + 1):
            if math.gcd(a, m) == 1:
                assert jacobi_symbol(a, m) == _jacobi_bruteforce(a, m), (a, m)
            else:
                assert jacobi_symbol(a, m) == 0


def test_jacobi_symbol_rejects_even_modulus():
    with pytest.raises(ValueError):
        jacobi_symbol(3, 4)
