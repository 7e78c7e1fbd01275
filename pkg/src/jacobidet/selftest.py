"""Module-level property suites, runnable from the CLI.

Each suite returns a list of failure descriptions (empty = pass).  The
suites implement the cross-cutting invariants: discrete-log laws and the
Frobenius automorphism for fields, homomorphism and Galois laws for the
cyclotomic ring, character multiplicativity and the norm certificate
|J|^2 = q, and determinant-engine consistency against a brute-force
cofactor oracle.  Everything is deterministic (fixed seeds).
"""

from __future__ import annotations

import math
import random
from itertools import permutations

from .characters import Character, char_eval, jacobi_sum
from .cyclotomic import (cyclotomic_poly, exact_div, galois_apply, get_ring,
                         norm, reduce_mod_prime, reduce_to_field, to_complex)
from .detengine import (cauchy_binet, det_bareiss, det_crt_integer,
                        det_float_check, int_matrix, transpose)
from .finite_field import field_for_order
from .primes import next_prime, prime_power_split, trial_factor
from .theorems import build_Jqk, permutation_sign

FIELD_SCALE = 64
CHARACTER_SCALE = 32


def _prime_powers(lo: int, hi: int) -> list[int]:
    return [q for q in range(lo, hi + 1) if prime_power_split(q) is not None]


def field_properties() -> list[str]:
    failures = []
    for q in _prime_powers(2, FIELD_SCALE):
        field = field_for_order(q)
        p, n = field.pp.p, field.pp.n
        for x in range(1, q):
            if field.exp[field.dlog[x]] != x:
                failures.append(f"q={q}: g^dlog({x}) != {x}")
        for x in range(1, q):
            for y in range(1, q):
                if field.dlog[field.mul(x, y)] != (field.dlog[x] + field.dlog[y]) % (q - 1):
                    failures.append(f"q={q}: dlog not additive at ({x},{y})")
        if n >= 2:
            frob = [field.pow(x, p) if x else 0 for x in range(q)]
            for x in range(q):
                for y in range(q):
                    if frob[field.add(x, y)] != field.add(frob[x], frob[y]):
                        failures.append(f"q={q}: Frobenius not additive at ({x},{y})")
                        break
            fixed = sorted(x for x in range(q) if frob[x] == x)
            if fixed != list(range(p)):
                failures.append(f"q={q}: Frobenius fixes {fixed}, expected the prime subfield")
        for r in range(1, q - 1):
            if math.gcd(r, q - 1) == 1:
                if field.order(field.pow(field.gen, r)) != q - 1:
                    failures.append(f"q={q}: g^{r} is not a generator")
    return failures


def cyclotomic_properties() -> list[str]:
    failures = []
    # multiplicative completeness of the cyclotomic factorization
    for m in range(1, 201):
        prod = [1]
        for d in range(1, m + 1):
            if m % d == 0:
                phi = list(cyclotomic_poly(d))
                out = [0] * (len(prod) + len(phi) - 1)
                for i, a in enumerate(prod):
                    for j, b in enumerate(phi):
                        out[i + j] += a * b
                prod = out
        target = [-1] + [0] * (m - 1) + [1]
        if prod != target:
            failures.append(f"m={m}: prod of cyclotomic factors != x^m - 1")
        if m >= 2:
            value = sum(cyclotomic_poly(m))  # Phi_m(1)
            split = prime_power_split(m)
            expected = split[0] if split else 1
            if value != expected:
                failures.append(f"m={m}: Phi_m(1) = {value}, expected {expected}")

    rng = random.Random(20240)
    for m in list(range(1, 13)) + [15, 16, 20, 24]:
        ring = get_ring(m)
        ell = next_prime(max(100, m))
        while (ell - 1) % m != 0:
            ell = next_prime(ell)
        t = _element_of_order(ell, m)
        exhaustive = m <= 12
        if exhaustive:
            sample = [ring.zeta(i) for i in range(m)]
            sample += [ring.element([rng.randint(-3, 3) for _ in range(ring.phi)])
                       for _ in range(3)]
        else:
            sample = [ring.element([rng.randint(-9, 9) for _ in range(ring.phi)])
                      for _ in range(6)]
        for a in sample:
            for b in sample:
                if reduce_mod_prime(a * b, ell, t) != \
                        reduce_mod_prime(a, ell, t) * reduce_mod_prime(b, ell, t) % ell:
                    failures.append(f"m={m}: reduce_mod_prime not multiplicative")
                if reduce_mod_prime(a + b, ell, t) != \
                        (reduce_mod_prime(a, ell, t) + reduce_mod_prime(b, ell, t)) % ell:
                    failures.append(f"m={m}: reduce_mod_prime not additive")
        if prime_power_split(m + 1) is not None and m >= 1:
            field = field_for_order(m + 1)
            for a in sample:
                for b in sample:
                    if reduce_to_field(a * b, field) != \
                            field.mul(reduce_to_field(a, field), reduce_to_field(b, field)):
                        failures.append(f"m={m}: reduce_to_field not multiplicative")
                    if reduce_to_field(a + b, field) != \
                            field.add(reduce_to_field(a, field), reduce_to_field(b, field)):
                        failures.append(f"m={m}: reduce_to_field not additive")
        units = [r for r in range(1, m + 1) if math.gcd(r, m) == 1]
        for a in sample[:6]:
            for _ in range(4):
                r, s = rng.choice(units), rng.choice(units)
                if galois_apply(r, galois_apply(s, a)) != galois_apply(r * s % m if m > 1 else 1, a):
                    failures.append(f"m={m}: Galois composition broken at r={r}, s={s}")
            b = sample[rng.randrange(len(sample))]
            if norm(a * b) != norm(a) * norm(b):
                failures.append(f"m={m}: norm not multiplicative")
            if not b.is_zero() and exact_div(a * b, b) != a:
                failures.append(f"m={m}: exact_div roundtrip failed")
            va, ra = to_complex(a)
            vb, rb = to_complex(b)
            vab, rab = to_complex(a + b)
            if abs(vab - (va + vb)) > ra + rb + rab:
                failures.append(f"m={m}: to_complex additivity outside radii")
    return failures


def _element_of_order(ell: int, m: int) -> int:
    for u in range(2, ell):
        t = pow(u, (ell - 1) // m, ell)
        if t == 1 and m > 1:
            continue
        if all(pow(t, m // r, ell) != 1 for r in trial_factor(m)):
            return t
        if m == 1:
            return t
    raise AssertionError


def character_properties() -> list[str]:
    failures = []
    for q in _prime_powers(3, CHARACTER_SCALE):
        field = field_for_order(q)
        ring = get_ring(q - 1)
        for i in range(q - 1):
            if not char_eval(Character(field, i), 0).is_zero():
                failures.append(f"q={q}: chi^{i}(0) != 0")
        for i in range(q - 1):
            chi = Character(field, i)
            for x in range(1, q):
                for y in range(1, q):
                    if char_eval(chi, field.mul(x, y)) != char_eval(chi, x) * char_eval(chi, y):
                        failures.append(f"q={q}: chi^{i} not multiplicative at ({x},{y})")
                        break
        conj_r = (q - 2) if q > 3 else 1  # -1 mod q-1
        for i in range(1, q - 1):
            for j in range(1, q - 1):
                jac = jacobi_sum(field, i, j)
                if jac != jacobi_sum(field, j, i):
                    failures.append(f"q={q}: J({i},{j}) not symmetric")
                if (i + j) % (q - 1) != 0:
                    if jac * galois_apply(conj_r, jac) != ring.element(q):
                        failures.append(f"q={q}: |J({i},{j})|^2 != q")
            minus_one = field.neg(1)
            target = -char_eval(Character(field, i), minus_one)
            if jacobi_sum(field, i, -i) != target:
                failures.append(f"q={q}: J(chi^{i}, chi^-{i}) != -chi^{i}(-1)")
    rng = random.Random(777)
    for q in (5, 7, 9, 13, 16):
        field = field_for_order(q)
        units = [r for r in range(1, q - 1) if math.gcd(r, q - 1) == 1]
        for _ in range(5):
            i, j = rng.randrange(1, q - 1), rng.randrange(1, q - 1)
            r = rng.choice(units)
            if galois_apply(r, jacobi_sum(field, i, j)) != jacobi_sum(field, r * i, r * j):
                failures.append(f"q={q}: Galois equivariance fails at (i={i}, j={j}, r={r})")
    return failures


def _det_cofactor(rows):
    n = len(rows)
    if n == 0:
        return 1
    total = 0
    for perm in permutations(range(n)):
        term = permutation_sign(list(perm))
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def detengine_properties() -> list[str]:
    failures = []
    rng = random.Random(31337)
    for _ in range(60):
        n = rng.randint(0, 5)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        mat = int_matrix(rows)
        d = det_bareiss(mat)
        if d != _det_cofactor(rows):
            failures.append(f"bareiss vs cofactor oracle on {rows}")
        if d != det_bareiss(transpose(mat)):
            failures.append(f"det(M^T) != det(M) on {rows}")
        if n >= 2:
            perm = list(range(n))
            rng.shuffle(perm)
            permuted = int_matrix([rows[i] for i in perm])
            if det_bareiss(permuted) != permutation_sign(perm) * d:
                failures.append(f"permutation sign law fails on {rows} perm {perm}")
    for _ in range(25):
        n = rng.randint(1, 6)
        r = rng.randint(1, n)
        m_rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(r)]
        n_rows = [[rng.randint(-5, 5) for _ in range(r)] for _ in range(n)]
        direct, expansion, ok = cauchy_binet(int_matrix(m_rows), int_matrix(n_rows))
        if not ok:
            failures.append(f"cauchy-binet mismatch: {direct} vs {expansion}")
    for q in (4, 5, 7, 9):
        field = field_for_order(q)
        mat = build_Jqk(field, 1)
        bare = det_bareiss(mat).as_int()
        crt = det_crt_integer(mat)
        flo = det_float_check(mat)
        if crt.value != bare:
            failures.append(f"q={q}: crt {crt.value} != bareiss {bare}")
        prod = math.prod(crt.certificate["primes"])
        if prod <= 2 * abs(crt.value):
            failures.append(f"q={q}: CRT modulus {prod} does not certify {crt.value}")
        if flo.certificate["conclusive"] and flo.value != bare:
            failures.append(f"q={q}: conclusive float {flo.value} != bareiss {bare}")
        if (q - 1) ** (q - 3) != bare:
            failures.append(f"q={q}: det J_q(1) != (q-1)^(q-3)")
    return failures


SUITE_FUNCS = (
    ("finite_field", field_properties),
    ("cyclotomic", cyclotomic_properties),
    ("characters", character_properties),
    ("detengine", detengine_properties),
)


def run_all() -> list[tuple[str, list[str]]]:
    """Run every property suite; returns (name, failures) pairs."""
    return [(name, func()) for name, func in SUITE_FUNCS]
