import math
import random
from fractions import Fraction
from itertools import permutations

import pytest

from jacobidet.cyclotomic import get_ring
from jacobidet.detengine import (CycMatrix, cauchy_binet,
                                 cyc_matrix, det_bareiss, det_crt_integer,
                                 det_float_check, det_rational, hadamard_bound,
                                 int_matrix, matmul, rat_matrix, submatrix,
                                 transpose)
from jacobidet.finite_field import field_for_order
from jacobidet.selftest import detengine_properties
from jacobidet.theorems import build_Jqk, permutation_sign


def _det_cofactor(rows):
    # independent oracle: Leibniz expansion, no division anywhere
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        term = permutation_sign(list(perm))
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term
    return total


def test_bareiss_examples():
    assert det_bareiss(int_matrix([[2, 3], [3, 6]])) == 3
    assert det_bareiss(int_matrix([])) == 1  # 0x0 convention
    j3 = build_Jqk(field_for_order(3), 1)
    assert det_bareiss(j3).as_int() == 1


def test_bareiss_vs_cofactor_int():
    rng = random.Random(99)
    for _ in range(120):
        n = rng.randint(0, 5)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert det_bareiss(int_matrix(rows)) == _det_cofactor(rows)


def test_bareiss_vs_cofactor_cyclotomic():
    rng = random.Random(101)
    for m in (3, 4, 6, 8):
        ring = get_ring(m)
        for _ in range(20):
            n = rng.randint(1, 4)
            rows = [[ring.element([rng.randint(-4, 4) for _ in range(ring.phi)])
                     for _ in range(n)] for _ in range(n)]
            got = det_bareiss(cyc_matrix(ring, rows))
            want = _det_cofactor(rows)
            assert got == want


def test_bareiss_zero_column_and_pivoting():
    assert det_bareiss(int_matrix([[0, 0], [1, 5]])) == 0
    # leading zero forces a row swap (sign flip)
    assert det_bareiss(int_matrix([[0, 1], [1, 0]])) == -1
    assert det_bareiss(int_matrix([[0, 2, 1], [3, 0, 0], [0, 0, 1]])) == -6


def test_transpose_and_permutation_laws():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        mat = int_matrix(rows)
        assert det_bareiss(mat) == det_bareiss(transpose(mat))
        perm = list(range(n))
        rng.shuffle(perm)
        assert det_bareiss(int_matrix([rows[i] for i in perm])) == \
            permutation_sign(perm) * det_bareiss(mat)


def test_det_rational_examples():
    assert det_rational(rat_matrix([[1]])) == 1  # B(1,1)
    b2 = rat_matrix([[1, Fraction(1, 2)], [Fraction(1, 2), Fraction(1, 6)]])
    # direct 2x2 oracle: 1/6 - 1/4
    assert Fraction(1, 6) - Fraction(1, 4) == Fraction(-1, 12)
    assert det_rational(b2) == Fraction(-1, 12)
    assert det_rational(rat_matrix([[Fraction(3, 7), 0], [0, Fraction(7, 3)]])) == 1
    assert det_rational(rat_matrix([])) == 1


def test_hadamard_examples():
    r4 = get_ring(4)
    assert hadamard_bound(int_matrix([[1, 1], [1, 1]])) == 2  # sqrt(2)*sqrt(2)
    assert hadamard_bound(int_matrix([[3, 4], [0, 5]])) == 25
    assert hadamard_bound(CycMatrix(r4, 1, 1, (r4.element([-1, -2]),))) == 3
    assert hadamard_bound(int_matrix([])) == 1


def test_hadamard_dominates_det():
    rng = random.Random(13)
    for _ in range(30):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert abs(det_bareiss(int_matrix(rows))) <= hadamard_bound(int_matrix(rows))


def test_crt_frozen_example():
    # with the floor lowered, J_5(1) reconstructs from ell = 13 and 17
    mat = build_Jqk(field_for_order(5), 1)
    res = det_crt_integer(mat, prime_floor=12)
    assert res.value == 16
    assert res.certificate["primes"] == [13, 17]
    assert res.certificate["residues"] == [3, 16]
    assert res.certificate["extra_prime"] == 29
    assert res.certificate["bound"] == 83


def test_crt_cases():
    r4 = get_ring(4)
    one_by_one = CycMatrix(r4, 1, 1, (r4.element(-7),))
    assert det_crt_integer(one_by_one).value == -7
    assert det_crt_integer(CycMatrix(r4, 0, 0, ())).value == 1
    j72 = build_Jqk(field_for_order(7), 2)
    assert det_crt_integer(j72).value == 6
    # certificate property: modulus product strictly exceeds twice the bound
    res = det_crt_integer(build_Jqk(field_for_order(9), 1))
    assert math.prod(res.certificate["primes"]) > 2 * res.certificate["bound"]
    assert res.certificate["bound"] >= abs(res.value)


def test_crt_default_floor():
    res = det_crt_integer(build_Jqk(field_for_order(5), 1))
    assert all(p > (1 << 16) for p in res.certificate["primes"])
    assert res.value == 16


def test_crt_prime_cap():
    with pytest.raises(ArithmeticError):
        det_crt_integer(build_Jqk(field_for_order(9), 1), max_primes=1)


def test_float_examples():
    j41 = build_Jqk(field_for_order(4), 1)
    res = det_float_check(j41)
    assert res.value == 3 and res.certificate["conclusive"]
    assert res.certificate["distance"] < 0.25
    j52 = build_Jqk(field_for_order(5), 2)
    assert det_float_check(j52).value == -1
    r4 = get_ring(4)
    zero = CycMatrix(r4, 2, 2, (r4.zero,) * 4)
    res = det_float_check(zero)
    assert res.value == 0 and res.certificate["conclusive"]
    assert det_float_check(CycMatrix(r4, 0, 0, ())).value == 1


def test_float_inconclusive_is_not_a_pass():
    # det J_27(1) = 26^24 ~ 1e34: far beyond float integer resolution
    res = det_float_check(build_Jqk(field_for_order(27), 1))
    assert res.value is None
    assert not res.certificate["conclusive"]
    assert res.certificate["budget"] > 0.25


def test_cauchy_binet_examples():
    m = int_matrix([[1, 2]])
    n = int_matrix([[3], [4]])
    direct, expansion, ok = cauchy_binet(m, n)
    assert (direct, expansion, ok) == (11, 11, True)
    # r = n reduces to det(M) det(N)
    a = int_matrix([[2, 1], [0, 3]])
    b = int_matrix([[1, 1], [4, 5]])
    direct, expansion, ok = cauchy_binet(a, b)
    assert ok and direct == det_bareiss(a) * det_bareiss(b)
    rng = random.Random(3)
    for _ in range(30):
        n_dim = rng.randint(1, 6)
        r = rng.randint(1, n_dim)
        mm = int_matrix([[rng.randint(-5, 5) for _ in range(n_dim)] for _ in range(r)])
        nn = int_matrix([[rng.randint(-5, 5) for _ in range(r)] for _ in range(n_dim)])
        assert cauchy_binet(mm, nn)[2]
    with pytest.raises(ValueError):
        cauchy_binet(int_matrix([[1], [2]]), int_matrix([[1], [2]]))


def test_matrix_basics():
    rows = [[1, 2, 3], [4, 5, 6]]
    mat = int_matrix(rows)
    assert mat.at(1, 2) == 6
    assert transpose(mat).at(2, 1) == 6
    assert submatrix(mat, [1], [0, 2]).entries == (4, 6)
    prod = matmul(mat, transpose(mat))
    assert prod.entries == (14, 32, 32, 77)
    with pytest.raises(ValueError):
        matmul(mat, mat)
    with pytest.raises(ValueError):
        CycMatrix(get_ring(4), 2, 2, (get_ring(4).one,))
    with pytest.raises(ValueError):
        det_bareiss(mat)


def test_detresult_json():
    res = det_crt_integer(build_Jqk(field_for_order(5), 1), prime_floor=12)
    blob = res.to_json()
    assert blob["value"] == "16" and blob["method"] == "crt"
    assert blob["certificate"]["primes"] == ["13", "17"]
    flo = det_float_check(build_Jqk(field_for_order(4), 1))
    fb = flo.to_json()
    assert fb["value"] == "3" and fb["certificate"]["conclusive"] is True


def test_module_invariants():
    assert detengine_properties() == []
