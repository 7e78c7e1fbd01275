import json
import math
from fractions import Fraction

import pytest

from jacobidet.characters import Character, char_eval, jacobi_sum
from jacobidet.cyclotomic import get_ring, reduce_to_field
from jacobidet.detengine import det_bareiss, det_rational
from jacobidet.finite_field import field_for_order
from jacobidet.theorems import (SUITES, beta_det_closed_form, beta_matrix,
                                binomial_matrix, build_Jqk, char_vandermonde,
                                check_appendix, check_beta, check_corollary,
                                check_detJ1, check_detJ2, check_lerch,
                                check_lucas, check_proof_apparatus,
                                check_teichmuller, check_thm1,
                                detJ2_closed_form, pascal_matrix,
                                pascal_product_matrix, permutation_sign,
                                reflection_sign, run_suites,
                                square_char_vandermonde, suite_cases)


def _all_pass(reports):
    if not isinstance(reports, list):
        reports = [reports]
    bad = [r for r in reports if r.status != "pass"]
    assert not bad, bad
    return reports


def test_build_Jqk_examples():
    f5 = field_for_order(5)
    j52 = build_Jqk(f5, 2)
    assert (j52.rows, j52.cols) == (1, 1)
    assert j52.at(0, 0).as_int() == -1
    j31 = build_Jqk(field_for_order(3), 1)
    assert j31.at(0, 0).as_int() == 1
    j76 = build_Jqk(field_for_order(7), 6)
    assert (j76.rows, j76.cols) == (0, 0)
    with pytest.raises(ValueError):
        build_Jqk(f5, 3)


def test_thm1_examples():
    reports = _all_pass(check_thm1(7, 1))
    by_id = {r.check_id: r for r in reports}
    # det J_7(1) = 6^4 = 1296; exponent (2*30)/2 = 30 so the class is +1
    assert by_id["thm1.engines"].expected == "1296"
    assert by_id["thm1.congruence"].expected == "1"
    assert by_id["thm1.congruence"].computed == str(1296 % 7)
    _all_pass(check_thm1(5, 4))   # empty matrix: det 1, exponent 0
    _all_pass(check_thm1(9, 2))   # m = 4: class (-1)^18 = 1 mod 3
    _all_pass(check_thm1(13, 3))
    _all_pass(check_thm1(16, 5))


def test_thm1_generator_sweep_is_exhaustive_at_small_q():
    reports = check_thm1(13, 1)
    gen = next(r for r in reports if r.check_id == "thm1.generator")
    # phi(12) = 4 generators, so 3 alternatives beyond the canonical one
    assert gen.params["samples"] == 3
    assert gen.status == "pass"


def test_corollary_examples():
    # q=5, k=2: matrix [C(4,2)] = [6], exponent (3*4 - 1*2 - 2)/2 = 4
    r = check_corollary(5, 2)
    assert r.expected == "1" and r.computed == str(6 % 5) and r.status == "pass"
    # q=3, k=1: [C(2,1)] = [2], exponent 3: class -1 = 2 mod 3
    r = check_corollary(3, 1)
    assert r.expected == str(-1 % 3) and r.status == "pass"
    # q=7, k=1: 5x5 binomial determinant, exponent (2*36-2)/2 = 35: class -1
    r = check_corollary(7, 1)
    assert r.expected == str(-1 % 7) and r.status == "pass"
    with pytest.raises(ValueError):
        check_corollary(5, 4)  # m = 1


def test_binomial_matrix_entries():
    mat = binomial_matrix(2, 3)
    assert mat.entries == (math.comb(4, 2), math.comb(6, 2),
                           math.comb(6, 4), math.comb(8, 4))


def test_detJ1_examples():
    for q, val in [(3, 1), (4, 3), (5, 16)]:
        r = check_detJ1(q)
        assert r.status == "pass" and r.expected == str(val)


def test_detJ2_examples():
    for p, val in [(5, -1), (7, 6), (11, 375), (13, -3888)]:
        assert detJ2_closed_form(p) == val
        r = check_detJ2(p)
        assert r.status == "pass" and r.expected == str(val)
    with pytest.raises(ValueError):
        check_detJ2(3)
    with pytest.raises(ValueError):
        check_detJ2(9)


def test_teichmuller_spot_value():
    # q=5, i=j=1: J(chi^3, chi^3) = -1 + 2 zeta; substituting zeta -> 2 gives 3,
    # and -C(2,1) = -2 = 3 mod 5
    f5 = field_for_order(5)
    jac = jacobi_sum(f5, -1, -1)
    assert jac.coeffs == (-1, 2)
    assert reduce_to_field(jac, f5) == 3
    assert (-math.comb(2, 1)) % 5 == 3
    _all_pass(check_teichmuller(5))
    _all_pass(check_teichmuller(7))
    _all_pass(check_teichmuller(4))
    _all_pass(check_teichmuller(9))


def test_lerch_spot_values():
    # m=5, a=2: the permutation is a 4-cycle, sign -1, matching (2/5) = -1
    assert permutation_sign([2 * x % 5 for x in range(5)]) == -1
    # m=4, a=3: transposition (1 3): sign -1 = (-1)^((3-1)/2)
    assert permutation_sign([3 * x % 4 for x in range(4)]) == -1
    # m=6, a=5: double transposition, sign +1 (m = 2 mod 4 branch)
    assert permutation_sign([5 * x % 6 for x in range(6)]) == 1
    for m in range(2, 61):
        _all_pass(check_lerch(m))


def test_lucas_spot_values():
    assert math.comb(10, 4) % 3 == 0
    assert math.comb(3, 1) * math.comb(1, 1) % 3 == 0
    _all_pass(check_lucas(3, trials=300))
    _all_pass(check_lucas(2, trials=300))
    _all_pass(check_lucas(7, trials=300))


def test_apparatus_spot_values():
    # Delta_3 = chi(2) - chi(1) = -2
    f3 = field_for_order(3)
    assert char_vandermonde(f3).as_int() == -2
    # S_5 = chi(4) - chi(1) = -2
    f5 = field_for_order(5)
    assert square_char_vandermonde(f5).as_int() == -2
    # p=7: P_1 = 1 + zeta^2 + zeta^4 = 0 in Z[zeta_6]
    f7 = field_for_order(7)
    ring = get_ring(6)
    total = ring.zero
    for i in (1, 2, 3):
        total = total + char_eval(Character(f7, 1), (i * i) % 7)
    assert total.is_zero()


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 11, 13])
def test_apparatus_all_pass(q):
    _all_pass(check_proof_apparatus(q))


def test_reflection_sign_bruteforce():
    # q=5:

    # 1-x swaps 2 and 4, fixes 3: one transposition
    assert reflection_sign(field_for_order(5)) == -1
    assert reflection_sign(field_for_order(4)) == -1
    assert reflection_sign(field_for_order(3)) == 1


def test_appendix_examples():
    assert pascal_product_matrix(1).entries == (2,)
    assert det_bareiss(pascal_product_matrix(2)) == 3
    assert det_bareiss(pascal_matrix(3)) == 1
    # D_3 built as displayed: first row of ones, then binomial rows
    assert pascal_matrix(3).entries == (1, 1, 1, 1, 2, 3, 1, 3, 6)
    _all_pass(check_appendix(12))


def test_beta_examples():
    assert beta_matrix(2).entries == (Fraction(1), Fraction(1, 2),
                                      Fraction(1, 2), Fraction(1, 6))
    assert det_rational(beta_matrix(2)) == Fraction(-1, 12)
    assert beta_det_closed_form(2) == Fraction(-1, 12)
    assert beta_det_closed_form(1) == 1
    _all_pass(check_beta(8))
    # both sides computed independently at n = 5
    assert det_rational(beta_matrix(5)) == beta_det_closed_form(5)


def test_report_shape_and_sorting():
    reports = run_suites("detJ1", 9)
    blobs = [r.to_json() for r in reports]
    assert [list(b.keys()) for b in blobs] == \
        [["check_id", "params", "expected", "computed", "status", "claim"]] * len(blobs)
    qs = [b["params"]["q"] for b in blobs]
    assert qs == sorted(qs)
    assert blobs[0]["status"] == "skipped" and blobs[0]["params"]["q"] == 2
    assert json.dumps(blobs[0])


def test_run_suites_parallel_matches_serial():
    serial = run_suites("thm1", 8, jobs=1)
    parallel = run_suites("thm1", 8, jobs=2)
    assert [r.to_json() for r in serial] == [r.to_json() for r in parallel]


def test_suite_case_gating():
    detj2 = suite_cases("detJ2", 27)
    skips = {c[2].get("p") for c in detj2 if c[0] == "skip"}
    assert 3 in skips and 9 in skips and 25 in skips and 27 in skips
    checks = {c[1] for c in detj2 if c[0] == "detJ2"}
    assert checks == {5, 7, 11, 13, 17, 19, 23}
    assert ("thm1", 8, 7) in suite_cases("thm1", 8)
    with pytest.raises(ValueError):
        suite_cases("nope", 5)
    assert len(SUITES) == 10


def test_small_full_verify_is_green():
    reports = run_suites("all", 7)
    assert all(r.status != "fail" for r in reports)
    assert any(r.status == "skipped" for r in reports)
