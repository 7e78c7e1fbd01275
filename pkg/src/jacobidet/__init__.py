"""jacobidet: exact Jacobi-sum matrices over finite fields and their determinants.

The library builds fully tabulated finite fields, evaluates multiplicative
characters and Jacobi sums exactly in Z[zeta_{q-1}], computes determinants by
three mutually checking engines (fraction-free Bareiss, CRT reconstruction,
and a floating-point cross-check with a rigorous error budget), and verifies
a family of exact determinant identities and congruences at desk scale.
"""

from .characters import Character, char_eval, character, greene_binom, jacobi_sum
from .cyclotomic import (CycInt, CycRing, NotDivisibleError, ScaledCyc,
                         as_rational_integer, cyc_arith, cyclotomic_poly,
                         exact_div, galois_apply, get_ring, norm,
                         reduce_mod_prime, reduce_to_field, scaled, to_complex,
                         zeta_pow)
from .detengine import (CycMatrix, DetResult, IntMatrix, RatMatrix,
                        cauchy_binet, cyc_matrix, det_bareiss, det_crt_integer,
                        det_float_check, det_rational, hadamard_bound,
                        int_matrix, matmul, rat_matrix, submatrix, transpose)
from .finite_field import (FiniteField, PrimePower, build_field,
                           divisors_and_factorization, field_arith,
                           field_for_order, find_irreducible, prime_power,
                           prime_power_from_order)
from .theorems import (SUITES, VerificationReport, build_Jqk, check_appendix,
                       check_beta, check_corollary, check_detJ1, check_detJ2,
                       check_lerch, check_lucas, check_proof_apparatus,
                       check_teichmuller, check_thm1, run_suites)

__version__ = "0.1.0"
