"""Exact Jacobi sums and their arithmetic certificates.

J(chi^i, chi^j) = sum_x chi^i(x) chi^j(1-x) is computed exactly in
Z[zeta_{q-1}].  For nondegenerate pairs its norm certifies |J|^2 = q, and
the Galois group permutes the sums the way it permutes the characters.
"""

from jacobidet import (galois_apply, jacobi_sum, norm, field_for_order,
                       to_complex)

f5 = field_for_order(5)
print("== all Jacobi sums over F_5 (coefficients over 1, zeta_4) ==")
for i in range(1, 4):
    row = [jacobi_sum(f5, i, j).coeffs for j in range(1, 4)]
    print(f"  i={i}: {row}")

j = jacobi_sum(f5, 1, 1)
print(f"\nJ(chi, chi) = {j.coeffs}, i.e. -1 - 2i")
print(f"norm(J) = {norm(j)} = q: the |J|^2 = q certificate")
approx, radius = to_complex(j)
print(f"complex embedding: {approx:.6f} with rigorous radius {radius:.2e}")

print("\n== degenerate pairs ==")
print(f"J(chi, chi^-1) = {jacobi_sum(f5, 1, -1).as_int()}  (equals -chi(-1))")
print(f"J(1, 1) with both characters trivial = {jacobi_sum(f5, 0, 0).as_int()}  (counts q-2 terms)")
print(f"J(1, chi^j) = {jacobi_sum(f5, 0, 2).as_int()}  (collapses to -1)")

print("\n== Galois equivariance ==")
f13 = field_for_order(13)
lhs = galois_apply(5, jacobi_sum(f13, 1, 2))
rhs = jacobi_sum(f13, 5, 10)
print(f"sigma_5(J(chi, chi^2)) == J(chi^5, chi^10): {lhs == rhs}")

print("\n== a sum in an extension field ==")
f9 = field_for_order(9)
j9 = jacobi_sum(f9, 1, 1)
print(f"J over F_9 lives in Z[zeta_8]: coefficients {j9.coeffs}")
print(f"norm certificate: J * conj(J) = {(j9 * galois_apply(-1 % 8, j9)).as_int()}")
