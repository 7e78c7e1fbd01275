"""Tour of the finite-field tables and multiplicative characters.

Builds a few small fields, shows how elements, generators and discrete logs
are laid out, and evaluates characters as exact cyclotomic integers.
"""

from jacobidet import char_eval, character, field_for_order, reduce_to_field

print("== F_7: a prime field ==")
f7 = field_for_order(7)
print(f"generator g = {f7.gen} (smallest primitive root)")
print(f"powers of g: {[f7.exp[t] for t in range(6)]}")
print(f"discrete logs: { {x: f7.dlog[x] for x in range(1, 7)} }")

print("\n== F_8: a binary extension field ==")
f8 = field_for_order(8)
print(f"modulus coefficients (x^0..x^3): {f8.modulus}")
print("elements are indexed in base-2 counting order of their coefficient vectors:")
for x in range(8):
    print(f"  index {x} <-> {f8.elems[x]}")
print(f"generator index: {f8.gen}")

print("\n== characters of F_7 ==")
# chi is pinned by chi(g) = zeta_6; chi^i(x) is then a table lookup.
chi = character(f7, 1)
for x in range(7):
    value = char_eval(chi, x)
    print(f"  chi({x}) = {value.coeffs} (coefficients over the power basis of Z[zeta_6])")
print("chi(0) = 0 by convention, for every character including the trivial one.")

print("\n== the reduction homomorphism Z[zeta_6] -> F_7 ==")
# Substituting zeta -> g turns character values back into field elements:
# chi becomes the identity map on nonzero elements (the Teichmuller property).
for x in range(1, 7):
    assert reduce_to_field(char_eval(chi, x), f7) == x
print("zeta -> g sends chi(x) back to x for every nonzero x: verified")
