"""Exact arithmetic in small finite fields.

Everything downstream (structure constants, gradings, loop expansions)
rests on exact F_{p^k} arithmetic: elements are coefficient tuples modulo
a fixed irreducible polynomial, and every helper is exhaustive rather than
probabilistic.
"""

from thinlie import combine_residues, field_create, find_roots, frobenius, pth_root

F9 = field_create(3, 2)
print(f"F_9 built with canonical modulus {list(F9.modulus)} (= t^2 + 1 over F_3)")

t = F9.generator()
print(f"t * t = {t * t}            (t^2 = -1)")
print(f"t^3   = {frobenius(t)}            (Frobenius sends t to -t)")
print(f"cube root of -t: {pth_root(-t)}  (inverse Frobenius)")

print("\nRoot finding is exhaustive evaluation, so it is trivially complete:")
F3 = field_create(3)
print("  roots of Z^3 - Z - 1 over F_3:", find_roots(F3, [-1, -1, 0, 1]) or "none (irreducible)")
print("  roots of Z^3 - Z     over F_3:", find_roots(F3, [0, -1, 0, 1]))

print("\nArtin-Schreier polynomials Z^p - sigma^(p-1) Z - 1 have either no")
print("root or a full coset rho + F_p sigma of them:")
for sigma in F9.elements():
    if not sigma:
        continue
    roots = find_roots(F9, [-F9.one, -(sigma ** 2), F9.zero, F9.one])
    if roots:
        print(f"  sigma = {sigma}: roots {roots}")

print("\nDegrees in the toral grading combine two residues by the Chinese")
print("remainder theorem, e.g. k = 1 mod (q-1) and k = 2 mod p for q = p = 3:")
print("  combine_residues(1, 2, 3) =", combine_residues(1, 2, 3))
