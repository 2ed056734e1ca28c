"""Permanents, maximal minors and the three characteristic maxpolynomials.

For a square max-plus matrix A:

  * perm(A) is the best assignment value: max over permutations of the
    diagonal sum;
  * delta_k(A) / eta_k(A) are the maximal principal / arbitrary minors of
    order k, and they fill the coefficients of the characteristic
    maxpolynomial chi_A and the full characteristic maxpolynomial;
  * the full characteristic maxpolynomial is always in full canonical form
    (the eta ladder is concave); chi_A need not be;
  * the Gram characteristic maxpolynomial of A factors over the column
    maxima of A.

Run with:  python demos/02_characteristic_maxpolynomials.py
"""

from maxplus import (
    MaxMatrix,
    char_poly,
    delta_ladder,
    eta_ladder,
    full_char_poly,
    gram_char_poly,
    hat,
    is_principally_dominant,
    nu,
    permanent,
)


def show(label, value):
    print(f"{label:<38} {value}")


A = MaxMatrix([[2, "-inf"], ["-inf", 0]])
B = MaxMatrix([[0, 10], [10, 0]])

print("=== a 2x2 pair ===")
print("A:")
print(A)
print("B:")
print(B)
show("perm(A), perm(B):", f"{permanent(A)}, {permanent(B)}")
show("delta ladder of B:", ", ".join(str(x) for x in delta_ladder(B)))
show("eta ladder of B:", ", ".join(str(x) for x in eta_ladder(B)))

show("chi_A:", char_poly(A))
show("full chi_A:", full_char_poly(A))
show("chi_B:", char_poly(B))
show("full chi_B:", full_char_poly(B))
show("full chi_B factored:", full_char_poly(B).format_factored())
show("chi_B in full canonical form?", char_poly(B).is_fcf())
show("full chi_B in full canonical form?", full_char_poly(B).is_fcf())

# Principal dominance: every maximal minor achieved on a principal
# submatrix, equivalently chi = full chi.
show("A principally dominant?", is_principally_dominant(A))
show("B principally dominant?", is_principally_dominant(B))

# The largest eigenvalue is the largest root of chi.
show("nu(A), nu(B):", f"{nu(A)}, {nu(B)}")

print()
print("=== dominance can break under sums ===")
L = MaxMatrix([[6, 5, 0, 0], [5, 0, 3, 0], [0, 2, 0, 0], [0, 0, 0, 0]])
R = MaxMatrix([[6, 5, 0, 0], [5, 0, 0, 2], [0, 0, 0, 0], [0, 3, 0, 0]])
C = L + R
print("L (+) R:")
print(C)
show("L dominant?", is_principally_dominant(L))
show("R dominant?", is_principally_dominant(R))
show("L (+) R dominant?", is_principally_dominant(C))
show("eta_3 of the sum:", ", ".join(str(x) for x in eta_ladder(C)[3:4]))
show("delta_3 of the sum:", ", ".join(str(x) for x in delta_ladder(C)[3:4]))
# eta_3 = 12 comes from entries 6, 3, 3 in rows {1,2,4} and columns
# {1,3,2}; no principal 3x3 submatrix reaches it.

print()
print("=== Gram characteristic maxpolynomials ===")
M = MaxMatrix([[2, 0, 3, -1], [0, 0, 1, 1], [-2, 2, 2, 1], [2, -1, 1, 1]])
print("M:")
print(M)
print("hat(M) = ((M^T M))^(1/2):")
print(hat(M))
show("gram poly (roots = column maxima):", gram_char_poly(M).format_factored())
show("equals chi of hat(M)?", gram_char_poly(M) == char_poly(hat(M)))
