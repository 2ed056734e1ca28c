"""The additive convolution identities, checked by exhaustive enumeration.

The order-n max convolution of two full characteristic maxpolynomials
equals a finite maximum over permuted matrix sums:

    (p #n q)(x) = max over P, Q of full_char_poly(A (+) P B Q)

with permutation matrices P, Q (the max-plus orthogonal matrices).  For
principally dominant matrices the n! conjugations A (+) P B P^T and the
plain characteristic maxpolynomials suffice; and the max-row convolution
couples the row maxima of the two matrices.

Everything is exact, so the identities can be checked coefficient by
coefficient.  Run with:  python demos/03_additive_convolutions.py
"""

from maxplus import (
    MaxMatrix,
    additive_conv_rhs,
    char_poly,
    full_char_poly,
    gen_matrix,
    gen_pd_matrix,
    gram_char_poly,
    max_row_conv,
    pd_conv_rhs,
    row_maxima,
    verify,
)


def show(label, value):
    print(f"{label:<42} {value}")


A = MaxMatrix([[2, "-inf"], ["-inf", 0]])
B = MaxMatrix([[0, 10], [10, 0]])
B_PRIME = MaxMatrix([[10, 0], [0, 10]])

print("=== the (n!)^2 identity ===")
p, q = full_char_poly(A), full_char_poly(B)
show("full chi_A:", p)
show("full chi_B:", q)
lhs = p.max_convolve(q, 2)
rhs = additive_conv_rhs(A, B)
show("polynomial side (p #2 q):", lhs)
show("matrix side, max over (P, Q):", rhs)
show("equal?", lhs == rhs)

poly, cert = additive_conv_rhs(A, B, certificate=True)
print("argmax certificate (one pair per coefficient):")
for k in sorted(cert):
    if cert[k] is not None:
        P, Q = cert[k]
        print(f"  coefficient of x^{2 - k}: P = {P}, Q = {Q}")

print()
print("=== the n! identity for principally dominant matrices ===")
lhs_pd = char_poly(A).max_convolve(char_poly(B_PRIME), 2)
rhs_pd = pd_conv_rhs(A, B_PRIME)
show("polynomial side:", lhs_pd)
show("matrix side, max over P:", rhs_pd)
show("factored:", rhs_pd.format_factored())
# pd_conv_rhs refuses matrices that are not principally dominant (B above
# fails at order 1), because the theorem's hypotheses matter.
try:
    pd_conv_rhs(A, B)
except ValueError as exc:
    show("non-dominant input rejected:", exc)

print()
print("=== the max-row convolution ===")
mr = max_row_conv(A, B)
show("max over P of gram poly of (A (+) PB)^T:", mr)
ma = ", ".join(str(x) for x in row_maxima(A))
mb = ", ".join(str(x) for x in row_maxima(B))
show("row maxima of A and B:", f"({ma}) and ({mb})")
show("roots = top-2 of the row maxima:", ", ".join(str(r) for r in mr.roots()))
show(
    "equals the convolution of gram polys?",
    mr == gram_char_poly(A.T).max_convolve(gram_char_poly(B.T), 2),
)

print()
print("=== seeded verification at scale ===")
for theorem in ("additive", "pd", "maxrow"):
    report = verify.run(theorem, n=3, trials=100, seed=7)
    print(f"{theorem:<10} n=3: {report.summary()}")

print()
print("=== a random instance, spelled out ===")
X = gen_matrix(3, seed=2024)
Y = gen_pd_matrix(3, seed=2025)
print("X:")
print(X)
print("Y (diagonally dominant):")
print(Y)
show("additive identity holds?", additive_conv_rhs(X, Y)
     == full_char_poly(X).max_convolve(full_char_poly(Y), 3))
