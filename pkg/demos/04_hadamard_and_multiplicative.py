"""Hadamard products and the multiplicative convolution, on a 4x4 pair.

The Hadamard (entrywise) product of two full characteristic maxpolynomials
is again a finite maximum over permuted entrywise sums.  The multiplicative
version replaces the entrywise sum by a genuine matrix product A P B, and
needs a compatibility hypothesis: the transposed first matrix and the
second matrix must share a max-column partition (the grouping of sorted
column ranks by the row positions of the column maxima).  When they do, a
single orienting permutation P0 attains the maximum, and a second one Q0
moves the decoupled maxima onto the diagonal.

Run with:  python demos/04_hadamard_and_multiplicative.py
"""

from maxplus import (
    MaxMatrix,
    char_poly,
    full_char_poly,
    gram_char_poly,
    hadamard_conv_rhs,
    max_column_partitions,
    mult_conv_rhs,
    orienting_permutations,
    shared_partition,
    verify,
)


def show(label, value):
    print(f"{label:<44} {value}")


print("=== Hadamard product of full characteristic maxpolynomials ===")
A2 = MaxMatrix([[2, "-inf"], ["-inf", 0]])
B2 = MaxMatrix([[0, 10], [10, 0]])
ph = full_char_poly(A2).hadamard(full_char_poly(B2))
show("polynomial side (coefficientwise sums):", ph)
show("matrix side, max over (P, Q) of A o PBQ:", hadamard_conv_rhs(A2, B2))
show("ordered roots add:", ", ".join(str(r) for r in ph.roots()))

print()
print("=== the worked 4x4 multiplicative pair ===")
A = MaxMatrix([[2, 0, 3, -1], [0, 0, 1, 1], [-2, 2, 2, 1], [2, -1, 1, 1]])
B = MaxMatrix([[0, 0, -2, 2], [-2, 1, -1, -1], [-1, 0, -3, -1], [-1, -2, -1, 0]])
print("A:")
print(A)
print("B:")
print(B)

p = gram_char_poly(A.T)  # roots: row maxima of A
q = gram_char_poly(B)  # roots: column maxima of B
show("p (gram poly of A^T):", p.format_factored())
show("q (gram poly of B):", q.format_factored())
pq = p.hadamard(q)
show("p o q:", pq.format_factored())
show("root sums (3,2,2,1) + (2,1,0,-1):", ", ".join(str(r) for r in pq.roots()))

print()
print("=== max-column partitions ===")
parts_b, _ = max_column_partitions(B)
show("partitions of B (ties give two):", "; ".join(x.format() for x in parts_b))
parts_at, _ = max_column_partitions(A.T)
show("partitions of A^T:", "; ".join(x.format() for x in parts_at))
sp = shared_partition(A, B)
show("shared partition:", sp.format())

print()
print("=== the multiplicative identity and its orientation ===")
rhs = mult_conv_rhs(A, B)
show("max over P of full chi of A P B:", rhs.format_factored())
show("equals p o q?", rhs == pq)

P0, Q0 = orienting_permutations(A, B)
show("orienting row permutation P0:", P0)
show("diagonalising column permutation Q0:", Q0)
prod = A @ B.permute_rows(P0)
print("A P0 B (the maximum is attained here):")
print(prod)
show("full chi of A P0 B:", full_char_poly(prod).format_factored())
final = prod.permute_cols(Q0)
print("A P0 B Q0 (decoupled maxima on the diagonal):")
print(final)
show("plain chi now equals it:", char_poly(final).format_factored())

print()
print("=== seeded verification at scale ===")
for theorem in ("hadamard", "mult"):
    report = verify.run(theorem, n=3, trials=100, seed=7)
    print(f"{theorem:<9} n=3: {report.summary()}")
