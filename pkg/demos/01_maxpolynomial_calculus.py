"""A tour of the maxpolynomial calculus.

Max-plus arithmetic replaces + by max and * by +, with -inf as the additive
identity.  A maxpolynomial p(x) = max_k (a_k + k x) is a convex
piecewise-affine function of x; its tropical roots are the corner points,
with multiplicity equal to the slope change.

Run with:  python demos/01_maxpolynomial_calculus.py
"""

from maxplus import EPS, MaxScalar, Maxpolynomial, odot, oplus


def show(label, value):
    print(f"{label:<34} {value}")


print("=== scalars ===")
show("3 (+) 5 = max(3, 5):", oplus(MaxScalar(3), MaxScalar(5)))
show("3 (.) 5 = 3 + 5:", odot(MaxScalar(3), MaxScalar(5)))
show("-inf absorbs products:", odot(EPS, MaxScalar(7)))
show("-inf is neutral for (+):", oplus(EPS, MaxScalar(7)))

print()
print("=== polynomials and roots ===")
# Coefficients are listed ascending: a_0, a_1, ..., a_n.
p = Maxpolynomial([1, 0, -1])  # (-1)x^2 (+) x (+) 1
q = Maxpolynomial([0, 0, 0])  # x^2 (+) x (+) 0
show("p =", p)
show("q =", q)
show("p in full canonical form?", p.is_fcf())
show("p factored:", p.format_factored())
show("p (+) q =", p + q)
show("p * q =", p * q)
show("(p * q) factored:", (p * q).format_factored())

# The sum is NOT in full canonical form: its coefficient sequence is not
# concave, and its roots no longer sit at coefficient differences.
s = p + q
show("p (+) q in full canonical form?", s.is_fcf())
show("roots of p (+) q:", ", ".join(str(r) for r in s.roots()))
show("concavified:", s.concavify())
show("same function?", s.functionally_equals(s.concavify()))

print()
print("=== derivative = root removal ===")
# The derivative shifts coefficients down one slot.  On a polynomial in
# full canonical form it removes the smallest root.
f = Maxpolynomial.from_roots(0, [3, 2, 2, 1])
show("f =", f)
show("f factored:", f.format_factored())
show("f' factored:", f.derivative().format_factored())
show("f'' factored:", f.derivative(2).format_factored())
show("f roots:", ", ".join(str(r) for r in f.roots()))
show("f' roots:", ", ".join(str(r) for r in f.derivative().roots()))

print()
print("=== evaluation ===")
g = Maxpolynomial([4, 4, 0])  # x^2 (+) 4x (+) 4
show("g =", g)
for x in (EPS, MaxScalar(0), MaxScalar(4), MaxScalar(10)):
    show(f"g^({x}) =", g.evaluate(x))

print()
print("=== convolution of polynomials ===")
# The order-k max convolution is the k-th derivative of the product.
a = Maxpolynomial([2, 2, 0])
b = Maxpolynomial([20, 0, 0])
show("a =", a)
show("b =", b)
conv = a.max_convolve(b, 2)
show("a convolved with b (order 2):", conv)
show("its roots:", ", ".join(str(r) for r in conv.roots()))
# For inputs in full canonical form the roots of the order-k convolution
# are the top m+n-k roots of the union; here the two 10s win.
