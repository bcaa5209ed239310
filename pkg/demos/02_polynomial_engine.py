"""The exact polynomial engine underneath everything.

Polynomials live in N commuting variables x1..xN and N anticommuting
variables t1..tN.  Coefficients are exact rationals, theta monomials are
kept with strictly increasing indices, and every reordering folds its sign
into the coefficient.
"""

from supersym import SuperPolynomial

P = SuperPolynomial

t1, t2, t3 = (P.theta(i, 3) for i in (1, 2, 3))
x1, x2 = P.x(1, 3), P.x(2, 3)

print("t2 * t1          =", (t2 * t1).render())
print("t1 * t1          =", (t1 * t1).render())
print("(x1 + t1 t2)^2   =", ((x1 + t1 * t2) * (x1 + t1 * t2)).render())

print("\nthe arrow involution reverses theta factors, a pure sign per sector:")
f = t1 * t2 * x1
print("f        =", f.render())
print("arrow(f) =", f.arrow().render())

print("\nsymmetry means invariance under simultaneous x/theta exchanges:")
g = P.term(2, 1, {1: 4}, thetas=(1,)) + P.term(2, 1, {2: 4}, thetas=(2,))
print("g =", g.render())
print("g symmetric:", g.is_symmetric())
h = P.term(2, 1, {1: 1}, thetas=(1,))
print("t1 x1 symmetric:", h.is_symmetric())

print("\nexact rational coefficients survive arithmetic unharmed:")
from fractions import Fraction

q = g.scale(Fraction(1, 3))
print("g/3       =", q.render())
print("3*(g/3)   =", q.scale(3).render())
print("g*g == 0  :", (g * g).is_zero(), " (odd sectors square to zero)")
