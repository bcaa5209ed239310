"""Tour of superpartition combinatorics.

A superpartition splits into a strictly decreasing fermionic side (which may
end in 0) and an ordinary partition.  This script walks through diagrams,
conjugation, the two orders, and enumeration.
"""

from supersym import SuperPartition, bruhat_leq, dominance_leq, enumerate_superpartitions
from supersym.superpartition import count_check

la = SuperPartition.parse("(3,1,0;4,3,2,1)")
print("Lambda          =", la)
print("bidegree (n|m)  =", la.bidegree)
print("length          =", la.length)
print("star (sorted)   =", la.star())

print("\ncircled diagram (each fermionic part ends in a circle):")
print(la.circled_diagram())
print("shape with circles counted:", la.shape_circled())

print("\nconjugation transposes the circled diagram:")
print("Lambda' =", la.conjugate())
print("(Lambda')' == Lambda:", la.conjugate().conjugate() == la)

print("\nall superpartitions of (3|2), in the listing order used everywhere:")
for x in enumerate_superpartitions(3, 2):
    print("  ", x)

print("\nthe two orders can disagree:")
u = SuperPartition.parse("(4,3,0;5,3,2,1)")
v = SuperPartition.parse("(5,2,1;4,3,3)")
print("  dominance u <= v:", dominance_leq(u, v))
print("  bruhat    u <= v:", bruhat_leq(u, v))
print("  bruhat    v <= u:", bruhat_leq(v, u))
print("  (comparable in dominance, incomparable in the refined order)")

print("\ncounting against the two-parameter q-series:")
rep = count_check(10)
print("  coefficients agree for n <= 10:", rep["pass"])
