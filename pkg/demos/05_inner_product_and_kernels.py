"""Scalar product, the e-h involution, and reproducing kernels.

Power sums diagonalize the form with weights z; complete and monomial
families are dual; the Cauchy kernel reproduces symmetric functions.
"""

from supersym import SuperPartition
from supersym.transform import BasisExpansion
from supersym.inner import (
    dual_bases_check,
    kernel_check,
    omega,
    reproducing_check,
    scalar_product,
    z_weight,
)


def unit(basis, text):
    return BasisExpansion.unit(basis, SuperPartition.parse(text))


print("power-sum norms are the z-weights:")
for text in ["(;2)", "(;1,1)", "(1;)", "(0;1)"]:
    x = unit("p", text)
    print(f"   <p_{text}, p_{text}> = {scalar_product(x, x)}   z = {z_weight(SuperPartition.parse(text))}")
print("cross terms vanish:", scalar_product(unit("p", "(1;)"), unit("p", "(0;1)")) == 0)

print("\nthe involution swaps e and h and is a signed identity on p:")
for la, c in omega(unit("p", "(3,0;1)")).items_sorted():
    print(f"   omega(p_(3,0;1)) = {c} * p_{la}")

print("\nduality tables (True means the Gram matrix is the identity):")
print("   (h, m)   on (3|1):", dual_bases_check(3, 1, "h", "m"))
print("   (p, p)   on (2|0):", dual_bases_check(2, 0, "p", "p"))
print("   (p, p/z) on (3|2):", dual_bases_check(3, 2, "p", "p/z"))

print("\nkernel checks on a small double alphabet (N=3, degree 2):")
rep = kernel_check(3, 2)
print("   product == p-sum == m*h-sum, inverse with omega weights:", rep["pass"])
rep = reproducing_check(4, 2)
print("   pairing the kernel against m reproduces m:", rep["pass"])
